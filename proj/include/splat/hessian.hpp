#pragma once

#include <vector>

#include "splat/jacobian.hpp"
#include "splat/symmat.hpp"

namespace splat {

enum class HessianKind { SimpleDiagonal, BlockDiagonal };

const char* to_string(HessianKind k);

// J_i^T J_i of one view, reduced to the chosen approximation: either the main
// diagonal or the per-Gaussian symmetric blocks (cross-Gaussian products are
// discarded by construction). Rows are accumulated in storage order, which
// fixes the floating-point result.
struct JtJContribution {
    HessianKind kind = HessianKind::SimpleDiagonal;
    ParamLayout layout;
    std::vector<double> diag;        // SimpleDiagonal
    std::vector<SymMatrix> blocks;   // BlockDiagonal, one per Gaussian
};

JtJContribution hessian_term(const ViewJacobian& vj, HessianKind kind);

// Gauss-Newton information matrix approximation: accumulated J^T J plus the
// prior lambda * I applied on evaluation. Values are immutable; accumulation
// returns a new value.
class HessianApprox {
public:
    static HessianApprox prior(const ParamLayout& layout, HessianKind kind, double lambda);

    HessianKind kind() const { return kind_; }
    const ParamLayout& layout() const { return layout_; }
    double lambda_prior() const { return lambda_; }

    const std::vector<double>& diag() const { return diag_; }
    const std::vector<SymMatrix>& blocks() const { return blocks_; }

    HessianApprox plus(const JtJContribution& c) const;
    HessianApprox minus(const JtJContribution& c) const;

private:
    HessianKind kind_ = HessianKind::SimpleDiagonal;
    ParamLayout layout_;
    double lambda_ = 1e-6;
    std::vector<double> diag_;
    std::vector<SymMatrix> blocks_;
};

HessianApprox accumulate_hessian(const HessianApprox& h, const ViewJacobian& vj);
HessianApprox accumulate_hessian(const HessianApprox& h, const JtJContribution& c);

}  // namespace splat
