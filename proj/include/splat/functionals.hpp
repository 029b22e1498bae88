#pragma once

#include "splat/hessian.hpp"

namespace splat {

enum class Functional { T, A, D, E, FisherRF };
enum class EVariant { Max, Min };

struct UncertaintyFunctional {
    Functional kind = Functional::D;
    EVariant e_variant = EVariant::Max;  // which extreme eigenvalue, E only
};

const char* to_string(Functional f);

// True for T/A/D/E (uncertainty, argmin); false for FisherRF (gain, argmax).
inline bool lower_is_better(const UncertaintyFunctional& f) {
    return f.kind != Functional::FisherRF;
}

// Scalar uncertainty of the regularized matrix H~ = H + lambda I over the full
// masked parameter set of size l:
//   T: (1/l) tr(Sigma),  Sigma = H~^{-1}
//   A: ((1/l) tr(H~))^{-1}
//   D: exp(-(1/l) logdet H~)
//   E: extreme eigenvalue of Sigma
// FisherRF is not a state functional; passing it throws.
double uncertainty(const HessianApprox& h, const UncertaintyFunctional& f);

// T/A/D/E: uncertainty after adding the candidate (lower is better).
// FisherRF: tr((J_i^T J_i)(H_- + lambda I)^{-1}) under the same approximation
// kind as the prior (higher is better).
double score_candidate(const HessianApprox& prior, const JtJContribution& cand,
                       const UncertaintyFunctional& f);
double score_candidate(const HessianApprox& prior, const ViewJacobian& cand,
                       const UncertaintyFunctional& f);

}  // namespace splat
