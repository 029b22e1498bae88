#pragma once

#include <vector>

#include "splat/params.hpp"
#include "splat/types.hpp"

namespace splat {

// Sparse derivative row of one rendered pixel-channel with respect to the
// masked scene parameters, grouped per contributing Gaussian. Within a group
// the values follow the per-Gaussian flat layout of ParamLayout.
struct JacobianRow {
    int pixel_row = 0, pixel_col = 0;
    int channel = 0;  // 0 = R, 1 = G, 2 = B
    std::vector<int> gaussians;   // ascending scene indices
    std::vector<double> values;   // gaussians.size() * layout.per_gaussian

    bool empty() const { return gaussians.empty(); }
};

struct ViewJacobian {
    std::string view_id;
    ParamLayout layout;
    std::vector<JacobianRow> rows;  // row-major pixels, channels R,G,B; empty rows omitted

    // Dense lookup of a single entry (zero when absent); test/oracle helper.
    static double entry(const JacobianRow& row, const ParamLayout& layout, long flat_index);
};

// Analytic Jacobian of render() with respect to the masked raw parameters,
// parallel across pixels. Derivatives treat the alpha clamp/cutoff and color
// clamp as locally constant (zero derivative where active) and the depth sort
// as fixed.
ViewJacobian view_jacobian(const Scene& scene, const CameraView& cam, const ParamMask& mask);

// Serial baseline, bit-identical to view_jacobian.
ViewJacobian view_jacobian_reference(const Scene& scene, const CameraView& cam,
                                     const ParamMask& mask);

// Gradient of the mean-absolute-error between render(scene, cam) and target,
// 1/(3WH) * J^T sign(e) with sign(0) = 0, over the masked flat layout.
// Parallel with a fixed chunked reduction order (thread-count independent).
std::vector<double> l1_gradient(const Scene& scene, const CameraView& cam, const Image& target,
                                const ParamMask& mask);

// Serial single-accumulator baseline for the chunked kernel.
std::vector<double> l1_gradient_reference(const Scene& scene, const CameraView& cam,
                                          const Image& target, const ParamMask& mask);

}  // namespace splat
