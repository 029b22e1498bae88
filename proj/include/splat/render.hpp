#pragma once

#include <span>

#include "splat/splat2d.hpp"

namespace splat {

// Gaussian kernel contribution of a splat at a pixel: alpha * exp(-0.5 d' Cov^-1 d),
// clamped to <= 0.999; values below 1/255 are returned as exactly zero.
double kernel_alpha(const Splat2D& s, const Vec2& pixel);

struct CompositeResult {
    std::array<double, 3> rgb{};
    double transmittance = 1.0;  // light left after all splats
};

// Front-to-back alpha compositing over a depth-sorted splat sequence, with
// early termination once transmittance drops below 1e-4. The background is
// weighted by the remaining transmittance.
CompositeResult composite(std::span<const Splat2D> depth_sorted, const Vec2& pixel,
                          const Vec3& background);

// Full-frame render, parallel across pixels. Deterministic for fixed inputs
// regardless of thread count.
Image render(const Scene& scene, const CameraView& cam);

// Straight-line serial implementation kept as the comparison baseline for
// the parallel kernel; must produce bit-identical images.
Image render_reference(const Scene& scene, const CameraView& cam);

}  // namespace splat
