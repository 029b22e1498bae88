#pragma once

#include <optional>
#include <vector>

#include "splat/types.hpp"

namespace splat {

inline constexpr double kNearPlane = 0.01;
inline constexpr double kCovFloor = 0.3;          // low-pass floor added to cov2d diagonal
inline constexpr double kAlphaClamp = 0.999;
inline constexpr double kAlphaCutoff = 1.0 / 255.0;
inline constexpr double kTransmittanceStop = 1e-4;

// 2D projection of one Gaussian for a specific view.
struct Splat2D {
    Vec2 mean2d;                    // pixels
    Sym2 cov2d;                     // pixel^2, includes the low-pass floor
    double depth = 0.0;             // camera-frame z
    double base_opacity = 0.0;      // activated opacity
    std::array<double, 3> color{};  // SH evaluated for the view direction
};

// Returns nullopt when the Gaussian is culled: depth <= near plane, or the
// 3-sigma box of the projected footprint misses the image rectangle.
std::optional<Splat2D> project(const Gaussian& g, const CameraView& cam);

// Splat plus per-view cached quantities for the per-pixel kernels.
struct RenderSplat {
    Splat2D s;
    int gaussian = 0;        // index into the scene
    Sym2 inv_cov;            // cov2d^{-1}
    double bbox_half = 0.0;  // pixels; outside this box alpha' < cutoff
};

// Projects every Gaussian, drops culled ones, sorts by (depth, index).
std::vector<RenderSplat> project_scene(const Scene& scene, const CameraView& cam);

}  // namespace splat
