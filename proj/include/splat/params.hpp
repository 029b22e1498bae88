#pragma once

#include <span>
#include <vector>

#include "splat/types.hpp"

namespace splat {

// Selects which of the five parameter groups take part in flattening,
// Jacobians and information accumulation.
struct ParamMask {
    bool position = true;
    bool rotation = true;
    bool scale = true;
    bool opacity = true;
    bool sh = true;

    bool any() const { return position || rotation || scale || opacity || sh; }

    bool operator==(const ParamMask&) const = default;
};

// Flat layout: Gaussians in sequence order; within a Gaussian the masked-in
// groups in the order position, rotation, log_scale, opacity, sh (each SH
// coefficient as r, g, b). Masked-out groups are absent entirely.
struct ParamLayout {
    ParamMask mask;
    int sh_degree = 0;
    long n_gaussians = 0;
    int per_gaussian = 0;
    // Offsets of each group inside a per-Gaussian block, -1 when masked out.
    int off_position = -1, off_rotation = -1, off_scale = -1, off_opacity = -1, off_sh = -1;

    static ParamLayout make(const Scene& scene, const ParamMask& mask);

    long total() const { return n_gaussians * per_gaussian; }
    int sh_count() const { return sh_coeff_count(sh_degree); }

    bool compatible(const ParamLayout& o) const {
        return mask == o.mask && sh_degree == o.sh_degree && n_gaussians == o.n_gaussians;
    }
};

std::vector<double> flatten_params(const Scene& scene, const ParamMask& mask);

// Writes the masked groups back; groups outside the mask keep their values.
// Rotations are renormalized on write.
void unflatten_params(Scene& scene, std::span<const double> flat, const ParamMask& mask);

}  // namespace splat
