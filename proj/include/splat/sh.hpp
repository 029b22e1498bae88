#pragma once

#include <array>

#include "splat/types.hpp"

namespace splat {

inline constexpr double kShC0 = 0.28209479177387814;

// Real spherical harmonics basis values at a unit direction, degrees 0..3.
// Coefficient convention matches the usual splatting stack: color channel
// ch = clamp01(sum_b basis[b] * coeffs[b][ch] + 0.5).
void sh_basis(int degree, const Vec3& dir, std::array<double, 16>& basis);

// d(basis[b])/d(dir component); rows are basis entries, columns x,y,z.
void sh_basis_grad(int degree, const Vec3& dir, std::array<std::array<double, 3>, 16>& grad);

struct ShColor {
    std::array<double, 3> rgb{};           // clamped to [0,1]
    std::array<bool, 3> clamped{};         // channel hit 0 or 1
    std::array<double, 16> basis{};        // for coefficient derivatives
    std::array<std::array<double, 3>, 3> drgb_ddir{};  // zero rows where clamped
};

ShColor evaluate_sh(int degree, const Vec3& dir, const std::vector<Vec3>& coeffs);

}  // namespace splat
