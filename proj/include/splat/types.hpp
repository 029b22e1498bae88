#pragma once

#include <cassert>
#include <stdexcept>
#include <string>
#include <vector>

#include "splat/geom.hpp"

namespace splat {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

inline int sh_coeff_count(int degree) { return (degree + 1) * (degree + 1); }

// One 3D ellipsoid, stored in raw (pre-activation) parameters.
struct Gaussian {
    Vec3 position;
    Quat rotation{1.0, 0.0, 0.0, 0.0};  // unit quaternion (w, x, y, z)
    Vec3 log_scale;
    double opacity_logit = 0.0;
    std::vector<Vec3> sh_coeffs;  // (degree+1)^2 RGB triples
};

inline double opacity(const Gaussian& g) { return sigmoid(g.opacity_logit); }

// Keeps the unit-norm invariant after mutation. Quaternions that are already
// unit (to ~1e-12) are left untouched so that round-trips are exact.
inline void renormalize_rotation(Gaussian& g) {
    const double n2 = g.rotation[0] * g.rotation[0] + g.rotation[1] * g.rotation[1] +
                      g.rotation[2] * g.rotation[2] + g.rotation[3] * g.rotation[3];
    if (std::abs(n2 - 1.0) > 2e-12) {
        const double n = std::sqrt(n2);
        for (double& c : g.rotation) c /= n;
    }
}

// Sigma = R S S^T R^T with S = diag(exp(log_scale)).
Mat3 shape_matrix(const Gaussian& g);

struct Scene {
    int sh_degree = 0;
    Vec3 background;  // RGB in [0,1]
    std::vector<Gaussian> gaussians;

    int per_gaussian_params() const { return 11 + 3 * sh_coeff_count(sh_degree); }
    long total_params() const {
        return static_cast<long>(gaussians.size()) * per_gaussian_params();
    }
};

struct RigidTransform {
    Mat3 rotation = Mat3::identity();
    Vec3 translation;
};

// Pinhole camera with a world-to-camera pose. Camera frame is x-right,
// y-down, z-forward; pixel (u, v) = (fx X/Z + cx, fy Y/Z + cy).
struct CameraView {
    std::string id;
    double fx = 1.0, fy = 1.0, cx = 0.0, cy = 0.0;
    int width = 1, height = 1;
    RigidTransform world_to_camera;

    Vec3 camera_center() const {
        const Vec3 t = world_to_camera.translation;
        return world_to_camera.rotation.transposed() * Vec3{-t.x, -t.y, -t.z};
    }
};

struct Image {
    int width = 0, height = 0;
    std::vector<double> pixels;  // row-major, 3 channels per pixel, values in [0,1]

    Image() = default;
    Image(int w, int h) : width(w), height(h), pixels(static_cast<std::size_t>(w) * h * 3, 0.0) {}

    double& at(int row, int col, int ch) {
        return pixels[(static_cast<std::size_t>(row) * width + col) * 3 + ch];
    }
    double at(int row, int col, int ch) const {
        return pixels[(static_cast<std::size_t>(row) * width + col) * 3 + ch];
    }

    void clamp01() {
        for (double& v : pixels) v = std::min(1.0, std::max(0.0, v));
    }
};

}  // namespace splat
