#include "splat/params.hpp"

namespace splat {

ParamLayout ParamLayout::make(const Scene& scene, const ParamMask& mask) {
    ParamLayout l;
    l.mask = mask;
    l.sh_degree = scene.sh_degree;
    l.n_gaussians = static_cast<long>(scene.gaussians.size());
    int off = 0;
    if (mask.position) { l.off_position = off; off += 3; }
    if (mask.rotation) { l.off_rotation = off; off += 4; }
    if (mask.scale) { l.off_scale = off; off += 3; }
    if (mask.opacity) { l.off_opacity = off; off += 1; }
    if (mask.sh) { l.off_sh = off; off += 3 * sh_coeff_count(scene.sh_degree); }
    l.per_gaussian = off;
    return l;
}

std::vector<double> flatten_params(const Scene& scene, const ParamMask& mask) {
    const ParamLayout l = ParamLayout::make(scene, mask);
    std::vector<double> flat(static_cast<std::size_t>(l.total()));
    for (long gi = 0; gi < l.n_gaussians; ++gi) {
        const Gaussian& g = scene.gaussians[gi];
        double* p = flat.data() + gi * l.per_gaussian;
        if (mask.position) {
            p[l.off_position + 0] = g.position.x;
            p[l.off_position + 1] = g.position.y;
            p[l.off_position + 2] = g.position.z;
        }
        if (mask.rotation) {
            for (int c = 0; c < 4; ++c) p[l.off_rotation + c] = g.rotation[c];
        }
        if (mask.scale) {
            p[l.off_scale + 0] = g.log_scale.x;
            p[l.off_scale + 1] = g.log_scale.y;
            p[l.off_scale + 2] = g.log_scale.z;
        }
        if (mask.opacity) p[l.off_opacity] = g.opacity_logit;
        if (mask.sh) {
            for (int b = 0; b < l.sh_count(); ++b) {
                p[l.off_sh + 3 * b + 0] = g.sh_coeffs[b].x;
                p[l.off_sh + 3 * b + 1] = g.sh_coeffs[b].y;
                p[l.off_sh + 3 * b + 2] = g.sh_coeffs[b].z;
            }
        }
    }
    return flat;
}

void unflatten_params(Scene& scene, std::span<const double> flat, const ParamMask& mask) {
    const ParamLayout l = ParamLayout::make(scene, mask);
    if (static_cast<long>(flat.size()) != l.total())
        throw Error("unflatten_params: vector length does not match layout");
    for (long gi = 0; gi < l.n_gaussians; ++gi) {
        Gaussian& g = scene.gaussians[gi];
        const double* p = flat.data() + gi * l.per_gaussian;
        if (mask.position) {
            g.position = {p[l.off_position], p[l.off_position + 1], p[l.off_position + 2]};
        }
        if (mask.rotation) {
            for (int c = 0; c < 4; ++c) g.rotation[c] = p[l.off_rotation + c];
            renormalize_rotation(g);
        }
        if (mask.scale) {
            g.log_scale = {p[l.off_scale], p[l.off_scale + 1], p[l.off_scale + 2]};
        }
        if (mask.opacity) g.opacity_logit = p[l.off_opacity];
        if (mask.sh) {
            for (int b = 0; b < l.sh_count(); ++b) {
                g.sh_coeffs[b] = {p[l.off_sh + 3 * b], p[l.off_sh + 3 * b + 1],
                                  p[l.off_sh + 3 * b + 2]};
            }
        }
    }
}

}  // namespace splat
