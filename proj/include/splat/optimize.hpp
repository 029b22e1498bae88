#pragma once

#include <map>

#include "splat/jacobian.hpp"
#include "splat/rng.hpp"

namespace splat {

struct LrConfig {
    double position = 2e-3;  // multiplied by position_scale
    double rotation = 1e-3;
    double scale = 5e-3;
    double opacity = 5e-2;
    double sh = 2.5e-3;
    double position_scale = 1.0;  // scene extent
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-15;
    double clip_norm = 1e3;
};

struct TrainView {
    CameraView cam;
    Image target;
};

using TrainSet = std::map<std::string, TrainView>;

// Positions uniform in the intersection box of all camera frusta over depths
// [0.5, 5]; identity rotations; isotropic scales ~ box size; opacity logit 0;
// mid-gray colors. Deterministic per seed.
Scene init_scene(const std::vector<CameraView>& views, std::uint64_t seed, int n_gaussians);

// Half-diagonal of the init box; used to scale the position learning rate.
double scene_extent(const std::vector<CameraView>& views);

struct AdamState {
    std::vector<double> m, v;  // first/second moments, full-mask flat layout
    long step = 0;
};

// Adam on the L1 rendering loss, one uniformly-sampled training view per
// step. Keeps optimizer state so the harness can train in phases.
class TrainSession {
public:
    TrainSession(Scene scene, const LrConfig& lr, std::uint64_t seed);

    void run(const TrainSet& views, long steps);

    const Scene& scene() const { return scene_; }
    Scene take_scene() && { return std::move(scene_); }
    const AdamState& state() const { return state_; }
    AdamState& state() { return state_; }
    void set_state(AdamState s) { state_ = std::move(s); }

private:
    Scene scene_;
    LrConfig lr_;
    AdamState state_;
    Rng rng_;
};

// One-shot training with fresh optimizer state.
Scene train(Scene scene, const TrainSet& views, long steps, const LrConfig& lr,
            std::uint64_t seed);

double l1_loss(const Image& rendered, const Image& target);

}  // namespace splat
