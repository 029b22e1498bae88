#pragma once

#include <optional>

#include "splat/rigs.hpp"
#include "splat/selection.hpp"

namespace splat {

struct Schedule {
    std::string name;
    int start_views = 2;
    int target_views = 10;
    int step_views = 1;       // 1 = single-view selection, >1 = batch
    int iters_per_view = 100;  // training between selections runs iters_per_view * v steps
    long total_steps = 5200;
    std::uint64_t seed = 0;
};

std::optional<Schedule> schedule_preset(const std::string& name);
std::string schedule_preset_names();

// "[uniform|fisherrf|t|a|d|e]-[simple|block]".
struct MethodSpec {
    bool uniform = false;
    UncertaintyFunctional functional;
    HessianKind approximation = HessianKind::SimpleDiagonal;
    std::string name;
};

MethodSpec parse_method(const std::string& s);  // throws Error listing the valid set

struct ExperimentConfig {
    MethodSpec method;
    Schedule schedule;
    int n_gaussians = 120;
    ParamMask selection_mask;  // parameters used for information accumulation
    double lambda = 1e-6;
};

struct ExperimentResult {
    std::vector<std::string> chosen;  // selected views in pick order (after the start set)
    std::vector<std::string> start_views;
    SelectionReport selection;        // rounds across all phases
    double mean_psnr = 0.0, mean_ssim = 0.0;
    std::map<std::string, double> test_psnr, test_ssim;
    Scene final_scene;
};

// Incremental view-selection protocol: seeded start set, train/select loop,
// final training to total_steps, evaluation on the held-out split. When
// out_dir is non-empty writes report.json, metrics.csv, selection.json and
// config.json there.
ExperimentResult run_selection_experiment(const Dataset& data, const ExperimentConfig& cfg,
                                          const std::filesystem::path& out_dir = {});

struct SparsificationResult {
    std::vector<std::string> candidates;              // sorted ids
    std::map<std::string, double> actual_psnr;        // per candidate
    std::map<std::string, std::vector<std::string>> orderings;  // method -> most informative first
    // rows (method, decile 1..10, cumulative mean psnr)
    std::vector<std::tuple<std::string, int, double>> table;
};

// Sorts candidates by expected information gain per method and tabulates the
// cumulative mean PSNR at decile increments; Oracle (ascending actual PSNR)
// and a seeded uniform ordering are always included.
SparsificationResult run_sparsification(const Dataset& data, const Scene& scene,
                                        const std::vector<std::string>& train_ids,
                                        const std::vector<MethodSpec>& methods,
                                        std::uint64_t seed, double lambda = 1e-6,
                                        const std::filesystem::path& out_dir = {});

struct KeyframeResult {
    SelectionReport selection;
    double mean_psnr = 0.0, mean_ssim = 0.0;
};

// Keyframe protocol: selection from the candidate pool against a fixed
// pre-trained scene, then retraining a fresh scene on the chosen views only.
KeyframeResult run_keyframe_experiment(const Dataset& data, const Scene& pretrained,
                                       const MethodSpec& method, int k, std::uint64_t seed,
                                       long retrain_steps, int n_gaussians,
                                       const std::filesystem::path& out_dir = {});

ParamMask parse_ablation_mask(const std::string& name);  // none, sh, alpha, geom, a+b combos

struct AblationRow {
    std::string mask_name;
    double mean_psnr = 0.0, mean_ssim = 0.0;
};

// D-block selection experiments with restricted information masks.
std::vector<AblationRow> run_ablation(const Dataset& data, const Schedule& schedule,
                                      const std::vector<std::string>& mask_names,
                                      std::uint64_t seed, int n_gaussians,
                                      const std::filesystem::path& out_dir = {});

// Helpers shared by the CLI and tests.
std::string format_csv_double(double v);  // 17 significant digits
double mean_psnr_on_split(const Scene& scene, const Dataset& data,
                          const std::vector<std::string>& ids);

LrConfig default_lr_for(const std::vector<CameraView>& cams);

}  // namespace splat
