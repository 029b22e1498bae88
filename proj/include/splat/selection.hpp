#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "splat/functionals.hpp"

namespace splat {

struct SelectionRound {
    std::string picked;
    std::map<std::string, double> scores;  // every candidate evaluated this round
};

struct SelectionReport {
    std::vector<std::string> chosen;  // in pick order
    std::vector<SelectionRound> rounds;
    UncertaintyFunctional functional;
    HessianKind approximation = HessianKind::SimpleDiagonal;

    nlohmann::json to_json() const;
};

// Best single candidate: argmin of score_candidate for T/A/D/E, argmax for
// FisherRF; ties broken by lexicographically smallest view id.
std::string select_next_view(const HessianApprox& prior,
                             const std::map<std::string, JtJContribution>& candidates,
                             const UncertaintyFunctional& f);
std::string select_next_view(const HessianApprox& prior,
                             const std::map<std::string, ViewJacobian>& candidates,
                             const UncertaintyFunctional& f);

// Greedy batch of k: each round scores the remaining candidates against the
// running Hessian, picks the winner, folds its contribution in, and repeats
// without retraining.
SelectionReport select_batch(const HessianApprox& prior,
                             const std::map<std::string, JtJContribution>& candidates,
                             const UncertaintyFunctional& f, int k);
SelectionReport select_batch(const HessianApprox& prior,
                             const std::map<std::string, ViewJacobian>& candidates,
                             const UncertaintyFunctional& f, int k);

// Removal mode: starts from the prior plus every candidate and repeatedly
// drops the view whose removal increases uncertainty the least (k removals).
// chosen lists the removed views in order.
SelectionReport select_batch_remove(const HessianApprox& prior,
                                    const std::map<std::string, JtJContribution>& candidates,
                                    const UncertaintyFunctional& f, int k);

struct SelectionConfig {
    ParamMask mask;
    HessianKind approximation = HessianKind::SimpleDiagonal;
    double lambda = 1e-6;
};

// Keyframe selection against a fixed pre-trained scene: per-view Jacobians at
// the current parameters, a lambda-only prior, then greedy batch selection.
SelectionReport select_keyframes(const Scene& scene, const std::vector<CameraView>& views,
                                 const UncertaintyFunctional& f, int k,
                                 const SelectionConfig& cfg);

}  // namespace splat
