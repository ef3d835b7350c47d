#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "artdisp/grid/network.hpp"
#include "artdisp/grid/perturbation.hpp"
#include "artdisp/grid/power_flow.hpp"
#include "artdisp/learner/bundle.hpp"
#include "artdisp/stability/l_index.hpp"

namespace artdisp::control {

enum class ActionKind { Preventive, Corrective };
enum class Basis { ModelOnly, ModelPlusVerification, AnalyticFallback };

std::string_view to_string(ActionKind k);
std::string_view to_string(Basis b);
ActionKind action_kind_from_string(std::string_view s);
Basis basis_from_string(std::string_view s);

/// A reactive injection of `dq` p.u. at one load bus.
struct ControlAction {
    std::string id;
    int bus = 0;
    double dq = 0.0;
    ActionKind kind = ActionKind::Preventive;
    double predicted_l_max_after = 0.0;
    /// Present iff the verification power flow converged.
    std::optional<double> verified_l_max_after;
    bool unverifiable = false;
    bool auto_eligible = false;
    /// Part of the recommended joint set (see Recommendation::set_l_max_after).
    bool selected = false;

    /// verified value when present, else predicted.
    double rank_value() const { return verified_l_max_after.value_or(predicted_l_max_after); }
    bool operator==(const ControlAction&) const = default;
};

/// Ranking order: rank_value ascending, then smaller dq, then lower bus id.
bool ranks_before(const ControlAction& a, const ControlAction& b);

struct Recommendation {
    std::string id;
    std::vector<ControlAction> actions;  // ranked
    Basis basis = Basis::ModelOnly;
    stability::StateClass state_class = stability::StateClass::Normal;
    double l_max_before = 0.0;
    double l_sum_before = 0.0;
    /// Verified l_max with every selected action applied together.
    std::optional<double> set_l_max_after;
    /// The analytic search ran out of budget or candidates.
    bool incomplete = false;
    std::int64_t tick = 0;

    const ControlAction* find(std::string_view action_id) const;
    bool operator==(const Recommendation&) const = default;
};

struct ControlConfig {
    stability::Thresholds thresholds;
    bool verify = true;
    double auto_cap = 0.5;
    double noise_floor = 0.01;  // model predictions below this are zero
    /// Verified l_max decrease an action must reach to be selected.
    double min_improvement = 1e-3;
    // Analytic fallback search.
    double step_dq = 0.1;
    double budget = 5.0;
    /// Fallback candidates when no model bundle is loaded.
    std::vector<int> candidates;

    void validate() const;
    bool operator==(const ControlConfig&) const = default;
};

/// The injections of `actions` summed per bus.
grid::Perturbation to_perturbation(const std::vector<ControlAction>& actions);
/// Only the selected actions.
grid::Perturbation selected_perturbation(const Recommendation& r);

/// Applies the injection to a copy of the case, re-solves from a flat start
/// and fills verified_l_max_after, or sets `unverifiable` when the power flow
/// diverges. Throws grid::CaseError when the bus is unknown.
ControlAction verify_action(const grid::NetworkCase& c, const ControlAction& action,
                            const grid::PowerFlowOptions& options = {});

struct GreedyPlan {
    /// One action per search step, in application order; each carries the
    /// verified l_max after all steps up to and including it.
    std::vector<ControlAction> steps;
    bool incomplete = false;
    double l_max_before = 0.0;
    double l_sum_before = 0.0;
    std::vector<double> l_sum_trace;  // after each step
};

/// The labeling oracle's greedy search as an action sequence. Empty when
/// the state is already below `alarm`.
GreedyPlan greedy_corrective_search(const grid::NetworkCase& c, const grid::PowerFlowSolution& solution,
                                    const std::vector<int>& candidates, double alarm, double step_dq, double budget);

/// Ranked actions for the assessed state. Normal gives an empty list. With a
/// bundle, one action per candidate with a prediction above the noise floor;
/// without one, or when no model action survives verification, the greedy
/// search supplies them (basis AnalyticFallback). The greedy search also
/// replaces a verified model set that stays at or above the alarm threshold
/// when it reaches a lower l_max. `measurement` overrides
/// the telemetry extracted from the solution, e.g. a corrupted vector.
/// Throws scenario::SchemaError when the bundle does not fit the case.
Recommendation recommend_actions(const grid::NetworkCase& c, const grid::PowerFlowSolution& solution,
                                 const learner::ModelBundle* bundle, const ControlConfig& config,
                                 std::int64_t tick = 0,
                                 const std::optional<scenario::MeasurementVector>& measurement = std::nullopt);

struct CorrectiveRun {
    /// Entry 0 is the starting state, then one entry per applied recommendation.
    std::vector<double> l_max;
    std::vector<double> l_sum;
    std::vector<Recommendation> recommendations;
    grid::NetworkCase final_case;
    bool cleared = false;  // final l_max below the alarm threshold
};

/// Recommend, apply the selected set, re-solve; repeats until the state is
/// below the alarm threshold, no action is selected, the power flow diverges
/// or `max_steps` recommendations have been applied.
CorrectiveRun run_corrective_control(const grid::NetworkCase& c, const learner::ModelBundle* bundle,
                                     const ControlConfig& config, int max_steps = 10);

nlohmann::json to_json(const ControlAction& a);
ControlAction control_action_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Recommendation& r);
Recommendation recommendation_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ControlConfig& c);
ControlConfig control_config_from_json(const nlohmann::json& j);

}  // namespace artdisp::control
