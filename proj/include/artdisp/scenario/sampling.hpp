#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include <json.hpp>

#include "artdisp/grid/network.hpp"
#include "artdisp/grid/power_flow.hpp"
#include "artdisp/stability/l_index.hpp"

namespace artdisp::scenario {

/// Loads: one system factor s ~ U(load_scale_range) times a mean-one
/// lognormal exp(sigma*z - sigma^2/2) per bus, applied to P and Q alike.
/// Generator P follows total load when scale_generation is set. Each branch
/// is outaged independently with outage_probability.
struct ScenarioConfig {
    std::pair<double, double> load_scale_range{0.9, 1.1};
    double per_bus_sigma = 0.05;
    double outage_probability = 0.0;
    std::vector<int> injection_candidates;
    std::uint64_t rng_seed = 0;
    bool scale_generation = true;
    stability::Thresholds thresholds;
    double step_dq = 0.1;
    double budget = 5.0;

    void validate(bool labeling) const;
};

nlohmann::json to_json(const ScenarioConfig& c);
ScenarioConfig scenario_config_from_json(const nlohmann::json& j);

class InfeasibleScenarioSpace : public std::runtime_error {
public:
    InfeasibleScenarioSpace() : std::runtime_error("infeasible scenario space") {}
};

struct Scenario {
    int index = 0;
    int attempt = 0;  // draws consumed by this index, the kept one included
    double system_scale = 1.0;
    std::set<int> outages;  // branch positions
    grid::NetworkCase network;
    grid::PowerFlowSolution solution;
};

struct ScenarioBatch {
    std::vector<Scenario> scenarios;
    int attempts = 0;
    int discarded_unconverged = 0;
    int discarded_islanding = 0;

    double convergence_rate() const;
};

/// Draw `attempt` for scenario `index`; pure in (case, config, index, attempt).
/// Throws IslandingError when the drawn outages island buses.
grid::NetworkCase draw_scenario_case(const grid::NetworkCase& base, const ScenarioConfig& config, int index,
                                     int attempt, double* system_scale = nullptr, std::set<int>* outages = nullptr);

/// Unconverged and islanding draws are discarded and redrawn; the total
/// number of draws may not exceed 10 * count. Output does not depend on
/// `threads`.
ScenarioBatch generate_scenarios(const grid::NetworkCase& base, const ScenarioConfig& config, int count,
                                 int threads = 1);

/// Runs fn(i) for i in [0, n) on up to `threads` workers; exceptions are
/// rethrown in index order.
void parallel_for(int n, int threads, const std::function<void(int)>& fn);

}  // namespace artdisp::scenario
