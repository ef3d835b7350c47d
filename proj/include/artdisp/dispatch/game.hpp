#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <json.hpp>

#include "artdisp/dispatch/engine.hpp"

namespace artdisp::dispatch {

/// Per-tick disturbance probabilities. Each category is drawn independently.
struct AdversaryConfig {
    double line_outage_rate = 0.0;
    double gen_outage_rate = 0.0;
    double load_spike_probability = 0.0;
    std::pair<double, double> load_spike_range{1.2, 1.5};  // factor on one bus load
    double telemetry_attack_probability = 0.0;
    scenario::CorruptionConfig telemetry_attack{0.1, scenario::CorruptionMode::Gap};
    std::uint64_t rng_seed = 0;

    void validate() const;
    bool operator==(const AdversaryConfig&) const = default;
};

nlohmann::json to_json(const AdversaryConfig& a);
AdversaryConfig adversary_config_from_json(const nlohmann::json& j);

/// Pure in (config, case, tick). Line outages pick uniformly among in-service
/// branches whose loss keeps every bus connected; generator outages among
/// in-service units off the slack bus; load spikes among buses with active
/// load. Telemetry attacks get a seed derived from (rng_seed, tick).
std::optional<Disturbance> sample_disturbance(const AdversaryConfig& config, const grid::NetworkCase& c,
                                              std::int64_t tick);

/// Per-tick reward by the post-move state class, a penalty per Unresolved
/// tick (in place of the class reward) and a control effort charge per p.u.
/// of applied |dq|.
struct PayoffWeights {
    double normal = 1.0;
    double alarm = 0.0;
    double emergency = -1.0;
    double unresolved = -10.0;
    double effort = 0.01;

    bool operator==(const PayoffWeights&) const = default;
};

struct EpisodeConfig {
    int ticks = 20;
    EngineConfig engine;
    PayoffWeights weights;
    /// Extra disturbances at fixed ticks, applied before the adversary's.
    std::map<std::int64_t, Disturbance> scripted;
};

struct EpisodeTick {
    std::int64_t tick = 0;
    bool resolved = true;
    stability::StateClass pre_class = stability::StateClass::Normal;   // assessment before the move
    stability::StateClass post_class = stability::StateClass::Normal;  // after the move
    double l_max = 0.0;  // after the move
    double l_sum = 0.0;
    double dq_applied = 0.0;
    double reward = 0.0;

    bool operator==(const EpisodeTick&) const = default;
};

struct GameEpisode {
    Mode mode = Mode::Monitor;
    int ticks = 0;
    std::vector<std::pair<std::int64_t, Disturbance>> disturbances;
    std::vector<std::pair<std::int64_t, control::ControlAction>> actions;
    std::vector<EpisodeTick> trace;
    double payoff = 0.0;
    /// Final tick resolved and Normal.
    bool recovered = false;
    /// Ticks from the first non-Normal assessment through the first Normal
    /// post-move state after it; 0 when the state never left Normal.
    std::optional<int> time_to_recover;
    /// OpenLoop episodes run headless approve the top recommendation.
    bool auto_approved = false;
    std::vector<DispatchEvent> events;

    std::vector<double> l_sum_trace() const;
};

/// Per tick: scripted then sampled disturbance, one TickInput, and in
/// OpenLoop the approval of the pending recommendation. Throws
/// std::invalid_argument when the base case does not converge.
GameEpisode run_episode(const grid::NetworkCase& c, const AdversaryConfig& adversary, Mode mode,
                        std::shared_ptr<const learner::ModelBundle> bundle, const EpisodeConfig& config);

/// Summary without the event log.
nlohmann::json to_json(const GameEpisode& e);

}  // namespace artdisp::dispatch
