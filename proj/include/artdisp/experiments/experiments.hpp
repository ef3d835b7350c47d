#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "artdisp/dispatch/game.hpp"
#include "artdisp/learner/bundle.hpp"

namespace artdisp::experiments {

// ---- corruption sweep --------------------------------------------------

struct SweepRow {
    double rate = 0.0;
    scenario::CorruptionMode mode = scenario::CorruptionMode::Gap;
    std::size_t n = 0;
    learner::TargetMetrics model;     // predicted l_max
    learner::TargetMetrics baseline;  // analytic l_max from the same corrupted vectors
    int baseline_diverged = 0;
};

struct SweepOptions {
    std::vector<double> rates{0.0, 0.05, 0.1, 0.2};
    std::vector<scenario::CorruptionMode> modes{scenario::CorruptionMode::Gap, scenario::CorruptionMode::Noise,
                                                scenario::CorruptionMode::Stuck};
    scenario::GapFill gap_fill = scenario::GapFill::TrainingMean;
    double noise_sigma = 0.05;
    std::uint64_t seed = 0;
};

/// One row per (rate, mode), rates outermost. A diverged analytic
/// reconstruction scores as l_max 1 (see learner::evaluate_model).
std::vector<SweepRow> corruption_sweep(const learner::ModelBundle& b, std::span<const scenario::LabeledSample> test,
                                       const grid::NetworkCase& base, const SweepOptions& options);

// ---- corrective control demo ------------------------------------------

struct DemoScenario {
    int index = 0;  // scenario index in the sampling stream
    control::CorrectiveRun run;
    bool strictly_decreasing = false;  // l_sum falls at every applied step
};

struct ControlDemo {
    std::vector<DemoScenario> scenarios;
    int draws = 0;  // scenarios examined to find the alarm ones

    double cleared_fraction() const;
    double decreasing_fraction() const;
};

/// Draws scenarios from `config` (indices 0, 1, ...) and keeps the first
/// `count` whose l_max is at or above the alarm threshold, each driven by
/// run_corrective_control. Stops after `max_draws` scenarios.
ControlDemo control_demo(const grid::NetworkCase& base, const scenario::ScenarioConfig& config,
                         const learner::ModelBundle* bundle, const control::ControlConfig& control, int count,
                         int max_steps = 10, int max_draws = 5000);

// ---- episode batch -----------------------------------------------------

struct EpisodeBatch {
    std::vector<dispatch::Mode> modes;
    /// episodes[m][k]: mode m, adversary seed first_seed + k.
    std::vector<std::vector<dispatch::GameEpisode>> episodes;
    std::uint64_t first_seed = 0;

    const std::vector<dispatch::GameEpisode>& of(dispatch::Mode m) const;
    /// Fraction of seeds where mode `a` scores at least mode `b`.
    double paired_at_least(dispatch::Mode a, dispatch::Mode b) const;
    nlohmann::json summary() const;
};

/// Every mode plays the same adversary seeds. Events are dropped from the
/// stored episodes to bound memory.
EpisodeBatch episode_batch(const grid::NetworkCase& base, const dispatch::AdversaryConfig& adversary,
                           const std::vector<dispatch::Mode>& modes,
                           std::shared_ptr<const learner::ModelBundle> bundle, const dispatch::EpisodeConfig& config,
                           int episodes, std::uint64_t first_seed, int threads = 1);

/// The stressed operating point for episodes: uniform load growth to
/// `lambda`, generation shared in proportion when `scale_generation`.
grid::NetworkCase stressed_case(const grid::NetworkCase& base, double lambda, bool scale_generation);

// ---- experiment specs --------------------------------------------------

class ExperimentError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ExperimentSpec {
    std::string name;  // corruption-sweep, control-demo, episode-batch
    std::filesystem::path case_path;
    std::optional<std::filesystem::path> dataset_path;
    std::optional<std::filesystem::path> model_path;
    nlohmann::json params = nlohmann::json::object();
    std::uint64_t seed = 0;
    std::filesystem::path output_dir;
    int threads = 1;

    /// Throws ExperimentError on an unknown name, a missing input or an
    /// invalid parameter.
    void validate() const;
};

/// Typed views of a spec's params, with the defaults run_experiment uses.
/// Each throws ExperimentError or a parse error on a bad value.
SweepOptions sweep_options(const ExperimentSpec& s);
/// Scenario stream seeded by the spec seed.
scenario::ScenarioConfig demo_scenarios(const ExperimentSpec& s);
/// params.control, with thresholds, candidates, step and budget defaulting
/// to the scenario config's.
control::ControlConfig demo_control(const ExperimentSpec& s, const scenario::ScenarioConfig& sc);
dispatch::EpisodeConfig episode_config(const ExperimentSpec& s);
/// params.adversary seeded by the spec seed.
dispatch::AdversaryConfig episode_adversary(const ExperimentSpec& s);

/// Relative paths resolve against `base_dir`.
ExperimentSpec experiment_spec_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir = {});
nlohmann::json to_json(const ExperimentSpec& s);

struct ExperimentResult {
    std::filesystem::path run_dir;
    std::vector<std::string> files;  // written, relative to run_dir; manifest.json last
    nlohmann::json summary;
};

/// Validates and loads every input before writing anything. Output goes to
/// output_dir when it is absent or empty, otherwise to a fresh
/// output_dir/run-NNNN. Files are byte-identical for the same spec.
ExperimentResult run_experiment(const ExperimentSpec& spec);

}  // namespace artdisp::experiments
