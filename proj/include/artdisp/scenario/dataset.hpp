#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "artdisp/scenario/features.hpp"
#include "artdisp/scenario/labeling.hpp"
#include "artdisp/scenario/sampling.hpp"

namespace artdisp::scenario {

struct ScenarioMeta {
    int index = 0;
    int attempt = 0;
    double lambda = 1.0;  // system load scale factor
    std::set<int> outages;
    std::uint64_t seed = 0;
};

struct LabeledSample {
    MeasurementVector measurement;
    double l_max_true = 0.0;
    double l_sum_true = 0.0;
    std::vector<double> dq_star;  // one entry per dataset candidate, in order
    LabelStatus status = LabelStatus::Secure;
    ScenarioMeta meta;
};

struct DatasetCounts {
    int attempts = 0;
    int discarded_unconverged = 0;
    int discarded_islanding = 0;
    double convergence_rate = 1.0;
    int secure = 0;
    int labeled = 0;
    int unlabelable = 0;
};

struct Dataset {
    std::string case_name;
    FeatureSchema schema;  // training_mean filled from the samples
    ScenarioConfig config;
    DatasetCounts counts;
    std::vector<LabeledSample> samples;

    const std::vector<int>& candidates() const { return config.injection_candidates; }
};

/// Samples, solves, extracts features and labels `count` scenarios.
/// Labeling is skipped (all samples Secure with zero dq) when the config has
/// no candidates.
Dataset build_dataset(const grid::NetworkCase& base, const ScenarioConfig& config, int count, int threads = 1);

/// Feature means over the samples.
std::vector<double> feature_means(const std::vector<LabeledSample>& samples);

void write_dataset_jsonl(std::ostream& out, const Dataset& d);
Dataset read_dataset_jsonl(std::istream& in);
void save_dataset(const std::filesystem::path& path, const Dataset& d);
Dataset load_dataset(const std::filesystem::path& path);

/// Feature columns, then l_max, l_sum, dq_<bus> per candidate and status.
void write_dataset_csv(std::ostream& out, const Dataset& d);

/// A scenario config file: ScenarioConfig keys plus "case" (relative to the
/// file) and "count".
struct ScenarioSpec {
    std::filesystem::path case_path;
    int count = 0;
    ScenarioConfig config;
};

ScenarioSpec load_scenario_spec(const std::filesystem::path& path);

nlohmann::json to_json(const LabeledSample& s);
LabeledSample labeled_sample_from_json(const nlohmann::json& j);

}  // namespace artdisp::scenario
