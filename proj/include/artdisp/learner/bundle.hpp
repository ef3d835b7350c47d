#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "artdisp/learner/linear.hpp"
#include "artdisp/learner/tree.hpp"
#include "artdisp/scenario/dataset.hpp"
#include "artdisp/stability/l_index.hpp"

namespace artdisp::learner {

struct TrainingMeta {
    std::string dataset_hash;  // FNV-1a over the serialized training samples
    std::size_t n_samples = 0;
    std::size_t window_size = 0;  // 0: unbounded
    std::uint64_t revision = 0;  // bumped by every online update
    std::string created_at;  // wall-clock stamp set by the caller, if any

    bool operator==(const TrainingMeta&) const = default;
};

struct ModelParams {
    TreeParams tree;
    /// Append the ridge estimate of l_max as one extra (oblique) tree input.
    bool projection = true;
    double ridge_alpha = 1.0;
    int folds = 5;
    /// Fill masked features from a low-rank model of the training features.
    bool impute = true;
    double imputation_energy = 1e-5;  // discarded variance fraction
    double imputation_ridge = 1e-2;

    void validate() const;
    bool operator==(const ModelParams&) const = default;
};

nlohmann::json to_json(const ModelParams& p);
ModelParams model_params_from_json(const nlohmann::json& j);

struct Prediction {
    double l_max = 0.0;
    std::vector<double> dq;  // one per candidate, clamped at zero
};

/// l_max tree plus one dq tree per injection candidate, all on one schema.
/// Every tree reads the measurement features followed, when enabled, by the
/// projection value.
struct ModelBundle {
    scenario::FeatureSchema schema;
    std::vector<int> candidates;
    stability::Thresholds thresholds;
    ModelParams params;
    std::optional<LinearProjection> projection;
    std::optional<LowRankImputer> imputer;
    RegressionTree indicator;
    std::vector<RegressionTree> injection;
    TrainingMeta meta;
    /// Samples retained for online updates, oldest first.
    std::vector<scenario::LabeledSample> window;

    /// Throws SchemaError on schema id or length mismatch.
    void check(const scenario::MeasurementVector& m) const;
    std::size_t input_size() const { return schema.size() + (projection ? 1 : 0); }
    /// Tree input and routing mask for a measurement. Masked features are
    /// imputed when an imputer is present; otherwise they stay masked and the
    /// trees route them by surrogates (the projection is then masked too if
    /// it reads any masked feature).
    std::pair<std::vector<double>, std::vector<std::uint8_t>> tree_input(const scenario::MeasurementVector& m) const;
    Prediction predict(const scenario::MeasurementVector& m) const;
    double predict_l_max(const scenario::MeasurementVector& m) const;
    std::vector<double> predict_injections(const scenario::MeasurementVector& m) const;
};

/// Fits every tree on `samples`. Unlabelable samples train the indicator
/// only. `window_size` 0 keeps all samples in the window.
ModelBundle train_bundle(const scenario::FeatureSchema& schema, const std::vector<int>& candidates,
                         const stability::Thresholds& thresholds, std::span<const scenario::LabeledSample> samples,
                         const ModelParams& params, std::size_t window_size = 0);
ModelBundle train_bundle(const scenario::Dataset& d, const ModelParams& params, std::size_t window_size = 0);

/// Appends to the window, evicts the oldest beyond `window_size` and refits.
ModelBundle online_update(const ModelBundle& b, std::span<const scenario::LabeledSample> new_samples,
                          std::size_t window_size);

/// Deterministic tail split: the last `test_fraction` of the samples is held out.
struct Split {
    std::vector<scenario::LabeledSample> train;
    std::vector<scenario::LabeledSample> test;
};
Split holdout_split(const std::vector<scenario::LabeledSample>& samples, double test_fraction);

nlohmann::json to_json(const ModelBundle& b, bool include_window = false);
ModelBundle model_bundle_from_json(const nlohmann::json& j);
void save_bundle(const std::filesystem::path& path, const ModelBundle& b, bool include_window = false);
ModelBundle load_bundle(const std::filesystem::path& path);

struct TargetMetrics {
    std::string name;
    std::size_t n = 0;
    double rmse = 0.0;
    double relative_rmse = 0.0;  // rmse / population std of the true targets
    double mae = 0.0;
    double target_std = 0.0;

    bool operator==(const TargetMetrics&) const = default;
};

/// Accumulates prediction errors for one target.
class ErrorAccumulator {
public:
    void add(double predicted, double truth);
    TargetMetrics finish(std::string name) const;

private:
    std::vector<double> predicted_;
    std::vector<double> truth_;
};

struct EvalReport {
    // Headline figures, for the l_max target.
    double rmse = 0.0;
    double relative_rmse = 0.0;
    double mae = 0.0;
    /// "l_max", "dq_pooled", then "dq_<bus>" per candidate.
    std::vector<TargetMetrics> per_target;
    double latency = 0.0;  // mean seconds per full prediction (l_max and all dq)
    std::size_t n = 0;
    std::optional<scenario::CorruptionConfig> corruption;
    /// Analytic l_max from the corrupted measurements, when corruption is given.
    std::optional<TargetMetrics> baseline;
    int baseline_diverged = 0;

    const TargetMetrics& target(const std::string& name) const;
};

/// Predictions on (optionally corrupted) features against clean targets. The
/// analytic baseline needs the base case the dataset was drawn from.
EvalReport evaluate_model(const ModelBundle& b, std::span<const scenario::LabeledSample> test,
                          const std::optional<scenario::CorruptionConfig>& corruption = std::nullopt,
                          const grid::NetworkCase* base = nullptr);

/// "Traditional" l_max from measurements alone: every bus gets a constant
/// power load equal to minus its measured injection (shunts stay in the
/// admittance matrix, which the injection already excludes), generator setpoints
/// take the measured magnitudes, known outages are applied and the case is
/// solved from a flat start. Returns nullopt when that power flow diverges.
std::optional<double> analytic_l_max(const grid::NetworkCase& base, const scenario::FeatureSchema& schema,
                                     const scenario::MeasurementVector& m, const std::set<int>& outages);

nlohmann::json to_json(const EvalReport& r);

}  // namespace artdisp::learner
