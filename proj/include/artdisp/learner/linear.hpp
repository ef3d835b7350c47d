#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "artdisp/learner/tree.hpp"

namespace artdisp::learner {

/// Per-feature centering and scaling. Features with no spread keep scale 1.
struct Standardizer {
    std::vector<double> mean;
    std::vector<double> scale;

    static Standardizer fit(const FeatureMatrix& x);
    /// Rows of `x`, standardized.
    Eigen::MatrixXd apply(const FeatureMatrix& x) const;
    bool operator==(const Standardizer&) const = default;
};

/// y ~ intercept + weights . x, weights in raw feature units.
struct LinearProjection {
    std::vector<double> weights;
    double intercept = 0.0;

    double apply(std::span<const double> x) const;
    bool operator==(const LinearProjection&) const = default;
};

/// Ridge regression on standardized features, penalty alpha * |w|^2 on the
/// standardized weights.
LinearProjection fit_ridge(const FeatureMatrix& x, std::span<const double> y, double alpha);

/// Out-of-fold ridge predictions: rows are cut into `folds` contiguous
/// blocks and each block is predicted by a model fitted on the others.
/// Falls back to in-sample predictions when there are fewer than 2 * folds rows.
std::vector<double> cross_fitted_ridge(const FeatureMatrix& x, std::span<const double> y, double alpha, int folds);

/// Low-rank (principal component) model of the feature vector. Masked
/// entries are filled with the ridge-regularized least-squares fit of the
/// observed entries onto the leading components.
class LowRankImputer {
public:
    LowRankImputer() = default;
    /// Keeps the fewest components whose discarded variance fraction is at
    /// most `energy_tolerance`.
    static LowRankImputer fit(const FeatureMatrix& x, double energy_tolerance, double ridge);

    std::size_t rank() const { return static_cast<std::size_t>(components_.cols()); }
    std::size_t size() const { return scaler_.mean.size(); }
    /// Overwrites x[i] wherever mask[i] != 0.
    void impute(std::span<double> x, std::span<const std::uint8_t> mask) const;

    friend nlohmann::json to_json(const LowRankImputer& m);
    static LowRankImputer from_json(const nlohmann::json& j);
    bool operator==(const LowRankImputer& o) const {
        return scaler_ == o.scaler_ && ridge_ == o.ridge_ && components_ == o.components_;
    }

private:
    Standardizer scaler_;
    double ridge_ = 0.0;
    Eigen::MatrixXd components_;  // features x rank, orthonormal columns
};

nlohmann::json to_json(const LinearProjection& p);
LinearProjection linear_projection_from_json(const nlohmann::json& j);

}  // namespace artdisp::learner
