#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace artdisp::learner {

/// Dense row-major feature matrix.
class FeatureMatrix {
public:
    FeatureMatrix() = default;
    FeatureMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::span<const double> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    void push_row(std::span<const double> values);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

struct TreeParams {
    int max_depth = 12;
    int min_leaf = 5;
    /// Minimum drop in mean squared error (SSE reduction / node size).
    double min_variance_gain = 0.0;
    /// Backup splits kept per node for masked features.
    int max_surrogates = 3;

    void validate() const;
    bool operator==(const TreeParams&) const = default;
};

nlohmann::json to_json(const TreeParams& p);
TreeParams tree_params_from_json(const nlohmann::json& j);

/// Routes like the primary split when `left_when_le`, mirrored otherwise.
struct Surrogate {
    int feature = 0;
    double threshold = 0.0;
    bool left_when_le = true;
    double agreement = 0.0;  // fraction of node samples routed like the primary

    bool operator==(const Surrogate&) const = default;
};

struct Node {
    int feature = -1;  // -1 marks a leaf
    double threshold = 0.0;  // x <= threshold goes left
    int left = -1;
    int right = -1;
    double value = 0.0;
    int n_samples = 0;
    std::vector<Surrogate> surrogates;
    bool default_left = true;  // when the feature and every surrogate are masked

    bool is_leaf() const { return feature < 0; }
    bool operator==(const Node&) const = default;
};

class TrainingError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class RegressionTree {
public:
    std::vector<Node> nodes;
    TreeParams params;
    std::string schema_id;
    std::size_t n_features = 0;

    /// Leaf value on the unique root-to-leaf path. Masked features (mask[i]
    /// != 0) are routed by surrogate splits, then by the majority side.
    double predict(std::span<const double> x, std::span<const std::uint8_t> mask = {}) const;
    /// Index of the leaf reached.
    int leaf_for(std::span<const double> x, std::span<const std::uint8_t> mask = {}) const;
    /// Longest root-to-leaf path counted in internal nodes.
    int depth() const;
    std::size_t leaf_count() const;

    bool operator==(const RegressionTree&) const = default;
};

/// CART variance-reduction tree. Gain ties go to the lowest feature index,
/// then the lowest threshold. Requires at least 2 * min_leaf samples.
RegressionTree fit_tree(const FeatureMatrix& x, std::span<const double> y, const TreeParams& params,
                        const std::string& schema_id = {});

nlohmann::json to_json(const RegressionTree& t);
RegressionTree regression_tree_from_json(const nlohmann::json& j);

}  // namespace artdisp::learner
