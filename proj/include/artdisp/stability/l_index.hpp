#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "artdisp/grid/network.hpp"
#include "artdisp/grid/power_flow.hpp"
#include "artdisp/grid/ybus.hpp"

namespace artdisp::stability {

using grid::Complex;

enum class StateClass { Normal, Alarm, Emergency };

std::string_view to_string(StateClass c);
StateClass state_class_from_string(std::string_view text);

class StabilityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thresholds are not strictly increasing.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Thresholds {
    double alarm = 0.5;
    double emergency = 0.8;

    void validate() const;
    bool operator==(const Thresholds&) const = default;
};

/// Generator buses (any in-service unit, slack always) versus the rest, both
/// in case bus order. The *_pos vectors hold positions in the case bus list.
struct BusPartition {
    std::vector<int> generator_set;
    std::vector<int> load_set;
    std::vector<std::size_t> generator_pos;
    std::vector<std::size_t> load_pos;

    bool operator==(const BusPartition&) const = default;
};

/// F = -Y_LL^-1 Y_LG, rows follow load_set and columns generator_set.
struct FMatrix {
    Eigen::MatrixXcd entries;
    BusPartition partition;
};

struct LIndexReport {
    std::vector<int> load_buses;
    std::vector<double> l_local;
    double l_max = 0.0;
    int l_max_bus = 0;
    double l_sum = 0.0;
    StateClass state_class = StateClass::Normal;
    Thresholds thresholds;
};

BusPartition partition_buses(const grid::NetworkCase& c);

/// Throws StabilityError("degenerate load subnetwork") when Y_LL is singular.
FMatrix compute_f_matrix(const grid::AdmittanceMatrix& ybus, const BusPartition& partition);

/// L_j = |1 - sum_i F_ji V_i / V_j| for each load bus j.
LIndexReport compute_l_index(const grid::PowerFlowSolution& solution, const FMatrix& f,
                             const Thresholds& thresholds = {});

/// Closed on the left: l_max == alarm is Alarm.
StateClass classify_state(double l_max, const Thresholds& thresholds = {});

/// Partition, F and L-index in one call.
LIndexReport assess(const grid::NetworkCase& c, const grid::PowerFlowSolution& solution,
                    const Thresholds& thresholds = {});

nlohmann::json to_json(const LIndexReport& r);
LIndexReport l_index_report_from_json(const nlohmann::json& j);

struct LoadabilityOptions {
    double lambda_tol = 1e-3;
    double initial_step = 0.1;
    double max_lambda = 100.0;
    /// Scale generator P along with total system load so the slack does not
    /// carry the whole increase.
    bool scale_generation = false;
    grid::PowerFlowOptions power_flow;
};

struct LoadabilityPoint {
    double lambda = 0.0;
    double l_max = 0.0;
};

struct LoadabilityResult {
    double lambda_max = 0.0;
    std::map<int, double> direction;
    std::vector<LoadabilityPoint> trace;  // sorted by lambda
};

/// Loads at scale lambda: load0 * (1 + (lambda - 1) * d) per bus with
/// direction entry d. Buses missing from the direction are held fixed.
grid::NetworkCase scale_along(const grid::NetworkCase& c, const std::map<int, double>& direction, double lambda,
                              bool scale_generation);

/// Stepped power flow then bisection. A point counts as solvable when the
/// power flow converges and l_max < 1.
LoadabilityResult find_loadability_limit(const grid::NetworkCase& c, const std::map<int, double>& direction,
                                         const LoadabilityOptions& options = {});

/// Every bus with factor 1.
std::map<int, double> uniform_direction(const grid::NetworkCase& c);

}  // namespace artdisp::stability
