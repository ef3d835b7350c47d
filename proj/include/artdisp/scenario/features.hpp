#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "artdisp/grid/network.hpp"
#include "artdisp/grid/power_flow.hpp"

namespace artdisp::scenario {

class SchemaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Feature layout bound to one case topology:
///   vm[bus] for every bus, then p[bus], then q[bus] (net injections), then
///   pf[branch] (active power entering each branch at its from end; zero
///   when the branch is out of service).
/// Buses and branches follow the case list order.
struct FeatureSchema {
    std::string id;
    std::vector<int> bus_ids;
    std::vector<std::pair<int, int>> branch_ends;
    std::vector<std::string> names;
    /// Base-case values, used by Stuck corruption.
    std::vector<double> nominal;
    /// Dataset means, used by Gap corruption with TrainingMean fill. Equal to
    /// nominal until a dataset sets them.
    std::vector<double> training_mean;

    std::size_t size() const { return names.size(); }
    std::size_t vm_offset() const { return 0; }
    std::size_t p_offset() const { return bus_ids.size(); }
    std::size_t q_offset() const { return 2 * bus_ids.size(); }
    std::size_t flow_offset() const { return 3 * bus_ids.size(); }
};

struct MeasurementVector {
    std::vector<double> features;
    std::vector<std::uint8_t> mask;  // 1 where the value is known to be bad
    std::string schema_id;

    bool operator==(const MeasurementVector&) const = default;
};

/// Topology hash over bus ids and branch endpoints.
std::string schema_id_for(const grid::NetworkCase& c);

/// Solves the case to fill nominal values. Throws if the base case does not
/// converge.
FeatureSchema make_schema(const grid::NetworkCase& c);

/// Throws SchemaError when the case does not match the schema topology.
void check_schema(const FeatureSchema& schema, const grid::NetworkCase& c);

MeasurementVector extract_features(const grid::NetworkCase& c, const grid::PowerFlowSolution& solution,
                                   const FeatureSchema& schema);

enum class CorruptionMode { Gap, Noise, Stuck };
enum class GapFill { TrainingMean, Zero, LastValue };

std::string_view to_string(CorruptionMode m);
std::string_view to_string(GapFill f);
CorruptionMode corruption_mode_from_string(std::string_view s);
GapFill gap_fill_from_string(std::string_view s);

struct CorruptionConfig {
    double rate = 0.0;
    CorruptionMode mode = CorruptionMode::Gap;
    double noise_sigma = 0.05;
    GapFill gap_fill = GapFill::TrainingMean;
    std::uint64_t rng_seed = 0;

    void validate() const;
    bool operator==(const CorruptionConfig&) const = default;
};

nlohmann::json to_json(const CorruptionConfig& c);
CorruptionConfig corruption_config_from_json(const nlohmann::json& j);

/// Each feature is corrupted independently with probability `rate`, from a
/// random stream keyed by (rng_seed, stream). LastValue fill takes the value
/// from `previous`, falling back to the nominal value when absent.
MeasurementVector corrupt_measurements(const MeasurementVector& m, const CorruptionConfig& config,
                                       const FeatureSchema& schema, std::uint64_t stream = 0,
                                       const MeasurementVector* previous = nullptr);

nlohmann::json to_json(const FeatureSchema& s);
FeatureSchema feature_schema_from_json(const nlohmann::json& j);
nlohmann::json to_json(const MeasurementVector& m);
MeasurementVector measurement_from_json(const nlohmann::json& j);

}  // namespace artdisp::scenario
