#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace artdisp::grid {

enum class BusKind { Slack, PV, PQ };

std::string_view to_string(BusKind kind);
BusKind bus_kind_from_string(std::string_view text);

/// A network node. Loads and shunts are per-unit on the case MVA base.
struct Bus {
    int id = 0;
    BusKind kind = BusKind::PQ;
    double p_load = 0.0;
    double q_load = 0.0;
    double g_shunt = 0.0;
    double b_shunt = 0.0;
    double v_mag = 1.0;
    double v_ang = 0.0;  // radians
    double base_kv = 1.0;
    double v_min = 0.94;
    double v_max = 1.06;

    bool operator==(const Bus&) const = default;
};

/// Pi-model branch. A tap of 0 is read as nominal (1.0), matching the CDF
/// convention for lines.
struct Branch {
    int from_bus = 0;
    int to_bus = 0;
    double r = 0.0;
    double x = 0.0;
    double b_charging = 0.0;
    double tap = 1.0;
    double shift = 0.0;  // radians
    bool in_service = true;
    double mva_rating = 0.0;

    double effective_tap() const { return tap == 0.0 ? 1.0 : tap; }
    bool operator==(const Branch&) const = default;
};

struct Generator {
    int bus = 0;
    double p_gen = 0.0;
    double q_gen = 0.0;
    double q_min = -9999.0;
    double q_max = 9999.0;
    double v_set = 1.0;
    bool in_service = true;

    bool operator==(const Generator&) const = default;
};

struct NetworkCase {
    std::string name;
    double base_mva = 100.0;
    std::vector<Bus> buses;
    std::vector<Branch> branches;
    std::vector<Generator> generators;

    bool operator==(const NetworkCase&) const = default;

    std::size_t bus_count() const { return buses.size(); }
    std::optional<std::size_t> find_bus(int id) const;
    /// Throws CaseError when the id is unknown.
    std::size_t bus_index(int id) const;
    std::size_t slack_index() const;
};

/// Bus id -> position lookup built once for hot loops.
class BusIndex {
public:
    explicit BusIndex(const NetworkCase& c);
    std::size_t at(int id) const;
    bool contains(int id) const { return map_.contains(id); }

private:
    std::unordered_map<int, std::size_t> map_;
};

/// Invariant violation in a network case. `element` names the offending bus
/// id or branch/generator position when one applies.
class CaseError : public std::runtime_error {
public:
    explicit CaseError(const std::string& what, std::optional<int> element = std::nullopt)
        : std::runtime_error(what), element_(element) {}
    std::optional<int> element() const { return element_; }

private:
    std::optional<int> element_;
};

class IslandingError : public CaseError {
public:
    IslandingError(const std::string& what, std::vector<int> cut, std::vector<int> stranded)
        : CaseError(what), cut_(std::move(cut)), stranded_(std::move(stranded)) {}
    /// Branch positions whose outage separated the network.
    const std::vector<int>& cut() const { return cut_; }
    /// Bus ids no longer connected to the slack bus.
    const std::vector<int>& stranded() const { return stranded_; }

private:
    std::vector<int> cut_;
    std::vector<int> stranded_;
};

/// Checks every structural invariant; throws CaseError on the first violation.
void validate(const NetworkCase& c);

/// Bus ids unreachable from the slack bus through in-service branches.
std::vector<int> disconnected_buses(const NetworkCase& c);

/// Per-bus aggregate of in-service generators (several units on one bus are
/// summed, sharing the first unit's voltage setpoint).
struct BusGeneration {
    bool present = false;
    double p = 0.0;
    double q = 0.0;
    double q_min = 0.0;
    double q_max = 0.0;
    double v_set = 1.0;
};

std::vector<BusGeneration> aggregate_generation(const NetworkCase& c);

}  // namespace artdisp::grid
