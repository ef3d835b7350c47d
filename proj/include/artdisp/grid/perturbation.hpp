#pragma once

#include <map>
#include <set>

#include <json.hpp>

#include "artdisp/grid/network.hpp"

namespace artdisp::grid {

/// A disturbance or control expressed as a change to a case. Branch and
/// generator outages are positions in the case's lists; loads and reactive
/// injections are keyed by bus id.
struct Perturbation {
    std::map<int, double> load_scale;       // bus id -> factor on p_load and q_load
    std::set<int> branch_outages;
    std::set<int> generator_outages;
    std::map<int, double> q_injections;     // bus id -> reactive injection (p.u.)

    bool empty() const {
        return load_scale.empty() && branch_outages.empty() && generator_outages.empty() && q_injections.empty();
    }
    bool operator==(const Perturbation&) const = default;
};

/// Pure: returns a new case. Throws CaseError for unknown ids and
/// IslandingError when outages separate buses from the slack.
NetworkCase apply_perturbation(const NetworkCase& c, const Perturbation& p);

nlohmann::json to_json(const Perturbation& p);
Perturbation perturbation_from_json(const nlohmann::json& j);

}  // namespace artdisp::grid
