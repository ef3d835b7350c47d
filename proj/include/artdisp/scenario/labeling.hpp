#pragma once

#include <map>
#include <string_view>
#include <vector>

#include "artdisp/grid/network.hpp"
#include "artdisp/grid/power_flow.hpp"

namespace artdisp::scenario {

enum class LabelStatus { Secure, Labeled, Unlabelable };

std::string_view to_string(LabelStatus s);
LabelStatus label_status_from_string(std::string_view s);

struct GreedyOptions {
    double alarm = 0.5;
    double step_dq = 0.1;
    double budget = 5.0;
};

struct GreedyStep {
    int bus = 0;
    double dq = 0.0;
    double l_max_after = 0.0;
    double l_sum_after = 0.0;
};

struct GreedyResult {
    LabelStatus status = LabelStatus::Secure;
    std::vector<int> candidates;
    std::vector<double> dq;  // accumulated injection per candidate, same order
    std::vector<GreedyStep> steps;
    double l_max_before = 0.0;
    double l_sum_before = 0.0;
    double l_max_after = 0.0;
    double l_sum_after = 0.0;
};

/// Repeatedly adds step_dq at the candidate whose power-flow-verified l_max
/// decrease is largest (ties go to the earlier candidate) until l_max < alarm.
/// Stops as Unlabelable when the next step would exceed the budget or when no
/// candidate lowers l_max. Candidates must be load buses.
GreedyResult greedy_injection_search(const grid::NetworkCase& c, const grid::PowerFlowSolution& solution,
                                     const std::vector<int>& candidates, const GreedyOptions& options = {});

/// The accumulated injections keyed by bus id (all candidates present).
std::map<int, double> label_corrective_injections(const grid::NetworkCase& c, const grid::PowerFlowSolution& solution,
                                                  const std::vector<int>& candidates, double alarm, double step_dq,
                                                  double budget);

}  // namespace artdisp::scenario
