#pragma once

#include <complex>
#include <span>
#include <string_view>
#include <vector>

#include "artdisp/grid/network.hpp"
#include "artdisp/grid/ybus.hpp"

namespace artdisp::grid {

struct PowerFlowOptions {
    double tolerance = 1e-8;
    int max_iter = 20;
    /// V = 1.0 at PQ buses, setpoints at PV/slack, all angles at the slack
    /// reference. When false, starts from `initial_voltages` if given,
    /// otherwise from the case's stored v_mag/v_ang.
    bool flat_start = true;
    bool enforce_q_limits = false;
    std::span<const Complex> initial_voltages{};
};

enum class SolveStatus { Converged, MaxIterations, SingularJacobian, Diverged };

std::string_view to_string(SolveStatus s);

struct BranchFlow {
    Complex from;  // power entering the branch at the from end
    Complex to;    // power entering the branch at the to end
};

struct PowerFlowSolution {
    std::vector<Complex> v;
    bool converged = false;
    SolveStatus status = SolveStatus::MaxIterations;
    int iterations = 0;
    double max_mismatch = 0.0;
    double p_slack = 0.0;  // slack-bus generation
    double q_slack = 0.0;
    std::vector<Complex> injection;  // net complex injection per bus
    std::vector<BranchFlow> branch_flows;
    double total_loss = 0.0;
    /// Bus ids switched from PV to PQ by Q-limit enforcement.
    std::vector<int> limited_buses;
};

/// Polar-form full Newton-Raphson. Non-convergence is reported through
/// `converged`/`status`, never thrown.
PowerFlowSolution solve_power_flow(const NetworkCase& c, const PowerFlowOptions& options = {});

/// Same, reusing an admittance matrix already built for this topology.
PowerFlowSolution solve_power_flow(const NetworkCase& c, const AdmittanceMatrix& ybus,
                                   const PowerFlowOptions& options = {});

/// Largest |dP| over non-slack buses and |dQ| over PQ buses at voltages `v`.
double max_power_mismatch(const NetworkCase& c, const AdmittanceMatrix& ybus, std::span<const Complex> v);

/// First-order voltage response to an extra reactive injection `dq` at one
/// bus, from the power-flow Jacobian at `solution`. Returns the extrapolated
/// bus voltages.
std::vector<Complex> linearized_injection_response(const NetworkCase& c, const AdmittanceMatrix& ybus,
                                                   const PowerFlowSolution& solution, int bus_id, double dq);

}  // namespace artdisp::grid
