#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "artdisp/control/actions.hpp"
#include "artdisp/grid/perturbation.hpp"
#include "artdisp/scenario/features.hpp"

namespace artdisp::dispatch {

enum class Mode { Monitor, OpenLoop, ClosedLoop, Combined };
enum class EventKind {
    Telemetry,
    RecommendationIssued,
    OperatorApplied,
    OperatorRejected,
    AutoApplied,
    ModeChanged,
    DisturbanceInjected,
    Unresolved,
    InputError,
};

std::string_view to_string(Mode m);
std::string_view to_string(EventKind k);
Mode mode_from_string(std::string_view s);
EventKind event_kind_from_string(std::string_view s);

/// Advance the clock one tick: solve, assess, then the controller move.
struct TickInput {};
/// `id` names a pending action or a whole pending recommendation (all its
/// selected actions).
struct OperatorDecision {
    std::string id;
    bool apply = true;
};
struct ModeChange {
    Mode mode = Mode::Monitor;
};
/// Case changes apply at once; a telemetry attack corrupts the next
/// measurement vector only.
struct Disturbance {
    grid::Perturbation perturbation;
    std::optional<scenario::CorruptionConfig> telemetry_attack;

    bool empty() const { return perturbation.empty() && !telemetry_attack; }
    bool operator==(const Disturbance&) const = default;
};

using DispatchInput = std::variant<TickInput, OperatorDecision, ModeChange, Disturbance>;

nlohmann::json to_json(const Disturbance& d);
Disturbance disturbance_from_json(const nlohmann::json& j);
nlohmann::json input_to_json(const DispatchInput& in);
/// Throws std::invalid_argument on a malformed input record.
DispatchInput input_from_json(const nlohmann::json& j);

/// Error codes carried by InputError events.
namespace error_code {
inline constexpr std::string_view unknown_id = "unknown_recommendation";
inline constexpr std::string_view mode_conflict = "mode_conflict";
inline constexpr std::string_view islanding = "islanding";
inline constexpr std::string_view invalid_perturbation = "invalid_perturbation";
}  // namespace error_code

/// The first event an input produces carries the input under
/// payload["input"], which is what replay reads back.
struct DispatchEvent {
    std::int64_t seq = 0;  // position in the log
    std::int64_t tick = 0;
    EventKind kind = EventKind::Telemetry;
    nlohmann::json payload = nlohmann::json::object();

    bool operator==(const DispatchEvent&) const = default;
};

nlohmann::json to_json(const DispatchEvent& e);
DispatchEvent event_from_json(const nlohmann::json& j);
/// One JSON object per line.
void write_event_log(std::ostream& out, const std::vector<DispatchEvent>& log);
std::vector<DispatchEvent> read_event_log(std::istream& in);

struct DispatchState {
    Mode mode = Mode::Monitor;
    grid::NetworkCase current_case;
    /// Restored when a tick's power flow diverges.
    grid::NetworkCase last_good_case;
    grid::PowerFlowSolution last_solution;
    stability::LIndexReport last_report;
    bool converged = false;
    std::vector<control::Recommendation> pending;
    std::vector<DispatchEvent> event_log;
    std::int64_t tick = 0;
    std::optional<scenario::CorruptionConfig> pending_attack;

    /// Field-by-field equality, the solution compared by voltages.
    bool same_as(const DispatchState& o) const;
};

struct EngineConfig {
    control::ControlConfig control;
    /// Automatic moves (ClosedLoop, Combined) only when the verified joint
    /// set lowers the state class. Partial improvements are issued as
    /// recommendations instead, so the autopilot spends no effort on moves
    /// that leave the class unchanged.
    bool require_class_gain = true;

    bool operator==(const EngineConfig&) const = default;
};

struct DispatchContext {
    std::shared_ptr<const learner::ModelBundle> bundle;  // null: analytic fallback only
    EngineConfig config;
};

/// Solves and assesses the case at tick 0 without logging anything. Throws
/// std::invalid_argument when the case does not converge.
DispatchState initial_state(const grid::NetworkCase& c, const DispatchContext& ctx, Mode mode = Mode::Monitor);

struct StepResult {
    DispatchState state;
    std::vector<DispatchEvent> events;  // also appended to state.event_log
};

/// Deterministic transition. Invalid inputs (unknown ids, decisions outside
/// OpenLoop/Combined, islanding disturbances) leave the state unchanged apart
/// from one logged InputError event.
StepResult dispatch_step(const DispatchContext& ctx, DispatchState state, const DispatchInput& input);

class ReplayError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The inputs recorded in a log, in order.
std::vector<DispatchInput> inputs_from_log(const std::vector<DispatchEvent>& log);

/// Re-runs the logged inputs from `initial` and checks every regenerated
/// event against the log. Throws ReplayError on the first difference.
DispatchState replay(const DispatchContext& ctx, const DispatchState& initial, const std::vector<DispatchEvent>& log);

}  // namespace artdisp::dispatch
