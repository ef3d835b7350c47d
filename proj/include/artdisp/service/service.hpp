#pragma once

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <thread>
#include <vector>

#include <json.hpp>

#include "artdisp/dispatch/engine.hpp"

namespace artdisp::service {

/// Immutable view published after every mutation.
struct Snapshot {
    std::uint64_t version = 0;  // bumped by every mutation
    std::int64_t tick = 0;
    dispatch::Mode mode = dispatch::Mode::Monitor;
    std::int64_t event_count = 0;
    std::vector<control::Recommendation> pending;
    nlohmann::json json;  // the /api/state body
};

/// The /api/state body. The report always belongs to the last assessed
/// case; `assessment_pending` is set while a disturbance awaits the next tick.
nlohmann::json snapshot_json(const dispatch::DispatchState& s, std::uint64_t version, bool model_loaded,
                             std::size_t recent_events);

struct ServiceOptions {
    dispatch::Mode mode = dispatch::Mode::Monitor;
    std::size_t recent_events = 50;
    /// Every event is appended here as one JSON line when set.
    std::optional<std::filesystem::path> event_log_path;
};

/// Owns the one grid instance. submit() calls are serialized (single
/// writer); readers take the current snapshot pointer and never see a
/// partially applied step.
class DispatchService {
public:
    DispatchService(const grid::NetworkCase& c, std::shared_ptr<const learner::ModelBundle> bundle,
                    dispatch::EngineConfig config, ServiceOptions options = {});
    ~DispatchService();
    DispatchService(const DispatchService&) = delete;
    DispatchService& operator=(const DispatchService&) = delete;

    struct Outcome {
        std::vector<dispatch::DispatchEvent> events;
        std::shared_ptr<const Snapshot> snapshot;
    };
    Outcome submit(const dispatch::DispatchInput& input);

    std::shared_ptr<const Snapshot> snapshot() const;
    /// Events with tick >= since_tick and seq > after_seq, at most `limit`.
    std::vector<dispatch::DispatchEvent> events(std::int64_t since_tick, std::int64_t after_seq = -1,
                                                std::size_t limit = SIZE_MAX) const;
    /// Blocks until the version exceeds `seen`, the timeout passes or the
    /// service shuts down; returns the current snapshot either way.
    std::shared_ptr<const Snapshot> wait_for_change(std::uint64_t seen, std::chrono::milliseconds timeout) const;

    /// Submits a tick every `period` on a background thread until stopped.
    void start_clock(std::chrono::milliseconds period);
    void stop_clock();
    /// Wakes every waiter; later waits return at once.
    void shutdown();
    bool is_shut_down() const { return closed_; }

    const dispatch::DispatchContext& context() const { return ctx_; }
    const dispatch::DispatchState& initial_state() const { return initial_; }
    /// Copy of the writer's state, taken under the writer lock.
    dispatch::DispatchState state() const;

private:
    void publish(const std::vector<dispatch::DispatchEvent>& events);

    dispatch::DispatchContext ctx_;
    ServiceOptions options_;
    dispatch::DispatchState initial_;

    mutable std::mutex writer_;  // serializes submit()
    dispatch::DispatchState state_;
    std::ofstream log_file_;

    mutable std::shared_mutex read_;  // guards log_ and current_
    std::vector<dispatch::DispatchEvent> log_;
    std::shared_ptr<const Snapshot> current_;

    mutable std::mutex wake_;
    mutable std::condition_variable changed_;
    std::atomic<bool> closed_{false};

    std::thread clock_;
    std::mutex clock_mutex_;
    std::condition_variable clock_cv_;
    bool clock_stop_ = false;
};

}  // namespace artdisp::service
