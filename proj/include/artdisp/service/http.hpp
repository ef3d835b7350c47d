#pragma once

#include <memory>
#include <string>

#include "artdisp/service/service.hpp"

namespace httplib {
class Server;
}

namespace artdisp::service {

/// Machine-readable codes in 400 bodies, besides the engine's error codes.
namespace http_error {
inline constexpr const char* malformed_json = "malformed_json";
inline constexpr const char* invalid_mode = "invalid_mode";
inline constexpr const char* invalid_query = "invalid_query";
}  // namespace http_error

/// JSON endpoints and the server-push stream over one DispatchService.
///
///   GET  /api/state                  snapshot
///   GET  /api/recommendations        pending recommendations
///   POST /api/actions/{id}/apply     204; 404 unknown id; 409 wrong mode
///   POST /api/actions/{id}/reject    same
///   POST /api/mode {"mode": ...}     204
///   POST /api/disturbance {...}      204; a bare perturbation or
///                                    {"perturbation": ..., "telemetry_attack": ...}
///   POST /api/tick                   200 with the tick's events
///   GET  /api/events?since=T&after_seq=S&limit=N
///   GET  /api/stream                 text/event-stream: "snapshot" on
///                                    connect, then one "delta" per change
///
/// Errors carry {"error": {"code", "message"}}.
class HttpFrontend {
public:
    explicit HttpFrontend(DispatchService& service);
    ~HttpFrontend();

    /// Binds; port 0 picks a free one. Returns the bound port or -1.
    int bind(const std::string& host, int port);
    /// Blocks serving requests until stop().
    bool listen_after_bind();
    void stop();
    void wait_until_ready() const;

private:
    DispatchService& service_;
    std::unique_ptr<httplib::Server> server_;
};

}  // namespace artdisp::service
