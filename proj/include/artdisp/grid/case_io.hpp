#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "artdisp/grid/network.hpp"

namespace artdisp::grid {

enum class CaseFormat { IeeeCdf, CaseJson };

/// Malformed input text. `line` is 1-based; 0 when the position is unknown.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// Parses a case and validates it. Throws ParseError on syntax problems and
/// CaseError on invariant violations.
NetworkCase parse_case(std::string_view text, CaseFormat format);

/// Reads a file, picking the format from the extension (.json -> CaseJSON,
/// anything else -> IEEE CDF).
NetworkCase load_case(const std::filesystem::path& path);

nlohmann::json to_json(const NetworkCase& c);
NetworkCase case_from_json(const nlohmann::json& j);

/// CaseJSON text, two-space indented.
std::string write_case_json(const NetworkCase& c);

}  // namespace artdisp::grid
