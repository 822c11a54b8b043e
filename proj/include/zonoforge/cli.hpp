#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "zonoforge/config.hpp"
#include "zonoforge/error.hpp"
#include "zonoforge/geometry.hpp"

namespace zonoforge::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kExitPass = 0;
inline constexpr int kExitCertificateFailure = 1;
inline constexpr int kExitInputError = 2;

// Parsed input document. Column indices are 0-based.
struct ConfigDocument {
  Config config;
  std::optional<std::vector<ColumnSet>> iprime;
  // iprime lists the complete family rather than seeds to be closed.
  bool iprime_closed = false;
  std::optional<ColumnSet> i;
  std::optional<std::uint64_t> seed;
  std::optional<PointSet> points;
};

// Throws Error(kParse) naming the offending field, or a validation error.
ConfigDocument parse_document(const Json& j);
// Parses text; syntax errors carry line and column.
ConfigDocument parse_document_text(const std::string& text);
ConfigDocument load_document(const std::string& path);

struct CommandOptions {
  std::string command;
  std::optional<std::string> theorem;
  std::optional<std::string> kind;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> dmax;
  unsigned max_n = 4;
  unsigned max_N = 6;
};

struct CommandResult {
  Json report;
  int exit_code = kExitPass;
};

CommandResult cmd_matroid(const ConfigDocument& doc);
CommandResult cmd_space(const ConfigDocument& doc, const CommandOptions& opt);
CommandResult cmd_verify(const ConfigDocument& doc, const CommandOptions& opt);
CommandResult cmd_search_r37(const CommandOptions& opt);

// Dispatches on opt.command. Library errors become an error report with the
// matching exit code instead of propagating.
CommandResult run(const CommandOptions& opt, const std::optional<ConfigDocument>& doc);

// Report for an error raised before or during a command.
CommandResult error_result(const std::string& command, ErrorCode code, const std::string& message);

// Canonical text of a report (two-space indent, trailing newline).
std::string render(const Json& report);

}  // namespace zonoforge::cli
