#ifndef GOODSETS_REPORT_HPP
#define GOODSETS_REPORT_HPP

#include "goodsets/instance.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace goodsets {

struct CommandOptions {
  std::optional<std::size_t> from;  ///< geodesic endpoints, point indices
  std::optional<std::size_t> to;
  std::string method = "direct";    ///< solve: direct|geodesic|componentwise|boundary
  std::optional<std::string> pins;  ///< overrides the file's pins
  bool timing = false;              ///< adds wall-clock timing (breaks byte-identity)
  bool verify = true;               ///< re-verify boundaries before emitting
};

/// check-good, find-loop, is-full, fullify, split, maximalize, components,
/// geodesic, boundary, solve, simplicial, stats.
const std::vector<std::string>& command_names();

/// Runs one command and returns the report
///   {"command": {...}, "instance": {"digest": ..., "points": m, "arity": n},
///    "result": {...}}
/// Keys are sorted; identical input gives byte-identical output unless
/// timing is requested. Throws PreconditionError for unmet preconditions
/// (including unknown commands) and ParseError for malformed options.
nlohmann::json run_command(const Instance& instance, std::string_view command, const CommandOptions& options);

/// FNV-1a 64-bit hash of the canonical instance JSON, as "fnv1a64:<hex>".
std::string instance_digest(const Instance& instance);

} // namespace goodsets

#endif // GOODSETS_REPORT_HPP
