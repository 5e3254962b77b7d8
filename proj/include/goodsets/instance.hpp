#ifndef GOODSETS_INSTANCE_HPP
#define GOODSETS_INSTANCE_HPP

#include "goodsets/measures.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace goodsets {

/// Malformed instance file or option value.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Contents of an instance file.
///
///   {
///     "axes":    [{"name": "x", "values": ["0", "1"]}, ...],
///     "points":  [["0", "1"], ...],
///     "f":       {"0": "1/2", "3": "-2"},               // optional
///     "pins":    [{"axis": "x", "value": "0", "rational": "0"}],  // optional
///     "measure": {"0": "1/4", ...}                      // optional
///   }
///
/// Keys of "f" and "measure" are 0-based point indices in file order. "f"
/// defaults to zero on points it does not list. Rationals are JSON integers
/// or strings "p" / "p/q"; floating-point numbers are rejected.
struct Instance {
  SpacePtr space;
  PointSet points;
  std::optional<FunctionTable> f;
  std::optional<PinSet> pins;
  std::optional<FiniteMeasure> measure;

  /// f, or the zero function when absent.
  FunctionTable function() const;
};

/// Canonical "p/q" form ("p" for integers).
std::string format_rational(const Scalar& q);
Scalar parse_rational(const nlohmann::json& value);
Scalar parse_rational(std::string_view text);

Instance parse_instance(std::string_view json_text);
Instance load_instance(const std::filesystem::path& path);
nlohmann::json to_json(const Instance& instance);

bool same_instance(const Instance& a, const Instance& b);

/// "axis:value=rational" items separated by commas, e.g. "x:x0=0,y:y0=1/2".
PinSet parse_pins(const Space& space, std::string_view text);

/// Named instances reproducing the worked examples (Examples 2, 4, 5, 6/T4,
/// 7, 8, 10 at depths 1..6 and the rectangle loop), keyed by file stem.
std::vector<std::pair<std::string, Instance>> example_instances();

/// Instance for the depth-k truncation of the doubling example: points
/// (x0,y0,z0) then, for n = 1..k, (xn,y0,z(n-1)), (x0,yn,z(n-1)), (xn,yn,zn);
/// f is the indicator of (x0,y0,z0) and x0, y0 are pinned to 0.
Instance doubling_instance(std::size_t depth);

/// Writes every example as <stem>.json into dir; returns the file paths.
std::vector<std::filesystem::path> write_examples(const std::filesystem::path& dir);

} // namespace goodsets

#endif // GOODSETS_INSTANCE_HPP
