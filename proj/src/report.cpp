#include "goodsets/report.hpp"

#include "goodsets/goodness.hpp"
#include "goodsets/measures.hpp"
#include "goodsets/solver.hpp"
#include "goodsets/structure.hpp"

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>

namespace goodsets {

using nlohmann::json;

namespace {

json integer_json(const mpz_class& z) {
  if (z.fits_slong_p()) {
    return z.get_si();
  }
  return z.get_str();
}

json indices_json(const Instance& inst, const PointSet& S) {
  json out = json::array();
  for (const Point& p : S) {
    out.push_back(*inst.points.index_of(p));
  }
  return out;
}

json labels_json(const Instance& inst, std::span<const Point> points) {
  json out = json::array();
  for (const Point& p : points) {
    out.push_back(inst.space->labels(p));
  }
  return out;
}

json coordinate_json(const Instance& inst, Coordinate c) {
  return {{"axis", inst.space->axis(c.axis).name}, {"value", inst.space->label(c)}};
}

json coordinates_json(const Instance& inst, std::span<const Coordinate> cs) {
  json out = json::array();
  for (Coordinate c : cs) {
    out.push_back(coordinate_json(inst, c));
  }
  return out;
}

json loop_json(const Instance& inst, const Loop& loop) {
  if (!verify_circuit(*inst.space, loop)) {
    throw InternalError("loop certificate failed re-verification");
  }
  json points = json::array();
  json coefficients = json::array();
  for (std::size_t k = 0; k < loop.size(); ++k) {
    points.push_back(*inst.points.index_of(loop.support[k]));
    coefficients.push_back(integer_json(loop.coefficients[k]));
  }
  return {{"points", std::move(points)}, {"coefficients", std::move(coefficients)}};
}

json decomposition_json(const Instance& inst, const Decomposition& d) {
  json out = json::object();
  for (std::size_t i = 0; i < d.arity(); ++i) {
    json axis = json::object();
    for (const auto& [value, x] : d.axis_values(i)) {
      axis[inst.space->label({i, value})] = format_rational(x);
    }
    out[inst.space->axis(i).name] = std::move(axis);
  }
  return out;
}

json rationals_json(std::span<const Scalar> v) {
  json out = json::array();
  for (const Scalar& x : v) {
    out.push_back(format_rational(x));
  }
  return out;
}

std::size_t point_option(const Instance& inst, const std::optional<std::size_t>& idx, const char* flag) {
  if (!idx) {
    throw PreconditionError(std::string("missing ") + flag + " point index");
  }
  if (*idx >= inst.points.size()) {
    throw PreconditionError(std::string(flag) + " index " + std::to_string(*idx) + " out of range (the instance has " +
                            std::to_string(inst.points.size()) + " points)");
  }
  return *idx;
}

json cmd_check_good(const Instance& inst, const CommandOptions&) {
  const GoodnessVerdict v = is_good(inst.points);
  json out{{"good", v.good}};
  if (v.loop) {
    out["loop"] = loop_json(inst, *v.loop);
  }
  return out;
}

json cmd_find_loop(const Instance& inst, const CommandOptions&) {
  const GoodnessVerdict v = is_good(inst.points);
  return {{"loop", v.loop ? loop_json(inst, *v.loop) : json(nullptr)}};
}

json cmd_is_full(const Instance& inst, const CommandOptions&) {
  const bool fast = is_full(inst.points);
  const bool by_span = is_full_by_span(inst.points);
  if (fast != by_span) {
    throw InternalError("fullness tests disagree");
  }
  return {{"full", fast}, {"good", is_good(inst.points).good}, {"deficiency", deficiency(inst.points)}};
}

json added_json(const Instance& inst, const PointSet& grown) {
  return labels_json(inst, grown.minus(inst.points).points());
}

json cmd_fullify(const Instance& inst, const CommandOptions&) {
  const PointSet F = full_closure(inst.points);
  return {{"points", labels_json(inst, F.points())}, {"added", added_json(inst, F)}, {"full", is_full(F)}};
}

json cmd_split(const Instance& inst, const CommandOptions&) {
  const SplitExtension split = split_extension(inst.points);
  const auto B = all_projections(split.complement);
  if (!is_boundary(inst.points, B)) {
    throw InternalError("projections of the split complement are not a boundary");
  }
  return {{"points", labels_json(inst, split.full.points())},
          {"added", labels_json(inst, split.complement.points())},
          {"full", is_full(split.full)},
          {"added_full", is_full(split.complement)},
          {"boundary", coordinates_json(inst, B)}};
}

json cmd_maximalize(const Instance& inst, const CommandOptions&) {
  const PointSet M = extend_to_maximal(inst.points);
  return {{"points", labels_json(inst, M.points())}, {"added", added_json(inst, M)}};
}

json classes_json(const Instance& inst, const EiClasses& classes) {
  json out = json::object();
  for (std::size_t i = 0; i < classes.classes.size(); ++i) {
    json axis = json::array();
    for (const auto& cls : classes.classes[i]) {
      json labels = json::array();
      for (std::size_t v : cls) {
        labels.push_back(inst.space->label({i, v}));
      }
      axis.push_back(std::move(labels));
    }
    out[inst.space->axis(i).name] = std::move(axis);
  }
  return out;
}

json cmd_components(const Instance& inst, const CommandOptions&) {
  const ComponentPartition partition = related_components(inst.points);
  json components = json::array();
  for (const PointSet& c : partition.components) {
    components.push_back(indices_json(inst, c));
  }
  return {{"components", std::move(components)},
          {"count", partition.size()},
          {"ei_classes", classes_json(inst, ei_classes(inst.points, partition))}};
}

json cmd_geodesic(const Instance& inst, const CommandOptions& options) {
  const std::size_t from = point_option(inst, options.from, "--from");
  const std::size_t to = point_option(inst, options.to, "--to");
  const auto g = geodesic(inst.points, inst.points[from], inst.points[to]);
  json out{{"from", from}, {"to", to}, {"related", g.has_value()}};
  if (g) {
    out["length"] = g->length();
    out["points"] = indices_json(inst, g->points);
  } else {
    out["length"] = nullptr;
    out["points"] = nullptr;
  }
  return out;
}

json cmd_boundary(const Instance& inst, const CommandOptions& options) {
  const BoundaryConstruction b =
      boundary(inst.points, options.verify ? BoundaryCheck::Verify : BoundaryCheck::Skip);
  json generators = json::array();
  for (const Generator& g : b.generators) {
    json labels = json::array();
    for (std::size_t v : b.classes.classes[g.axis][g.index]) {
      labels.push_back(inst.space->label({g.axis, v}));
    }
    generators.push_back({{"axis", inst.space->axis(g.axis).name}, {"class", std::move(labels)}});
  }
  json relations = json::array();
  for (std::size_t r = 0; r < b.relations.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < b.relations.cols(); ++c) {
      row.push_back(b.relations(r, c).get_num().get_si());
    }
    relations.push_back(std::move(row));
  }
  json cross = json::array();
  for (const Point& p : b.cross_section) {
    cross.push_back(*inst.points.index_of(p));
  }
  return {{"boundary", coordinates_json(inst, b.boundary)},
          {"generators", std::move(generators)},
          {"relations", std::move(relations)},
          {"basis", b.basis},
          {"cross_section", std::move(cross)},
          {"verified", options.verify}};
}

PinSet pins_for(const Instance& inst, const CommandOptions& options) {
  if (options.pins) {
    return parse_pins(*inst.space, *options.pins);
  }
  return inst.pins.value_or(PinSet{});
}

json solve_json(const Instance& inst, const SolveReport& r, const PinSet& pins) {
  json out{{"method", to_string(r.method)}, {"verdict", to_string(r.verdict)}};
  json pins_json = json::array();
  for (const auto& [c, value] : pins) {
    json item = coordinate_json(inst, c);
    item["rational"] = format_rational(value);
    pins_json.push_back(std::move(item));
  }
  out["pins"] = std::move(pins_json);
  if (r.verdict == Verdict::Inconsistent) {
    out["decomposition"] = nullptr;
    out["witness"] = rationals_json(r.witness);
  } else {
    out["decomposition"] = decomposition_json(inst, r.decomposition);
    out["kernel_dimension"] = r.kernel.dimension();
    json kernel = json::array();
    for (const Vector& v : r.kernel.vectors) {
      Decomposition d(inst.space->arity());
      for (std::size_t c = 0; c < v.size(); ++c) {
        d.set(r.kernel_columns[c], v[c]);
      }
      kernel.push_back(decomposition_json(inst, d));
    }
    out["kernel"] = std::move(kernel);
  }
  out["diagnostics"] = {{"max_geodesic_length", r.diagnostics.max_geodesic_length},
                        {"max_abs_value", format_rational(r.diagnostics.max_abs_value)}};
  return out;
}

json cmd_solve(const Instance& inst, const CommandOptions& options) {
  const FunctionTable f = inst.function();
  if (options.method == "direct") {
    const PinSet pins = pins_for(inst, options);
    return solve_json(inst, solve_direct(inst.points, f, pins), pins);
  }
  if (options.method == "geodesic") {
    const Point& base = inst.points[options.from ? point_option(inst, options.from, "--from") : 0];
    return solve_json(inst, solve_via_geodesics(inst.points, f, base), base_pins(base));
  }
  if (options.method == "componentwise") {
    const SolveReport r = solve_componentwise(inst.points, f);
    PinSet pins;
    for (const PointSet& c : related_components(inst.points).components) {
      pins.merge(base_pins(c[0]));
    }
    return solve_json(inst, r, pins);
  }
  if (options.method == "boundary") {
    PinSet pins = pins_for(inst, options);
    if (pins.empty()) {
      for (Coordinate c : boundary(inst.points).boundary) {
        pins.emplace(c, Scalar(0));
      }
    }
    return solve_json(inst, solve_with_boundary(inst.points, f, pins), pins);
  }
  throw PreconditionError("unknown solve method '" + options.method +
                          "' (expected direct, geodesic, componentwise or boundary)");
}

json marginals_json(const Instance& inst, const MarginalVector& m) {
  json out = json::object();
  for (std::size_t i = 0; i < m.per_axis.size(); ++i) {
    json axis = json::object();
    for (const auto& [value, mass] : m.per_axis[i]) {
      axis[inst.space->label({i, value})] = format_rational(mass);
    }
    out[inst.space->axis(i).name] = std::move(axis);
  }
  return out;
}

json cmd_simplicial(const Instance& inst, const CommandOptions&) {
  const FiniteMeasure mu = inst.measure ? *inst.measure : FiniteMeasure::uniform(inst.points);
  const SimplicialVerdict v = is_simplicial(mu);
  json out{{"simplicial", v.simplicial},
           {"marginals", marginals_json(inst, marginals(mu))},
           {"mu_set", is_mu_set(inst.points).mu_set}};
  if (v.certificate) {
    json cert = loop_json(inst, v.certificate->loop);
    cert["epsilon"] = format_rational(v.certificate->epsilon);
    out["certificate"] = std::move(cert);
  } else {
    out["certificate"] = nullptr;
  }
  return out;
}

json cmd_stats(const Instance& inst, const CommandOptions&) {
  json sizes = json::array();
  for (std::size_t i = 0; i < inst.space->arity(); ++i) {
    sizes.push_back(projection(inst.points, i).size());
  }
  const bool good = is_good(inst.points).good;
  json out{{"arity", inst.space->arity()},
           {"points", inst.points.size()},
           {"projection_sizes", std::move(sizes)},
           {"deficiency", deficiency(inst.points)},
           {"good", good},
           {"full", good && is_full(inst.points)}};
  if (good) {
    const ComponentPartition partition = related_components(inst.points);
    out["components"] = partition.size();
    out["boundary_size"] = deficiency(inst.points);
    if (partition.size() == 1) {
      const BoundDiagnostics d = bound_diagnostics(inst.points);
      out["diagnostics"] = {{"base", 0},
                            {"max_geodesic_length", d.max_geodesic_length},
                            {"mean_geodesic_length", format_rational(d.mean_geodesic_length)},
                            {"max_abs_value", format_rational(d.max_abs_value)},
                            {"max_abs_per_point", rationals_json(d.max_abs_per_point)}};
    }
  }
  return out;
}

using Handler = std::function<json(const Instance&, const CommandOptions&)>;

const std::map<std::string, Handler, std::less<>>& handlers() {
  static const std::map<std::string, Handler, std::less<>> table{
      {"check-good", cmd_check_good}, {"find-loop", cmd_find_loop},   {"is-full", cmd_is_full},
      {"fullify", cmd_fullify},       {"split", cmd_split},           {"maximalize", cmd_maximalize},
      {"components", cmd_components}, {"geodesic", cmd_geodesic},     {"boundary", cmd_boundary},
      {"solve", cmd_solve},           {"simplicial", cmd_simplicial}, {"stats", cmd_stats},
  };
  return table;
}

} // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"check-good", "find-loop",  "is-full",  "fullify",
                                              "split",      "maximalize", "components", "geodesic",
                                              "boundary",   "solve",      "simplicial", "stats"};
  return names;
}

std::string instance_digest(const Instance& instance) {
  const std::string text = to_json(instance).dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

json run_command(const Instance& instance, std::string_view command, const CommandOptions& options) {
  const auto& table = handlers();
  auto it = table.find(command);
  if (it == table.end()) {
    throw PreconditionError("unknown command '" + std::string(command) + "'");
  }
  const auto start = std::chrono::steady_clock::now();
  json result = it->second(instance, options);

  json echo{{"name", std::string(command)}};
  if (command == "geodesic") {
    echo["from"] = options.from ? json(*options.from) : json(nullptr);
    echo["to"] = options.to ? json(*options.to) : json(nullptr);
  }
  if (command == "solve") {
    echo["method"] = options.method;
    echo["pins"] = options.pins ? json(*options.pins) : json(nullptr);
  }
  json report{{"command", std::move(echo)},
              {"instance",
               {{"digest", instance_digest(instance)},
                {"points", instance.points.size()},
                {"arity", instance.space->arity()}}},
              {"result", std::move(result)}};
  if (options.timing) {
    const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report["timing"] = {{"seconds", elapsed}};
  }
  return report;
}

} // namespace goodsets
