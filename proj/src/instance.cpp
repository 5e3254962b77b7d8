#include "goodsets/instance.hpp"

#include <fstream>
#include <regex>
#include <sstream>

namespace goodsets {

using nlohmann::json;

FunctionTable Instance::function() const {
  return f ? *f : FunctionTable::zero(points);
}

std::string format_rational(const Scalar& q) {
  Scalar c = q;
  c.canonicalize();
  return c.get_str();
}

Scalar parse_rational(std::string_view text) {
  static const std::regex pattern(R"(^-?[0-9]+(/[0-9]+)?$)");
  const std::string s(text);
  if (!std::regex_match(s, pattern)) {
    throw ParseError("'" + s + "' is not a rational of the form p or p/q");
  }
  Scalar q;
  if (q.set_str(s, 10) != 0) {
    throw ParseError("'" + s + "' is not a rational of the form p or p/q");
  }
  if (sgn(q.get_den()) == 0) {
    throw ParseError("'" + s + "' has a zero denominator");
  }
  q.canonicalize();
  return q;
}

Scalar parse_rational(const json& value) {
  if (value.is_number_integer()) {
    return parse_rational(std::string_view(value.dump()));
  }
  if (value.is_string()) {
    return parse_rational(std::string_view(value.get_ref<const std::string&>()));
  }
  throw ParseError("rational values must be integers or \"p/q\" strings, got " + value.dump());
}

namespace {

std::string label_of(const json& value, const char* what) {
  if (value.is_string()) {
    return value.get<std::string>();
  }
  if (value.is_number_integer()) {
    return value.dump();
  }
  throw ParseError(std::string(what) + " must be a string or an integer, got " + value.dump());
}

const json& require(const json& object, const char* key) {
  if (!object.is_object() || !object.contains(key)) {
    throw ParseError(std::string("missing key \"") + key + "\"");
  }
  return object.at(key);
}

std::size_t point_index(const std::string& key, std::size_t count) {
  static const std::regex digits("^[0-9]+$");
  if (!std::regex_match(key, digits)) {
    throw ParseError("point index '" + key + "' is not a non-negative integer");
  }
  const std::size_t idx = std::stoul(key);
  if (idx >= count) {
    throw ParseError("point index " + key + " out of range");
  }
  return idx;
}

std::size_t axis_index(const Space& space, const json& value) {
  if (value.is_number_integer()) {
    const auto i = value.get<long long>();
    if (i < 0 || static_cast<std::size_t>(i) >= space.arity()) {
      throw ParseError("axis index " + value.dump() + " out of range");
    }
    return static_cast<std::size_t>(i);
  }
  if (value.is_string()) {
    auto i = space.find_axis(value.get<std::string>());
    if (!i) {
      throw ParseError("unknown axis " + value.dump());
    }
    return *i;
  }
  throw ParseError("axis must be a name or an index, got " + value.dump());
}

Coordinate coordinate_of(const Space& space, std::size_t axis, const std::string& label) {
  auto v = space.find_value(axis, label);
  if (!v) {
    throw ParseError("unknown value '" + label + "' on axis '" + space.axis(axis).name + "'");
  }
  return {axis, *v};
}

Instance parse_document(const json& doc) {
  if (!doc.is_object()) {
    throw ParseError("instance must be a JSON object");
  }
  for (const auto& [key, value] : doc.items()) {
    if (key != "axes" && key != "points" && key != "f" && key != "pins" && key != "measure") {
      throw ParseError("unknown key \"" + key + "\"");
    }
  }

  std::vector<Axis> axes;
  const json& axes_json = require(doc, "axes");
  if (!axes_json.is_array()) {
    throw ParseError("\"axes\" must be an array");
  }
  for (const json& a : axes_json) {
    Axis axis;
    axis.name = label_of(require(a, "name"), "axis name");
    const json& values = require(a, "values");
    if (!values.is_array()) {
      throw ParseError("axis values must be an array");
    }
    for (const json& v : values) {
      axis.values.push_back(label_of(v, "axis value"));
    }
    axes.push_back(std::move(axis));
  }

  SpacePtr space;
  try {
    space = make_space(std::move(axes));
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("invalid axes: ") + e.what());
  }
  Instance out{space, PointSet(space), {}, {}, {}};
  const json& points_json = require(doc, "points");
  if (!points_json.is_array()) {
    throw ParseError("\"points\" must be an array");
  }
  for (const json& p : points_json) {
    if (!p.is_array()) {
      throw ParseError("each point must be an array of value labels");
    }
    std::vector<std::string> labels;
    for (const json& v : p) {
      labels.push_back(label_of(v, "point coordinate"));
    }
    try {
      out.points.insert(out.space->point(labels));
    } catch (const PreconditionError& e) {
      throw ParseError(std::string("invalid point: ") + e.what());
    }
  }

  if (doc.contains("f")) {
    const json& f = doc.at("f");
    if (!f.is_object()) {
      throw ParseError("\"f\" must map point indices to rationals");
    }
    std::vector<Scalar> values(out.points.size(), Scalar(0));
    for (const auto& [key, value] : f.items()) {
      values[point_index(key, out.points.size())] = parse_rational(value);
    }
    out.f = FunctionTable(out.points, std::move(values));
  }

  if (doc.contains("pins")) {
    const json& pins = doc.at("pins");
    if (!pins.is_array()) {
      throw ParseError("\"pins\" must be an array");
    }
    PinSet set;
    for (const json& pin : pins) {
      const std::size_t axis = axis_index(*out.space, require(pin, "axis"));
      const Coordinate c = coordinate_of(*out.space, axis, label_of(require(pin, "value"), "pin value"));
      if (!set.emplace(c, parse_rational(require(pin, "rational"))).second) {
        throw ParseError("coordinate " + out.space->describe(c) + " is pinned twice");
      }
    }
    out.pins = std::move(set);
  }

  if (doc.contains("measure")) {
    const json& measure = doc.at("measure");
    if (!measure.is_object()) {
      throw ParseError("\"measure\" must map point indices to rationals");
    }
    std::vector<std::pair<std::size_t, Scalar>> entries;
    for (const auto& [key, value] : measure.items()) {
      entries.emplace_back(point_index(key, out.points.size()), parse_rational(value));
    }
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    PointSet support(out.space);
    std::vector<Scalar> weights;
    for (auto& [idx, w] : entries) {
      if (sgn(w) == 0) {
        continue;
      }
      support.insert(out.points[idx]);
      weights.push_back(std::move(w));
    }
    try {
      out.measure = FiniteMeasure(std::move(support), std::move(weights));
    } catch (const PreconditionError& e) {
      throw ParseError(std::string("invalid measure: ") + e.what());
    }
  }
  return out;
}

} // namespace

Instance parse_instance(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  try {
    return parse_document(doc);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed instance: ") + e.what());
  }
}

Instance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot read instance file '" + path.string() + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

json to_json(const Instance& instance) {
  json doc;
  json axes = json::array();
  for (const Axis& a : instance.space->axes()) {
    axes.push_back({{"name", a.name}, {"values", a.values}});
  }
  doc["axes"] = std::move(axes);
  json points = json::array();
  for (const Point& p : instance.points) {
    points.push_back(instance.space->labels(p));
  }
  doc["points"] = std::move(points);
  if (instance.f) {
    json f = json::object();
    for (std::size_t k = 0; k < instance.points.size(); ++k) {
      f[std::to_string(k)] = format_rational((*instance.f).at(instance.points[k]));
    }
    doc["f"] = std::move(f);
  }
  if (instance.pins) {
    json pins = json::array();
    for (const auto& [c, value] : *instance.pins) {
      pins.push_back({{"axis", instance.space->axis(c.axis).name},
                      {"value", instance.space->label(c)},
                      {"rational", format_rational(value)}});
    }
    doc["pins"] = std::move(pins);
  }
  if (instance.measure) {
    json measure = json::object();
    const auto& support = instance.measure->support();
    for (std::size_t k = 0; k < support.size(); ++k) {
      measure[std::to_string(*instance.points.index_of(support[k]))] = format_rational(instance.measure->weights()[k]);
    }
    doc["measure"] = std::move(measure);
  }
  return doc;
}

bool same_instance(const Instance& a, const Instance& b) {
  if (!(*a.space == *b.space) || a.points.points() != b.points.points()) {
    return false;
  }
  if (a.f.has_value() != b.f.has_value() || (a.f && a.f->values() != b.f->values())) {
    return false;
  }
  if (a.pins != b.pins) {
    return false;
  }
  if (a.measure.has_value() != b.measure.has_value()) {
    return false;
  }
  if (a.measure) {
    return a.measure->support().points() == b.measure->support().points() &&
           a.measure->weights() == b.measure->weights();
  }
  return true;
}

PinSet parse_pins(const Space& space, std::string_view text) {
  PinSet pins;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    if (first == std::string::npos) {
      continue;
    }
    item = item.substr(first, item.find_last_not_of(" \t") - first + 1);
    const auto colon = item.find(':');
    const auto eq = item.find('=', colon == std::string::npos ? 0 : colon);
    if (colon == std::string::npos || eq == std::string::npos) {
      throw ParseError("pin '" + item + "' is not of the form axis:value=rational");
    }
    const std::size_t axis = axis_index(space, json(item.substr(0, colon)));
    const Coordinate c = coordinate_of(space, axis, item.substr(colon + 1, eq - colon - 1));
    if (!pins.emplace(c, parse_rational(std::string_view(item).substr(eq + 1))).second) {
      throw ParseError("coordinate " + space.describe(c) + " is pinned twice");
    }
  }
  return pins;
}

// ---------------------------------------------------------------------------

namespace {

Instance make_instance(std::vector<Axis> axes, const std::vector<std::vector<std::string>>& points) {
  SpacePtr space = make_space(std::move(axes));
  PointSet set(space);
  for (const auto& labels : points) {
    set.insert(space->point(labels));
  }
  return Instance{space, std::move(set), {}, {}, {}};
}

std::vector<std::string> numbered(const std::string& prefix, std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < count; ++k) {
    out.push_back(prefix + std::to_string(k));
  }
  return out;
}

PinSet label_pins(const Space& space, std::initializer_list<std::pair<std::size_t, std::string>> items) {
  PinSet pins;
  for (const auto& [axis, label] : items) {
    pins.emplace(Coordinate{axis, *space.find_value(axis, label)}, Scalar(0));
  }
  return pins;
}

std::vector<Axis> binary_axes(std::size_t n) {
  std::vector<Axis> axes;
  for (std::size_t i = 0; i < n; ++i) {
    axes.push_back({"x" + std::to_string(i + 1), {"0", "1"}});
  }
  return axes;
}

} // namespace

Instance doubling_instance(std::size_t depth) {
  std::vector<std::vector<std::string>> points{{"x0", "y0", "z0"}};
  for (std::size_t n = 1; n <= depth; ++n) {
    const std::string k = std::to_string(n);
    const std::string prev = std::to_string(n - 1);
    points.push_back({"x" + k, "y0", "z" + prev});
    points.push_back({"x0", "y" + k, "z" + prev});
    points.push_back({"x" + k, "y" + k, "z" + k});
  }
  Instance inst = make_instance(
      {{"x", numbered("x", depth + 1)}, {"y", numbered("y", depth + 1)}, {"z", numbered("z", depth + 1)}}, points);
  inst.f = FunctionTable::indicator(inst.points, inst.points[0]);
  inst.pins = label_pins(*inst.space, {{0, "x0"}, {1, "y0"}});
  return inst;
}

std::vector<std::pair<std::string, Instance>> example_instances() {
  std::vector<std::pair<std::string, Instance>> out;

  {
    // Uniqueness once u_1(0) is fixed.
    Instance inst = make_instance(binary_axes(2), {{"0", "0"}, {"1", "0"}, {"0", "1"}});
    inst.f = FunctionTable(inst.points, {Scalar(1), Scalar(2), Scalar(3)});
    inst.pins = label_pins(*inst.space, {{0, "0"}});
    out.emplace_back("ex02", std::move(inst));
  }
  {
    std::vector<Axis> axes;
    for (std::size_t i = 0; i < 3; ++i) {
      axes.push_back({"x" + std::to_string(i + 1), {"0", "1", "2"}});
    }
    Instance inst = make_instance(std::move(axes), {{"0", "0", "0"},
                                                    {"1", "0", "0"},
                                                    {"1", "1", "0"},
                                                    {"1", "1", "1"},
                                                    {"2", "1", "1"},
                                                    {"2", "2", "1"},
                                                    {"2", "2", "2"}});
    inst.pins = label_pins(*inst.space, {{0, "0"}, {1, "0"}});
    out.emplace_back("ex04", std::move(inst));
  }
  out.emplace_back("ex05", make_instance(binary_axes(3), {{"0", "0", "0"}, {"1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "1"}}));
  out.emplace_back("e5plus", make_instance(binary_axes(3), {{"0", "0", "0"},
                                                            {"1", "0", "0"},
                                                            {"0", "1", "0"},
                                                            {"0", "0", "1"},
                                                            {"1", "1", "1"}}));
  {
    Instance inst = make_instance(binary_axes(3), {{"1", "0", "1"}, {"1", "1", "0"}, {"0", "1", "1"}, {"0", "0", "0"}});
    inst.measure = FiniteMeasure::uniform(inst.points);
    out.emplace_back("t4", std::move(inst));
  }
  out.emplace_back("ex07", make_instance({{"x1", {"1", "4", "7"}}, {"x2", {"2", "5", "8"}}, {"x3", {"3", "6", "9"}}},
                                         {{"1", "2", "3"}, {"4", "5", "6"}, {"7", "8", "9"}, {"1", "5", "9"}}));
  {
    std::vector<Axis> axes;
    for (std::size_t i = 0; i < 3; ++i) {
      axes.push_back({"x" + std::to_string(i + 1), {"a", "b", "c"}});
    }
    out.emplace_back("ex08", make_instance(std::move(axes), {{"a", "a", "a"},
                                                             {"b", "a", "a"},
                                                             {"c", "a", "a"},
                                                             {"a", "b", "a"},
                                                             {"a", "c", "a"},
                                                             {"a", "a", "b"},
                                                             {"a", "a", "c"}}));
  }
  for (std::size_t depth = 1; depth <= 6; ++depth) {
    out.emplace_back("ex10_depth" + std::to_string(depth), doubling_instance(depth));
  }
  {
    Instance inst = make_instance({{"x1", {"a", "c"}}, {"x2", {"b", "d"}}}, {{"a", "b"}, {"a", "d"}, {"c", "b"}, {"c", "d"}});
    inst.measure = FiniteMeasure::uniform(inst.points);
    out.emplace_back("rectangle", std::move(inst));
  }
  return out;
}

std::vector<std::filesystem::path> write_examples(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    throw std::runtime_error("cannot create directory '" + dir.string() + "': " + ec.message());
  }
  std::vector<std::filesystem::path> written;
  for (const auto& [stem, instance] : example_instances()) {
    const auto path = dir / (stem + ".json");
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      throw std::runtime_error("cannot write '" + path.string() + "'");
    }
    out << to_json(instance).dump(2) << '\n';
    if (!out) {
      throw std::runtime_error("write to '" + path.string() + "' failed");
    }
    written.push_back(path);
  }
  return written;
}

} // namespace goodsets
