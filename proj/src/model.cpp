#include "goodsets/model.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace goodsets {

Space::Space(std::vector<Axis> axes) : axes_(std::move(axes)) {
  if (axes_.size() < 2) {
    throw PreconditionError("a space needs at least two axes");
  }
  std::set<std::string> names;
  offsets_.push_back(0);
  for (const Axis& axis : axes_) {
    if (axis.values.empty()) {
      throw PreconditionError("axis '" + axis.name + "' has no values");
    }
    if (!names.insert(axis.name).second) {
      throw PreconditionError("duplicate axis name '" + axis.name + "'");
    }
    std::unordered_map<std::string, std::size_t> lookup;
    for (std::size_t v = 0; v < axis.values.size(); ++v) {
      if (!lookup.emplace(axis.values[v], v).second) {
        throw PreconditionError("duplicate value '" + axis.values[v] + "' on axis '" + axis.name + "'");
      }
    }
    lookup_.push_back(std::move(lookup));
    offsets_.push_back(offsets_.back() + axis.values.size());
  }
}

std::optional<std::size_t> Space::find_axis(std::string_view name) const {
  for (std::size_t i = 0; i < axes_.size(); ++i) {
    if (axes_[i].name == name) {
      return i;
    }
  }
  return std::nullopt;
}

std::optional<std::size_t> Space::find_value(std::size_t axis, std::string_view label) const {
  if (axis >= axes_.size()) {
    return std::nullopt;
  }
  auto it = lookup_[axis].find(std::string(label));
  if (it == lookup_[axis].end()) {
    return std::nullopt;
  }
  return it->second;
}

Coordinate Space::coordinate_of_column(std::size_t column) const {
  if (column >= column_count()) {
    throw PreconditionError("column out of range");
  }
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), column);
  const auto axis = static_cast<std::size_t>(it - offsets_.begin()) - 1;
  return {axis, column - offsets_[axis]};
}

bool Space::contains(const Point& p) const {
  if (p.arity() != arity()) {
    return false;
  }
  for (std::size_t i = 0; i < arity(); ++i) {
    if (p[i] >= axes_[i].values.size()) {
      return false;
    }
  }
  return true;
}

bool Space::contains(Coordinate c) const {
  return c.axis < arity() && c.value < axes_[c.axis].values.size();
}

Point Space::point(std::span<const std::string> labels) const {
  if (labels.size() != arity()) {
    throw PreconditionError("point has " + std::to_string(labels.size()) + " coordinates, expected " +
                            std::to_string(arity()));
  }
  std::vector<std::size_t> coords;
  coords.reserve(arity());
  for (std::size_t i = 0; i < arity(); ++i) {
    auto v = find_value(i, labels[i]);
    if (!v) {
      throw PreconditionError("unknown value '" + labels[i] + "' on axis '" + axes_[i].name + "'");
    }
    coords.push_back(*v);
  }
  return Point(std::move(coords));
}

Point Space::point(std::initializer_list<std::string_view> labels) const {
  std::vector<std::string> owned(labels.begin(), labels.end());
  return point(std::span<const std::string>(owned));
}

std::vector<std::string> Space::labels(const Point& p) const {
  std::vector<std::string> out;
  out.reserve(p.arity());
  for (std::size_t i = 0; i < p.arity(); ++i) {
    out.push_back(label(p.coordinate(i)));
  }
  return out;
}

std::string Space::describe(Coordinate c) const {
  return axes_.at(c.axis).name + ":" + label(c);
}

std::string Space::describe(const Point& p) const {
  std::string out = "(";
  for (std::size_t i = 0; i < p.arity(); ++i) {
    if (i) {
      out += ",";
    }
    out += label(p.coordinate(i));
  }
  return out + ")";
}

SpacePtr make_space(std::vector<Axis> axes) {
  return std::make_shared<const Space>(std::move(axes));
}

SpacePtr make_uniform_space(std::size_t n, std::vector<std::string> labels) {
  std::vector<Axis> axes;
  for (std::size_t i = 0; i < n; ++i) {
    axes.push_back({"x" + std::to_string(i + 1), labels});
  }
  return make_space(std::move(axes));
}

// ---------------------------------------------------------------------------

PointSet::PointSet(SpacePtr space) : space_(std::move(space)) {
  if (!space_) {
    throw PreconditionError("point set without a space");
  }
}

PointSet::PointSet(SpacePtr space, std::vector<Point> points) : PointSet(std::move(space)) {
  points_.reserve(points.size());
  for (const Point& p : points) {
    insert(p);
  }
}

std::optional<std::size_t> PointSet::index_of(const Point& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

void PointSet::insert(const Point& p) {
  if (!space_->contains(p)) {
    throw PreconditionError("point is not in the space");
  }
  if (!index_.emplace(p, points_.size()).second) {
    throw PreconditionError("duplicate point " + space_->describe(p));
  }
  points_.push_back(p);
}

PointSet PointSet::with(const Point& p) const {
  PointSet out = *this;
  out.insert(p);
  return out;
}

PointSet PointSet::subset(std::span<const std::size_t> indices) const {
  PointSet out(space_);
  for (std::size_t i : indices) {
    out.insert(points_.at(i));
  }
  return out;
}

PointSet PointSet::minus(const PointSet& other) const {
  PointSet out(space_);
  for (const Point& p : points_) {
    if (!other.contains(p)) {
      out.insert(p);
    }
  }
  return out;
}

PointSet PointSet::intersect(const PointSet& other) const {
  PointSet out(space_);
  for (const Point& p : points_) {
    if (other.contains(p)) {
      out.insert(p);
    }
  }
  return out;
}

PointSet PointSet::unite(const PointSet& other) const {
  PointSet out = *this;
  for (const Point& p : other) {
    if (!out.contains(p)) {
      out.insert(p);
    }
  }
  return out;
}

bool PointSet::is_subset_of(const PointSet& other) const {
  return std::all_of(points_.begin(), points_.end(), [&](const Point& p) { return other.contains(p); });
}

bool PointSet::same_points(const PointSet& other) const {
  return size() == other.size() && is_subset_of(other);
}

std::vector<Point> PointSet::sorted() const {
  std::vector<Point> out = points_;
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------

FunctionTable::FunctionTable(PointSet domain, std::vector<Scalar> values)
    : domain_(std::move(domain)), values_(std::move(values)) {
  if (values_.size() != domain_.size()) {
    throw PreconditionError("function table must have one value per point");
  }
}

FunctionTable FunctionTable::zero(PointSet domain) {
  std::vector<Scalar> values(domain.size(), Scalar(0));
  return FunctionTable(std::move(domain), std::move(values));
}

FunctionTable FunctionTable::indicator(PointSet domain, const Point& at) {
  auto idx = domain.index_of(at);
  if (!idx) {
    throw PreconditionError("indicator point is not in the domain");
  }
  std::vector<Scalar> values(domain.size(), Scalar(0));
  values[*idx] = 1;
  return FunctionTable(std::move(domain), std::move(values));
}

const Scalar& FunctionTable::at(const Point& p) const {
  auto idx = domain_.index_of(p);
  if (!idx) {
    throw PreconditionError("point " + domain_.space().describe(p) + " is outside the function's domain");
  }
  return values_[*idx];
}

FunctionTable FunctionTable::restrict(const PointSet& sub) const {
  std::vector<Scalar> values;
  values.reserve(sub.size());
  for (const Point& p : sub) {
    values.push_back(at(p));
  }
  return FunctionTable(sub, std::move(values));
}

// ---------------------------------------------------------------------------

const Scalar* Decomposition::find(Coordinate c) const {
  if (c.axis >= values_.size()) {
    return nullptr;
  }
  auto it = values_[c.axis].find(c.value);
  return it == values_[c.axis].end() ? nullptr : &it->second;
}

const Scalar& Decomposition::at(Coordinate c) const {
  const Scalar* v = find(c);
  if (!v) {
    throw PreconditionError("decomposition has no value at axis " + std::to_string(c.axis) + " value " +
                            std::to_string(c.value));
  }
  return *v;
}

Decomposition Decomposition::restrict(const PointSet& S) const {
  Decomposition out(arity());
  for (Coordinate c : all_projections(S)) {
    out.set(c, at(c));
  }
  return out;
}

Scalar Decomposition::max_abs() const {
  Scalar best = 0;
  for (const auto& axis : values_) {
    for (const auto& [value, x] : axis) {
      Scalar a = abs(x);
      if (a > best) {
        best = a;
      }
    }
  }
  return best;
}

Decomposition Decomposition::operator+(const Decomposition& other) const {
  if (arity() != other.arity()) {
    throw PreconditionError("decompositions of different arity");
  }
  Decomposition out = *this;
  for (std::size_t i = 0; i < other.arity(); ++i) {
    for (const auto& [value, x] : other.values_[i]) {
      auto& slot = out.values_[i][value];
      slot += x;
    }
  }
  return out;
}

Decomposition Decomposition::operator*(const Scalar& factor) const {
  Decomposition out = *this;
  for (auto& axis : out.values_) {
    for (auto& [value, x] : axis) {
      x *= factor;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<Coordinate> projection(const PointSet& S, std::size_t axis) {
  if (axis >= S.arity()) {
    throw PreconditionError("axis index " + std::to_string(axis) + " out of range");
  }
  std::set<std::size_t> values;
  for (const Point& p : S) {
    values.insert(p[axis]);
  }
  std::vector<Coordinate> out;
  out.reserve(values.size());
  for (std::size_t v : values) {
    out.push_back({axis, v});
  }
  return out;
}

std::vector<Coordinate> all_projections(const PointSet& S) {
  std::vector<Coordinate> out;
  for (std::size_t i = 0; i < S.arity(); ++i) {
    auto proj = projection(S, i);
    out.insert(out.end(), proj.begin(), proj.end());
  }
  return out;
}

std::vector<std::size_t> incidence_vector(const Space& space, const Point& p) {
  std::vector<std::size_t> out;
  out.reserve(p.arity());
  for (std::size_t i = 0; i < p.arity(); ++i) {
    out.push_back(space.column_of(p.coordinate(i)));
  }
  return out;
}

long deficiency(const PointSet& S) {
  if (S.empty()) {
    throw PreconditionError("deficiency of an empty set");
  }
  return static_cast<long>(all_projections(S).size()) - static_cast<long>(S.size());
}

Scalar evaluate(const Decomposition& d, const Point& p) {
  if (d.arity() != p.arity()) {
    throw PreconditionError("point and decomposition have different arity");
  }
  Scalar sum = 0;
  for (std::size_t i = 0; i < p.arity(); ++i) {
    sum += d.at(p.coordinate(i));
  }
  return sum;
}

namespace {

std::vector<Point> cartesian(const std::vector<std::vector<std::size_t>>& factors) {
  std::vector<Point> out;
  if (std::any_of(factors.begin(), factors.end(), [](const auto& f) { return f.empty(); })) {
    return out;
  }
  std::vector<std::size_t> cursor(factors.size(), 0);
  while (true) {
    std::vector<std::size_t> coords(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) {
      coords[i] = factors[i][cursor[i]];
    }
    out.emplace_back(std::move(coords));
    std::size_t i = factors.size();
    while (i > 0) {
      --i;
      if (++cursor[i] < factors[i].size()) {
        break;
      }
      cursor[i] = 0;
      if (i == 0) {
        return out;
      }
    }
  }
}

} // namespace

std::vector<Point> projection_product(const PointSet& S) {
  std::vector<std::vector<std::size_t>> factors;
  for (std::size_t i = 0; i < S.arity(); ++i) {
    std::vector<std::size_t> values;
    for (Coordinate c : projection(S, i)) {
      values.push_back(c.value);
    }
    factors.push_back(std::move(values));
  }
  return cartesian(factors);
}

std::vector<Point> all_points(const Space& space) {
  std::vector<std::vector<std::size_t>> factors;
  for (std::size_t i = 0; i < space.arity(); ++i) {
    std::vector<std::size_t> values(space.axis_size(i));
    std::iota(values.begin(), values.end(), std::size_t{0});
    factors.push_back(std::move(values));
  }
  return cartesian(factors);
}

} // namespace goodsets
