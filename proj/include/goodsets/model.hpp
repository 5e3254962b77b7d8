#ifndef GOODSETS_MODEL_HPP
#define GOODSETS_MODEL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace goodsets {

/// Exact rational scalar. Every value in the library is an mpq_class in
/// canonical (lowest terms, positive denominator) form.
using Scalar = mpq_class;

/// Raised when an operation is called outside its precondition
/// (empty set, non-good set where goodness is required, bad index, ...).
class PreconditionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a runtime self-check fails. Always a bug.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

struct Axis {
  std::string name;
  std::vector<std::string> values;

  bool operator==(const Axis&) const = default;
};

/// A coordinate value tagged with its axis. Values on different axes are
/// never equal, so the axes behave as pairwise disjoint sets.
struct Coordinate {
  std::size_t axis = 0;
  std::size_t value = 0;

  auto operator<=>(const Coordinate&) const = default;
};

/// Point of the product space, stored as value indices (one per axis).
/// Ordering is lexicographic on the indices.
struct Point {
  std::vector<std::size_t> coords;

  Point() = default;
  Point(std::initializer_list<std::size_t> c) : coords(c) {}
  explicit Point(std::vector<std::size_t> c) : coords(std::move(c)) {}

  std::size_t arity() const { return coords.size(); }
  std::size_t operator[](std::size_t i) const { return coords[i]; }
  Coordinate coordinate(std::size_t i) const { return {i, coords[i]}; }

  auto operator<=>(const Point&) const = default;
};

/// The product X_1 x ... x X_n of finitely many labelled axes.
class Space {
public:
  explicit Space(std::vector<Axis> axes);

  std::size_t arity() const { return axes_.size(); }
  const Axis& axis(std::size_t i) const { return axes_.at(i); }
  const std::vector<Axis>& axes() const { return axes_; }
  std::size_t axis_size(std::size_t i) const { return axes_.at(i).values.size(); }

  std::optional<std::size_t> find_axis(std::string_view name) const;
  std::optional<std::size_t> find_value(std::size_t axis, std::string_view label) const;

  /// Total number of coordinates over all axes.
  std::size_t column_count() const { return offsets_.back(); }
  /// Global column of a coordinate: axes in declaration order, values in
  /// declaration order within an axis.
  std::size_t column_of(Coordinate c) const { return offsets_[c.axis] + c.value; }
  Coordinate coordinate_of_column(std::size_t column) const;

  bool contains(const Point& p) const;
  bool contains(Coordinate c) const;

  /// Builds a point from value labels; throws PreconditionError on unknown labels.
  Point point(std::span<const std::string> labels) const;
  Point point(std::initializer_list<std::string_view> labels) const;

  const std::string& label(Coordinate c) const { return axes_[c.axis].values[c.value]; }
  std::vector<std::string> labels(const Point& p) const;
  /// "name:label", used in diagnostics.
  std::string describe(Coordinate c) const;
  std::string describe(const Point& p) const;

  bool operator==(const Space& other) const { return axes_ == other.axes_; }

private:
  std::vector<Axis> axes_;
  std::vector<std::size_t> offsets_;
  std::vector<std::unordered_map<std::string, std::size_t>> lookup_;
};

using SpacePtr = std::shared_ptr<const Space>;

SpacePtr make_space(std::vector<Axis> axes);

/// Convenience for tests and examples: n axes named x1..xn, each holding the
/// given labels.
SpacePtr make_uniform_space(std::size_t n, std::vector<std::string> labels);

/// Distinct points of a space in insertion order.
class PointSet {
public:
  explicit PointSet(SpacePtr space);
  PointSet(SpacePtr space, std::vector<Point> points);

  const Space& space() const { return *space_; }
  const SpacePtr& space_ptr() const { return space_; }
  std::size_t arity() const { return space_->arity(); }

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<Point>& points() const { return points_; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  bool contains(const Point& p) const { return index_.contains(p); }
  std::optional<std::size_t> index_of(const Point& p) const;

  /// Appends p; throws on duplicates or invalid points.
  void insert(const Point& p);
  PointSet with(const Point& p) const;
  PointSet subset(std::span<const std::size_t> indices) const;
  /// Points of *this not in other, order preserved.
  PointSet minus(const PointSet& other) const;
  /// Points of *this that are also in other, order preserved.
  PointSet intersect(const PointSet& other) const;
  /// *this followed by the points of other not already present.
  PointSet unite(const PointSet& other) const;
  bool is_subset_of(const PointSet& other) const;
  /// Same points as a set (ignoring order).
  bool same_points(const PointSet& other) const;
  std::vector<Point> sorted() const;

private:
  SpacePtr space_;
  std::vector<Point> points_;
  std::map<Point, std::size_t> index_;
};

/// Values of a function on a point set, aligned with the set's order.
class FunctionTable {
public:
  FunctionTable(PointSet domain, std::vector<Scalar> values);

  static FunctionTable zero(PointSet domain);
  static FunctionTable indicator(PointSet domain, const Point& at);

  const PointSet& domain() const { return domain_; }
  const std::vector<Scalar>& values() const { return values_; }
  const Scalar& operator[](std::size_t i) const { return values_[i]; }
  const Scalar& at(const Point& p) const;

  /// The same function restricted to (or re-indexed onto) a subset of the domain.
  FunctionTable restrict(const PointSet& sub) const;

private:
  PointSet domain_;
  std::vector<Scalar> values_;
};

/// Prescribed values u_i(c) for a few coordinates.
using PinSet = std::map<Coordinate, Scalar>;

/// Per-axis functions u_1..u_n, each defined on a finite set of values.
class Decomposition {
public:
  Decomposition() = default;
  explicit Decomposition(std::size_t arity) : values_(arity) {}

  std::size_t arity() const { return values_.size(); }
  void set(Coordinate c, Scalar v) { values_.at(c.axis)[c.value] = std::move(v); }
  bool has(Coordinate c) const { return values_.at(c.axis).contains(c.value); }
  const Scalar* find(Coordinate c) const;
  const Scalar& at(Coordinate c) const;
  const std::map<std::size_t, Scalar>& axis_values(std::size_t i) const { return values_.at(i); }

  /// Restriction to the coordinates in the projections of S.
  Decomposition restrict(const PointSet& S) const;
  /// Largest absolute value over all defined coordinates (0 when empty).
  Scalar max_abs() const;

  Decomposition operator+(const Decomposition& other) const;
  Decomposition operator*(const Scalar& factor) const;
  bool operator==(const Decomposition& other) const = default;

private:
  std::vector<std::map<std::size_t, Scalar>> values_;
};

/// Distinct i-th coordinates of the points of S in value order.
std::vector<Coordinate> projection(const PointSet& S, std::size_t axis);

/// Union of all projections, axis-major then value order.
std::vector<Coordinate> all_projections(const PointSet& S);

/// Global columns (see Space::column_of) carrying a one for p; exactly
/// arity() entries, increasing.
std::vector<std::size_t> incidence_vector(const Space& space, const Point& p);

/// sum_i |Pi_i S| - |S|.
long deficiency(const PointSet& S);

/// u_1(p_1) + ... + u_n(p_n).
Scalar evaluate(const Decomposition& d, const Point& p);

/// Points of Pi_1 S x ... x Pi_n S in lexicographic order.
std::vector<Point> projection_product(const PointSet& S);

/// All points of the space in lexicographic order.
std::vector<Point> all_points(const Space& space);

} // namespace goodsets

#endif // GOODSETS_MODEL_HPP
