#ifndef GOODSETS_STRUCTURE_HPP
#define GOODSETS_STRUCTURE_HPP

#include "goodsets/linalg.hpp"

#include <optional>
#include <span>
#include <vector>

namespace goodsets {

/// The unique smallest full subset of S containing two related points.
struct Geodesic {
  Point from;
  Point to;
  PointSet points;  ///< in S's order

  std::size_t length() const { return points.size(); }
};

/// Iterative deepening over the cardinality k. Partial subsets are pruned
/// as soon as they stop being good, or when their deficiency exceeds n - 1
/// by more than the number of points still to be added, or when the least
/// full superset still reachable (a min-cut bound) is missing or has more
/// than k points. At the first k
/// with a full subset, every full k-subset is enumerated and uniqueness is
/// asserted (InternalError otherwise). Returns nullopt for unrelated points.
std::optional<Geodesic> geodesic(const PointSet& S, const Point& x, const Point& y);

/// True iff some full subset of S contains both points.
bool related(const PointSet& S, const Point& x, const Point& y);

struct ComponentPartition {
  std::vector<PointSet> components;      ///< ordered by their first point in S
  std::vector<std::size_t> component_of; ///< indexed like S

  std::size_t size() const { return components.size(); }
};

/// Classes of the relatedness relation. Every class is checked to be full,
/// and every pair inside a class to be related directly.
ComponentPartition related_components(const PointSet& S);

/// Per axis, the partition of Pi_i S into E_i classes: values joined by a
/// chain of related components whose axis-i projections overlap.
struct EiClasses {
  /// classes[i] lists the classes of axis i, ordered by least value; each
  /// class is a sorted list of value indices.
  std::vector<std::vector<std::vector<std::size_t>>> classes;

  std::size_t class_of(Coordinate c) const;
  std::size_t total() const;
};

EiClasses ei_classes(const PointSet& S, const ComponentPartition& components);
EiClasses ei_classes(const PointSet& S);

/// A class variable: the j-th E_i class of axis i.
struct Generator {
  std::size_t axis = 0;
  std::size_t index = 0;

  auto operator<=>(const Generator&) const = default;
};

struct BoundaryConstruction {
  ComponentPartition components;
  std::vector<Point> cross_section;   ///< first point of each component
  EiClasses classes;
  std::vector<Generator> generators;  ///< axis-major, class order
  Matrix relations;                   ///< one row per component
  std::vector<std::size_t> basis;     ///< generator indices (free columns)
  std::vector<Coordinate> boundary;   ///< least value of each basis class
};

enum class BoundaryCheck { Verify, Skip };

/// Boundary of a good set built from the class variables: each component
/// contributes the relation "sum of its n class variables = 0"; after
/// elimination in canonical column order the free columns form the basis.
/// With BoundaryCheck::Verify the result is re-checked with is_boundary and
/// against the E_i-class and minimality properties.
BoundaryConstruction boundary(const PointSet& S, BoundaryCheck check = BoundaryCheck::Verify);

/// B is a boundary of S iff |B| = deficiency(S) and the homogeneous
/// equation pinned to zero on B has only the trivial solution (so every
/// choice of values on B and of f yields exactly one solution).
bool is_boundary(const PointSet& S, std::span<const Coordinate> B);

/// Boundary obtained from a split extension: the union of the projections
/// of F \ S. For a full S, the first n - 1 coordinates of its first point.
std::vector<Coordinate> split_boundary(const PointSet& S);

} // namespace goodsets

#endif // GOODSETS_STRUCTURE_HPP
