#ifndef GOODSETS_SOLVER_HPP
#define GOODSETS_SOLVER_HPP

#include "goodsets/structure.hpp"

#include <span>
#include <vector>

namespace goodsets {

enum class Method { Direct, Geodesic, Componentwise, Boundary };

const char* to_string(Method m);

struct SolveDiagnostics {
  std::size_t max_geodesic_length = 0;  ///< 0 when no geodesic was used
  Scalar max_abs_value = 0;
};

struct SolveReport {
  Method method = Method::Direct;
  Verdict verdict = Verdict::Inconsistent;
  Decomposition decomposition;
  KernelBasis kernel;                  ///< gauge freedom when underdetermined
  std::vector<Coordinate> kernel_columns;
  Vector witness;                      ///< inconsistency certificate
  SolveDiagnostics diagnostics;
};

/// Pinned elimination on the whole incidence system of S.
SolveReport solve_direct(const PointSet& S, const FunctionTable& f, const PinSet& pins);

/// Square 0/1 system of a geodesic: rows are the geodesic's points with the
/// base point first, columns the coordinates of the geodesic except the
/// base's first n - 1 coordinates.
struct GeodesicMatrix {
  PointSet rows;
  std::vector<Coordinate> columns;
  Matrix matrix;
};

GeodesicMatrix geodesic_matrix(const PointSet& geodesic_points, const Point& base);

/// Solves matrix * g = f on the rows; throws InternalError when the matrix
/// is not square and invertible.
Vector solve_geodesic_matrix(const GeodesicMatrix& gm, const FunctionTable& f);

/// Single related component: every point y is reached through the geodesic
/// from base to y, whose square system gives u_i(y_i). Pins are the base's
/// first n - 1 coordinates at zero.
SolveReport solve_via_geodesics(const PointSet& S, const FunctionTable& f, const Point& base);

/// Components sharing no coordinate: the geodesic procedure in each. bases
/// may be empty (first point of each component) or give one base per
/// component in component order.
SolveReport solve_componentwise(const PointSet& S, const FunctionTable& f, std::span<const Point> bases = {});

/// Solve with prescribed values on a boundary of S. When the boundary meets
/// every axis the problem is lifted to the associated full set F(S, B),
/// with f extended to F \ S by the boundary values (zero for zero boundary
/// data), solved there, and restricted to S. Otherwise the boundary pins are
/// imposed directly.
SolveReport solve_with_boundary(const PointSet& S, const FunctionTable& f, const PinSet& boundary_values);

/// Pins making the solution on a single related component unique: the
/// first n - 1 coordinates of base at zero.
PinSet base_pins(const Point& base);

struct BoundDiagnostics {
  Point base;
  std::size_t max_geodesic_length = 0;
  Scalar mean_geodesic_length = 0;
  /// Largest |u_i(x)| over the solutions for indicator right-hand sides of
  /// single points, pinned at the base.
  Scalar max_abs_value = 0;
  /// Same quantity per indicator point (indexed like S).
  std::vector<Scalar> max_abs_per_point;
};

/// Geodesic length and solution size statistics for a single related
/// component, using its first point as base.
BoundDiagnostics bound_diagnostics(const PointSet& S);

} // namespace goodsets

#endif // GOODSETS_SOLVER_HPP
