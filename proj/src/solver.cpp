#include "goodsets/solver.hpp"

#include "goodsets/goodness.hpp"

#include <algorithm>
#include <set>

namespace goodsets {

const char* to_string(Method m) {
  switch (m) {
  case Method::Direct:
    return "direct";
  case Method::Geodesic:
    return "geodesic";
  case Method::Componentwise:
    return "componentwise";
  case Method::Boundary:
    return "boundary";
  }
  return "unknown";
}

namespace {

void require_domain(const PointSet& S, const FunctionTable& f) {
  if (!S.same_points(f.domain())) {
    throw PreconditionError("the function must be defined exactly on the point set");
  }
}

void check_reconstruction(const PointSet& S, const FunctionTable& f, const Decomposition& d) {
  for (const Point& p : S) {
    if (evaluate(d, p) != f.at(p)) {
      throw InternalError("solution does not reproduce f at " + S.space().describe(p));
    }
  }
}

/// Writes a value computed by one geodesic solve; a coordinate reached
/// through several geodesics must receive the same value every time.
void merge_value(Decomposition& d, Coordinate c, const Scalar& value) {
  if (const Scalar* existing = d.find(c)) {
    if (*existing != value) {
      throw InternalError("geodesic solves disagree on a shared coordinate");
    }
    return;
  }
  d.set(c, value);
}

} // namespace

PinSet base_pins(const Point& base) {
  PinSet pins;
  for (std::size_t i = 0; i + 1 < base.arity(); ++i) {
    pins.emplace(base.coordinate(i), Scalar(0));
  }
  return pins;
}

SolveReport solve_direct(const PointSet& S, const FunctionTable& f, const PinSet& pins) {
  if (S.empty()) {
    throw PreconditionError("solve: the point set is empty");
  }
  require_domain(S, f);
  const IncidenceSystem system(S);
  for (const auto& [c, value] : pins) {
    if (!system.column_index(c)) {
      throw PreconditionError("pin " + (S.space().contains(c) ? S.space().describe(c) : std::string("?")) +
                              " is not a coordinate of any point");
    }
  }
  PinnedSolution solution = solve_pinned(system, f, pins);
  SolveReport out;
  out.method = Method::Direct;
  out.verdict = solution.verdict;
  out.decomposition = std::move(solution.decomposition);
  out.kernel = std::move(solution.kernel);
  out.kernel_columns = system.columns();
  out.witness = std::move(solution.witness);
  if (out.verdict != Verdict::Inconsistent) {
    out.diagnostics.max_abs_value = out.decomposition.max_abs();
  }
  return out;
}

GeodesicMatrix geodesic_matrix(const PointSet& geodesic_points, const Point& base) {
  if (!geodesic_points.contains(base)) {
    throw PreconditionError("geodesic matrix: base point is not on the geodesic");
  }
  GeodesicMatrix gm{PointSet(geodesic_points.space_ptr()), {}, {}};
  gm.rows.insert(base);
  for (const Point& p : geodesic_points) {
    if (p != base) {
      gm.rows.insert(p);
    }
  }
  const PinSet pinned = base_pins(base);
  for (Coordinate c : all_projections(geodesic_points)) {
    if (!pinned.contains(c)) {
      gm.columns.push_back(c);
    }
  }
  gm.matrix = Matrix(gm.rows.size(), gm.columns.size());
  for (std::size_t r = 0; r < gm.rows.size(); ++r) {
    for (std::size_t i = 0; i < gm.rows.arity(); ++i) {
      auto it = std::find(gm.columns.begin(), gm.columns.end(), gm.rows[r].coordinate(i));
      if (it != gm.columns.end()) {
        gm.matrix(r, static_cast<std::size_t>(it - gm.columns.begin())) = 1;
      }
    }
  }
  return gm;
}

Vector solve_geodesic_matrix(const GeodesicMatrix& gm, const FunctionTable& f) {
  if (gm.matrix.rows() != gm.matrix.cols()) {
    throw InternalError("geodesic matrix is not square (" + std::to_string(gm.matrix.rows()) + "x" +
                        std::to_string(gm.matrix.cols()) + ")");
  }
  Vector rhs;
  for (const Point& p : gm.rows) {
    rhs.push_back(f.at(p));
  }
  if (rank(gm.matrix) != gm.matrix.rows()) {
    throw InternalError("geodesic matrix is singular");
  }
  auto g = particular_solution(gm.matrix, rhs);
  if (!g || gm.matrix.multiply(*g) != rhs) {
    throw InternalError("geodesic matrix solve failed");
  }
  return *g;
}

SolveReport solve_via_geodesics(const PointSet& S, const FunctionTable& f, const Point& base) {
  require_good(S, "solve_via_geodesics");
  require_domain(S, f);
  if (!S.contains(base)) {
    throw PreconditionError("solve_via_geodesics: base point is not in the set");
  }
  const PinSet pins = base_pins(base);
  SolveReport out;
  out.method = Method::Geodesic;
  out.decomposition = Decomposition(S.arity());
  for (const auto& [c, value] : pins) {
    out.decomposition.set(c, value);
  }
  for (const Point& y : S) {
    auto path = geodesic(S, base, y);
    if (!path) {
      throw PreconditionError("solve_via_geodesics: " + S.space().describe(y) + " is not related to the base " +
                              S.space().describe(base) + "; use the componentwise or boundary method");
    }
    out.diagnostics.max_geodesic_length = std::max(out.diagnostics.max_geodesic_length, path->length());
    const GeodesicMatrix gm = geodesic_matrix(path->points, base);
    const Vector g = solve_geodesic_matrix(gm, f.restrict(gm.rows));
    for (std::size_t i = 0; i < y.arity(); ++i) {
      const Coordinate c = y.coordinate(i);
      auto it = std::find(gm.columns.begin(), gm.columns.end(), c);
      if (it == gm.columns.end()) {
        // One of the base's pinned coordinates.
        merge_value(out.decomposition, c, pins.at(c));
      } else {
        merge_value(out.decomposition, c, g[static_cast<std::size_t>(it - gm.columns.begin())]);
      }
    }
  }
  check_reconstruction(S, f, out.decomposition);
  out.verdict = Verdict::Unique;
  out.diagnostics.max_abs_value = out.decomposition.max_abs();
  return out;
}

SolveReport solve_componentwise(const PointSet& S, const FunctionTable& f, std::span<const Point> bases) {
  require_good(S, "solve_componentwise");
  require_domain(S, f);
  const ComponentPartition partition = related_components(S);
  for (std::size_t a = 0; a < partition.size(); ++a) {
    for (std::size_t b = a + 1; b < partition.size(); ++b) {
      for (std::size_t i = 0; i < S.arity(); ++i) {
        const auto pa = projection(partition.components[a], i);
        const auto pb = projection(partition.components[b], i);
        std::vector<Coordinate> common;
        std::set_intersection(pa.begin(), pa.end(), pb.begin(), pb.end(), std::back_inserter(common));
        if (!common.empty()) {
          throw PreconditionError("solve_componentwise: components " + std::to_string(a) + " and " +
                                  std::to_string(b) + " share the coordinate " + S.space().describe(common.front()) +
                                  "; use the boundary method");
        }
      }
    }
  }
  if (!bases.empty() && bases.size() != partition.size()) {
    throw PreconditionError("solve_componentwise: expected one base point per component");
  }

  SolveReport out;
  out.method = Method::Componentwise;
  out.decomposition = Decomposition(S.arity());
  for (std::size_t a = 0; a < partition.size(); ++a) {
    const PointSet& component = partition.components[a];
    const Point& base = bases.empty() ? component[0] : bases[a];
    if (!component.contains(base)) {
      throw PreconditionError("solve_componentwise: base " + S.space().describe(base) +
                              " is not in its component");
    }
    const SolveReport part = solve_via_geodesics(component, f.restrict(component), base);
    for (Coordinate c : all_projections(component)) {
      merge_value(out.decomposition, c, part.decomposition.at(c));
    }
    out.diagnostics.max_geodesic_length =
        std::max(out.diagnostics.max_geodesic_length, part.diagnostics.max_geodesic_length);
  }
  check_reconstruction(S, f, out.decomposition);
  out.verdict = Verdict::Unique;
  out.diagnostics.max_abs_value = out.decomposition.max_abs();
  return out;
}

SolveReport solve_with_boundary(const PointSet& S, const FunctionTable& f, const PinSet& boundary_values) {
  require_good(S, "solve_with_boundary");
  require_domain(S, f);
  std::vector<Coordinate> B;
  for (const auto& [c, value] : boundary_values) {
    B.push_back(c);
  }
  if (!is_boundary(S, B)) {
    throw PreconditionError("solve_with_boundary: the pinned coordinates are not a boundary of the set");
  }

  std::vector<bool> meets(S.arity(), false);
  for (Coordinate c : B) {
    meets[c.axis] = true;
  }
  const bool lift = std::all_of(meets.begin(), meets.end(), [](bool b) { return b; });

  SolveReport out;
  if (lift) {
    const PointSet F = associated_full_set(S, B);
    std::vector<Scalar> values;
    values.reserve(F.size());
    for (const Point& p : F) {
      if (S.contains(p)) {
        values.push_back(f.at(p));
      } else {
        Scalar sum = 0;
        for (std::size_t i = 0; i < p.arity(); ++i) {
          sum += boundary_values.at(p.coordinate(i));
        }
        values.push_back(sum);
      }
    }
    // The comb base (least boundary value per axis) lies in F; pin its first
    // n - 1 coordinates to their boundary values.
    PinSet pins;
    for (std::size_t i = 0; i + 1 < S.arity(); ++i) {
      for (const auto& [c, value] : boundary_values) {
        if (c.axis == i) {
          pins.emplace(c, value);
          break;
        }
      }
    }
    SolveReport lifted = solve_direct(F, FunctionTable(F, std::move(values)), pins);
    if (lifted.verdict != Verdict::Unique) {
      throw InternalError("associated full set did not give a unique solution");
    }
    out.decomposition = lifted.decomposition.restrict(S);
  } else {
    SolveReport direct = solve_direct(S, f, boundary_values);
    if (direct.verdict != Verdict::Unique) {
      throw InternalError("boundary pins did not give a unique solution");
    }
    out.decomposition = std::move(direct.decomposition);
  }
  for (const auto& [c, value] : boundary_values) {
    if (out.decomposition.at(c) != value) {
      throw InternalError("boundary solve does not honour the boundary values");
    }
  }
  check_reconstruction(S, f, out.decomposition);
  out.method = Method::Boundary;
  out.verdict = Verdict::Unique;
  out.diagnostics.max_abs_value = out.decomposition.max_abs();
  return out;
}

BoundDiagnostics bound_diagnostics(const PointSet& S) {
  const ComponentPartition partition = related_components(S);
  if (partition.size() != 1) {
    throw PreconditionError("bound_diagnostics: the set has " + std::to_string(partition.size()) +
                            " related components; diagnostics are per component");
  }
  BoundDiagnostics out;
  out.base = S[0];
  Scalar total = 0;
  for (const Point& y : S) {
    const std::size_t length = geodesic(S, out.base, y)->length();
    out.max_geodesic_length = std::max(out.max_geodesic_length, length);
    total += static_cast<unsigned long>(length);
  }
  out.mean_geodesic_length = total / static_cast<unsigned long>(S.size());
  const PinSet pins = base_pins(out.base);
  for (const Point& p : S) {
    const SolveReport r = solve_direct(S, FunctionTable::indicator(S, p), pins);
    if (r.verdict != Verdict::Unique) {
      throw InternalError("single related component without a unique pinned solution");
    }
    out.max_abs_per_point.push_back(r.diagnostics.max_abs_value);
    if (r.diagnostics.max_abs_value > out.max_abs_value) {
      out.max_abs_value = r.diagnostics.max_abs_value;
    }
  }
  return out;
}

} // namespace goodsets
