#include "goodsets/goodness.hpp"

#include "goodsets/structure.hpp"

#include <algorithm>
#include <string>

namespace goodsets {

namespace {

void require_nonempty(const PointSet& S, const char* operation) {
  if (S.empty()) {
    throw PreconditionError(std::string(operation) + ": the point set is empty");
  }
}

RowBasis basis_of(const PointSet& S) {
  RowBasis basis(S.space().column_count());
  for (const Point& p : S) {
    basis.try_add(incidence_vector(S.space(), p));
  }
  return basis;
}

} // namespace

void require_good(const PointSet& S, const char* operation) {
  require_nonempty(S, operation);
  if (!is_good(S).good) {
    throw PreconditionError(std::string(operation) + ": the point set is not good");
  }
}

GoodnessVerdict is_good(const PointSet& S) {
  require_nonempty(S, "is_good");
  RowBasis basis(S.space().column_count());
  for (const Point& p : S) {
    if (!basis.try_add(incidence_vector(S.space(), p))) {
      return {false, extract_circuit(S.space(), S.points())};
    }
  }
  return {true, std::nullopt};
}

bool is_full(const PointSet& S) {
  require_nonempty(S, "is_full");
  return deficiency(S) == static_cast<long>(S.arity()) - 1 && is_good(S).good;
}

bool is_full_by_span(const PointSet& S) {
  require_nonempty(S, "is_full_by_span");
  if (!is_good(S).good) {
    return false;
  }
  const RowBasis basis = basis_of(S);
  for (const Point& candidate : projection_product(S)) {
    if (!S.contains(candidate) && !basis.in_span(incidence_vector(S.space(), candidate))) {
      return false;
    }
  }
  return true;
}

PointSet extend_to_maximal(const PointSet& S) {
  require_good(S, "extend_to_maximal");
  PointSet out = S;
  RowBasis basis = basis_of(S);
  // A candidate rejected once stays in the span as the basis grows, so a
  // single lexicographic pass reaches a maximal set.
  for (const Point& candidate : all_points(S.space())) {
    if (!out.contains(candidate) && basis.try_add(incidence_vector(S.space(), candidate))) {
      out.insert(candidate);
    }
  }
  return out;
}

PointSet full_closure(const PointSet& S) {
  require_good(S, "full_closure");
  PointSet out = S;
  RowBasis basis = basis_of(S);
  const long target = static_cast<long>(S.arity()) - 1;
  for (const Point& candidate : projection_product(S)) {
    if (deficiency(out) == target) {
      break;
    }
    if (!out.contains(candidate) && basis.try_add(incidence_vector(S.space(), candidate))) {
      out.insert(candidate);
    }
  }
  if (deficiency(out) != target || !is_full_by_span(out)) {
    throw InternalError("full_closure did not reach a full set");
  }
  return out;
}

SplitExtension split_extension(const PointSet& S) {
  require_good(S, "split_extension");
  if (is_full(S)) {
    throw PreconditionError("split_extension: the point set is already full");
  }
  const std::size_t n = S.arity();
  const long target = static_cast<long>(n) - 1;

  PointSet F = S;
  {
    RowBasis basis = basis_of(S);
    const auto candidates = projection_product(S);
    auto seed = std::find_if(candidates.begin(), candidates.end(), [&](const Point& p) {
      return !S.contains(p) && basis.in_span(incidence_vector(S.space(), p)) == false;
    });
    if (seed == candidates.end()) {
      throw InternalError("good non-full set without an addable point");
    }
    F.insert(*seed);
  }
  const Point base = F.points().back();

  PinSet pins;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    pins.emplace(base.coordinate(i), Scalar(0));
  }

  while (!is_full(F)) {
    const long before = deficiency(F);
    const IncidenceSystem system(F);
    const KernelBasis kernel = column_kernel(system, pins);
    if (kernel.empty()) {
      throw InternalError("non-full good set with trivial pinned homogeneous solutions");
    }
    const Vector& solution = kernel.vectors.front();
    // Columns are axis-major, so the first nonzero column is the first axis
    // j (and least value a_j) where the homogeneous solution is nonzero.
    auto nonzero = std::find_if(solution.begin(), solution.end(), [](const Scalar& x) { return sgn(x) != 0; });
    const Coordinate hit = system.columns()[static_cast<std::size_t>(nonzero - solution.begin())];
    Point next = base;
    next.coords[hit.axis] = hit.value;
    if (F.contains(next)) {
      throw InternalError("split step produced a point already in F");
    }
    F.insert(next);
    if (!is_good(F).good || deficiency(F) != before - 1) {
      throw InternalError("split step did not lower the deficiency by one");
    }
  }

  SplitExtension out{F, F.minus(S)};
  bool same_projections = true;
  for (std::size_t i = 0; i < n; ++i) {
    same_projections = same_projections && projection(F, i) == projection(S, i);
  }
  if (!same_projections || !is_full(out.complement) ||
      static_cast<long>(out.complement.size()) != deficiency(S) - target) {
    throw InternalError("split_extension postcondition failed");
  }
  return out;
}

PointSet boundary_comb(const SpacePtr& space, std::span<const Coordinate> boundary) {
  const std::size_t n = space->arity();
  std::vector<std::vector<std::size_t>> per_axis(n);
  for (Coordinate c : boundary) {
    if (!space->contains(c)) {
      throw PreconditionError("boundary coordinate outside the space");
    }
    per_axis[c.axis].push_back(c.value);
  }
  Point base;
  base.coords.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (per_axis[i].empty()) {
      throw PreconditionError("boundary has no coordinate on axis '" + space->axis(i).name +
                              "'; the associated full set needs every axis");
    }
    std::sort(per_axis[i].begin(), per_axis[i].end());
    base.coords[i] = per_axis[i].front();
  }
  std::vector<Point> teeth;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t v : per_axis[i]) {
      Point p = base;
      p.coords[i] = v;
      teeth.push_back(std::move(p));
    }
  }
  std::sort(teeth.begin(), teeth.end());
  teeth.erase(std::unique(teeth.begin(), teeth.end()), teeth.end());
  return PointSet(space, std::move(teeth));
}

PointSet associated_full_set(const PointSet& S, std::span<const Coordinate> boundary) {
  require_good(S, "associated_full_set");
  const PointSet comb = boundary_comb(S.space_ptr(), boundary);
  if (!is_boundary(S, boundary)) {
    throw PreconditionError("associated_full_set: the coordinates are not a boundary of the set");
  }
  const PointSet F = S.unite(comb);
  bool same_projections = true;
  for (std::size_t i = 0; i < S.arity(); ++i) {
    same_projections = same_projections && projection(F, i) == projection(S, i);
  }
  if (!is_full(comb) || !is_full(F) || !same_projections || F.size() != S.size() + comb.size()) {
    throw InternalError("associated full set failed verification");
  }
  return F;
}

} // namespace goodsets
