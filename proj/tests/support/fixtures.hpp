// Small named point sets shared by the unit tests.
#pragma once

#include "goodsets/model.hpp"
#include "oracle.hpp"

#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

namespace fixtures {

using namespace goodsets;

/// n axes x1..xn with labels "0".."k-1", so label == value index.
inline SpacePtr digits(std::size_t n, std::size_t k) {
  std::vector<std::string> labels;
  for (std::size_t v = 0; v < k; ++v) {
    labels.push_back(std::to_string(v));
  }
  return make_uniform_space(n, labels);
}

inline PointSet set(const SpacePtr& space, std::vector<Point> points) {
  return PointSet(space, std::move(points));
}

inline PointSet t4() {
  return set(digits(3, 2), {{1, 0, 1}, {1, 1, 0}, {0, 1, 1}, {0, 0, 0}});
}

inline PointSet e5() {
  return set(digits(3, 2), {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
}

inline PointSet e5plus() {
  return e5().with({1, 1, 1});
}

/// {(0,0,0),(1,1,1)}: two unrelated points.
inline PointSet diagonal_pair() {
  return set(digits(3, 2), {{0, 0, 0}, {1, 1, 1}});
}

/// n = 2 rectangle {(a,b),(a,d),(c,b),(c,d)}.
inline PointSet rectangle() {
  auto space = make_space({{"x1", {"a", "c"}}, {"x2", {"b", "d"}}});
  return set(space, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
}

inline PointSet ex07() {
  auto space = make_space({{"x1", {"1", "4", "7"}}, {"x2", {"2", "5", "8"}}, {"x3", {"3", "6", "9"}}});
  return set(space, {{0, 0, 0}, {1, 1, 1}, {2, 2, 2}, {0, 1, 2}});
}

/// Staircase prefix {(0,0,0),(1,0,0),(1,1,0),(1,1,1),(2,1,1),(2,2,1),(2,2,2)}.
inline PointSet staircase() {
  return set(digits(3, 3), {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {1, 1, 1}, {2, 1, 1}, {2, 2, 1}, {2, 2, 2}});
}

inline std::vector<Point> sorted(std::vector<Point> v) {
  std::sort(v.begin(), v.end());
  return v;
}

inline std::vector<Point> sorted(const PointSet& s) {
  return sorted(s.points());
}

/// Random decomposition with values on every coordinate of the space.
inline Decomposition random_decomposition(oracle::Rng& rng, const Space& space) {
  Decomposition d(space.arity());
  for (std::size_t i = 0; i < space.arity(); ++i) {
    for (std::size_t v = 0; v < space.axis_size(i); ++v) {
      d.set({i, v}, oracle::random_rational(rng));
    }
  }
  return d;
}

inline FunctionTable function_of(const PointSet& S, const Decomposition& d) {
  std::vector<Scalar> values;
  for (const Point& p : S) {
    values.push_back(evaluate(d, p));
  }
  return FunctionTable(S, values);
}

inline FunctionTable random_function(oracle::Rng& rng, const PointSet& S) {
  std::vector<Scalar> values;
  for (std::size_t k = 0; k < S.size(); ++k) {
    values.push_back(oracle::random_rational(rng));
  }
  return FunctionTable(S, values);
}

/// Exact re-evaluation of a decomposition against f on its domain.
inline bool reproduces(const Decomposition& d, const FunctionTable& f) {
  for (std::size_t k = 0; k < f.domain().size(); ++k) {
    if (evaluate(d, f.domain()[k]) != f[k]) {
      return false;
    }
  }
  return true;
}

} // namespace fixtures
