#include "goodsets/linalg.hpp"

#include <algorithm>

namespace goodsets {

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

void Matrix::append_row(std::span<const Scalar> values) {
  if (rows_ == 0 && cols_ == 0) {
    cols_ = values.size();
  }
  if (values.size() != cols_) {
    throw PreconditionError("row length does not match matrix width");
  }
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      t(c, r) = (*this)(r, c);
    }
  }
  return t;
}

Vector Matrix::multiply(std::span<const Scalar> x) const {
  if (x.size() != cols_) {
    throw PreconditionError("vector length does not match matrix width");
  }
  Vector y(rows_, Scalar(0));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (sgn((*this)(r, c)) != 0) {
        y[r] += (*this)(r, c) * x[c];
      }
    }
  }
  return y;
}

Vector Matrix::left_multiply(std::span<const Scalar> y) const {
  if (y.size() != rows_) {
    throw PreconditionError("vector length does not match matrix height");
  }
  Vector x(cols_, Scalar(0));
  for (std::size_t r = 0; r < rows_; ++r) {
    if (sgn(y[r]) == 0) {
      continue;
    }
    for (std::size_t c = 0; c < cols_; ++c) {
      x[c] += y[r] * (*this)(r, c);
    }
  }
  return x;
}

Echelon row_reduce(Matrix m) {
  Echelon out;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    std::size_t r = pivot_row;
    while (r < m.rows() && sgn(m(r, col)) == 0) {
      ++r;
    }
    if (r == m.rows()) {
      continue;
    }
    if (r != pivot_row) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        std::swap(m(r, c), m(pivot_row, c));
      }
    }
    const Scalar inv = 1 / m(pivot_row, col);
    for (std::size_t c = col; c < m.cols(); ++c) {
      m(pivot_row, c) *= inv;
    }
    for (std::size_t other = 0; other < m.rows(); ++other) {
      if (other == pivot_row || sgn(m(other, col)) == 0) {
        continue;
      }
      const Scalar factor = m(other, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (sgn(m(pivot_row, c)) != 0) {
          m(other, c) -= factor * m(pivot_row, c);
        }
      }
    }
    out.pivots.push_back(col);
    ++pivot_row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) {
  return row_reduce(m).rank();
}

std::vector<Vector> null_space(const Matrix& m) {
  const Echelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : e.pivots) {
    is_pivot[p] = true;
  }
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) {
      continue;
    }
    Vector v(m.cols(), Scalar(0));
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      v[e.pivots[r]] = -e.reduced(r, free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vector> left_null_space(const Matrix& m) {
  return null_space(m.transpose());
}

std::optional<Vector> particular_solution(const Matrix& a, std::span<const Scalar> b) {
  if (b.size() != a.rows()) {
    throw PreconditionError("right-hand side length does not match matrix height");
  }
  Matrix augmented(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      augmented(r, c) = a(r, c);
    }
    augmented(r, a.cols()) = b[r];
  }
  const Echelon e = row_reduce(std::move(augmented));
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) {
    return std::nullopt;
  }
  Vector x(a.cols(), Scalar(0));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    x[e.pivots[r]] = e.reduced(r, a.cols());
  }
  return x;
}

std::vector<mpz_class> primitive_integer_vector(std::span<const Scalar> v) {
  mpz_class denominator_lcm = 1;
  for (const Scalar& x : v) {
    mpz_lcm(denominator_lcm.get_mpz_t(), denominator_lcm.get_mpz_t(), x.get_den_mpz_t());
  }
  std::vector<mpz_class> out;
  out.reserve(v.size());
  mpz_class g = 0;
  for (const Scalar& x : v) {
    mpz_class scaled = x.get_num() * (denominator_lcm / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled.get_mpz_t());
    out.push_back(std::move(scaled));
  }
  if (g == 0) {
    return out;
  }
  auto first = std::find_if(out.begin(), out.end(), [](const mpz_class& z) { return sgn(z) != 0; });
  if (sgn(*first) < 0) {
    g = -g;
  }
  for (mpz_class& z : out) {
    z /= g;
  }
  return out;
}

// ---------------------------------------------------------------------------

Vector RowBasis::indicator(std::size_t columns, std::span<const std::size_t> ones) {
  Vector v(columns, Scalar(0));
  for (std::size_t c : ones) {
    if (c >= columns) {
      throw PreconditionError("column out of range");
    }
    v[c] += 1;
  }
  return v;
}

Vector RowBasis::reduce(Vector v) const {
  if (v.size() != columns_) {
    throw PreconditionError("vector length does not match basis width");
  }
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::size_t p = pivots_[k];
    if (sgn(v[p]) == 0) {
      continue;
    }
    const Scalar factor = v[p];
    for (std::size_t c = 0; c < columns_; ++c) {
      if (sgn(rows_[k][c]) != 0) {
        v[c] -= factor * rows_[k][c];
      }
    }
  }
  return v;
}

bool RowBasis::try_add(std::span<const std::size_t> ones) {
  return try_add(indicator(columns_, ones));
}

bool RowBasis::try_add(Vector v) {
  v = reduce(std::move(v));
  auto it = std::find_if(v.begin(), v.end(), [](const Scalar& x) { return sgn(x) != 0; });
  if (it == v.end()) {
    return false;
  }
  const Scalar inv = 1 / *it;
  for (Scalar& x : v) {
    x *= inv;
  }
  pivots_.push_back(static_cast<std::size_t>(it - v.begin()));
  rows_.push_back(std::move(v));
  return true;
}

bool RowBasis::in_span(std::span<const std::size_t> ones) const {
  return in_span(indicator(columns_, ones));
}

bool RowBasis::in_span(Vector v) const {
  v = reduce(std::move(v));
  return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return sgn(x) == 0; });
}

// ---------------------------------------------------------------------------

IncidenceSystem::IncidenceSystem(PointSet points)
    : points_(std::move(points)), columns_(all_projections(points_)) {
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    column_index_.emplace(columns_[c], c);
  }
  matrix_ = Matrix(points_.size(), columns_.size());
  for (std::size_t r = 0; r < points_.size(); ++r) {
    for (std::size_t i = 0; i < points_.arity(); ++i) {
      matrix_(r, column_index_.at(points_[r].coordinate(i))) = 1;
    }
  }
}

std::optional<std::size_t> IncidenceSystem::column_index(Coordinate c) const {
  auto it = column_index_.find(c);
  if (it == column_index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

std::optional<Vector> IncidenceSystem::row_vector(const Point& p) const {
  Vector v(cols(), Scalar(0));
  for (std::size_t i = 0; i < p.arity(); ++i) {
    auto c = column_index(p.coordinate(i));
    if (!c) {
      return std::nullopt;
    }
    v[*c] = 1;
  }
  return v;
}

const char* to_string(Verdict v) {
  switch (v) {
  case Verdict::Unique:
    return "unique";
  case Verdict::Underdetermined:
    return "underdetermined";
  case Verdict::Inconsistent:
    return "inconsistent";
  }
  return "unknown";
}

std::size_t rank(const IncidenceSystem& m) {
  return rank(m.matrix());
}

namespace {

Matrix pinned_matrix(const IncidenceSystem& m, const PinSet& pins) {
  Matrix a = m.matrix();
  for (const auto& [coordinate, value] : pins) {
    auto c = m.column_index(coordinate);
    if (!c) {
      throw PreconditionError("pinned coordinate (axis " + std::to_string(coordinate.axis) + ", value " +
                              std::to_string(coordinate.value) + ") is not a column of the system");
    }
    Vector unit(m.cols(), Scalar(0));
    unit[*c] = 1;
    a.append_row(unit);
  }
  return a;
}

} // namespace

KernelBasis column_kernel(const IncidenceSystem& m, const PinSet& pins) {
  return KernelBasis{null_space(pinned_matrix(m, pins))};
}

PinnedSolution solve_pinned(const IncidenceSystem& m, const FunctionTable& rhs, const PinSet& pins) {
  if (!m.points().same_points(rhs.domain())) {
    throw PreconditionError("right-hand side must be defined exactly on the rows of the system");
  }
  const Matrix a = pinned_matrix(m, pins);
  Vector b;
  b.reserve(a.rows());
  for (const Point& p : m.points()) {
    b.push_back(rhs.at(p));
  }
  for (const auto& [coordinate, value] : pins) {
    b.push_back(value);
  }

  PinnedSolution out;
  auto x = particular_solution(a, b);
  if (!x) {
    out.verdict = Verdict::Inconsistent;
    for (Vector& y : left_null_space(a)) {
      Scalar dot = 0;
      for (std::size_t r = 0; r < y.size(); ++r) {
        dot += y[r] * b[r];
      }
      if (sgn(dot) != 0) {
        out.witness = std::move(y);
        break;
      }
    }
    if (out.witness.empty()) {
      throw InternalError("inconsistent system without a separating witness");
    }
    return out;
  }

  out.kernel.vectors = null_space(a);
  out.verdict = out.kernel.empty() ? Verdict::Unique : Verdict::Underdetermined;
  out.decomposition = Decomposition(m.points().arity());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    out.decomposition.set(m.columns()[c], (*x)[c]);
  }
  for (const Point& p : m.points()) {
    if (evaluate(out.decomposition, p) != rhs.at(p)) {
      throw InternalError("pinned solution does not reproduce the right-hand side");
    }
  }
  for (const auto& [coordinate, value] : pins) {
    if (out.decomposition.at(coordinate) != value) {
      throw InternalError("pinned solution does not honour a pin");
    }
  }
  return out;
}

bool in_span(const IncidenceSystem& m, std::span<const Scalar> v) {
  if (v.size() != m.cols()) {
    throw PreconditionError("vector is not indexed by the system's columns");
  }
  RowBasis basis(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    basis.try_add(m.matrix().row(r));
  }
  return basis.in_span(Vector(v.begin(), v.end()));
}

namespace {

bool dependent(const Space& space, std::span<const Point> points) {
  RowBasis basis(space.column_count());
  for (const Point& p : points) {
    if (!basis.try_add(incidence_vector(space, p))) {
      return true;
    }
  }
  return false;
}

Matrix incidence_rows(const Space& space, std::span<const Point> points) {
  Matrix m(points.size(), space.column_count());
  for (std::size_t r = 0; r < points.size(); ++r) {
    for (std::size_t c : incidence_vector(space, points[r])) {
      m(r, c) += 1;
    }
  }
  return m;
}

} // namespace

CircuitVector extract_circuit(const Space& space, std::span<const Point> points) {
  for (const Point& p : points) {
    if (!space.contains(p)) {
      throw PreconditionError("circuit candidate is not a point of the space");
    }
  }
  std::vector<Point> support(points.begin(), points.end());
  if (!dependent(space, support)) {
    throw PreconditionError("points are linearly independent; no circuit exists");
  }
  // One pass suffices: a point kept because its removal made the rest
  // independent stays necessary as the rest shrinks.
  for (std::size_t i = 0; i < support.size();) {
    std::vector<Point> rest = support;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    if (dependent(space, rest)) {
      support = std::move(rest);
    } else {
      ++i;
    }
  }
  const auto kernel = left_null_space(incidence_rows(space, support));
  if (kernel.size() != 1) {
    throw InternalError("minimal dependent set with a kernel of dimension " + std::to_string(kernel.size()));
  }
  CircuitVector out{std::move(support), primitive_integer_vector(kernel.front())};
  if (!verify_circuit(space, out)) {
    throw InternalError("extracted circuit failed verification");
  }
  return out;
}

bool verify_circuit(const Space& space, const CircuitVector& circuit) {
  if (circuit.support.empty() || circuit.support.size() != circuit.coefficients.size()) {
    return false;
  }
  mpz_class g = 0;
  for (const mpz_class& z : circuit.coefficients) {
    if (sgn(z) == 0) {
      return false;
    }
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
  }
  if (g != 1 || sgn(circuit.coefficients.front()) < 0) {
    return false;
  }
  std::vector<mpz_class> sum(space.column_count(), mpz_class(0));
  for (std::size_t k = 0; k < circuit.size(); ++k) {
    if (!space.contains(circuit.support[k])) {
      return false;
    }
    for (std::size_t c : incidence_vector(space, circuit.support[k])) {
      sum[c] += circuit.coefficients[k];
    }
  }
  if (std::any_of(sum.begin(), sum.end(), [](const mpz_class& z) { return sgn(z) != 0; })) {
    return false;
  }
  // Minimality: dropping any single point leaves an independent set, which
  // covers every proper subset.
  for (std::size_t k = 0; k < circuit.size(); ++k) {
    std::vector<Point> rest = circuit.support;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
    if (dependent(space, rest)) {
      return false;
    }
  }
  return true;
}

} // namespace goodsets
