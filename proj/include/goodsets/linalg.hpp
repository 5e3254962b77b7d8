#ifndef GOODSETS_LINALG_HPP
#define GOODSETS_LINALG_HPP

#include "goodsets/model.hpp"

#include <optional>
#include <span>
#include <vector>

namespace goodsets {

using Vector = std::vector<Scalar>;

/// Dense row-major rational matrix. Desk-scale systems only (tens of rows
/// and columns), so no sparse storage.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  void append_row(std::span<const Scalar> values);
  Matrix transpose() const;
  Vector multiply(std::span<const Scalar> x) const;
  /// y^T A.
  Vector left_multiply(std::span<const Scalar> y) const;

  bool operator==(const Matrix&) const = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Reduced row echelon form with its pivot columns.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;

  std::size_t rank() const { return pivots.size(); }
};

/// Gauss-Jordan elimination over Q with first-nonzero pivoting. Exact.
Echelon row_reduce(Matrix m);

std::size_t rank(const Matrix& m);

/// Basis of {x : A x = 0}; one vector per free column, with a one in that
/// free column (the standard RREF basis).
std::vector<Vector> null_space(const Matrix& m);

/// Basis of {y : y^T A = 0}.
std::vector<Vector> left_null_space(const Matrix& m);

/// A x = b solved with free variables set to zero, or nullopt when the
/// system is inconsistent.
std::optional<Vector> particular_solution(const Matrix& a, std::span<const Scalar> b);

/// Rescales a rational vector to the unique primitive integer vector
/// (gcd 1) whose first nonzero entry is positive.
std::vector<mpz_class> primitive_integer_vector(std::span<const Scalar> v);

/// Incrementally maintained echelon basis of row vectors over a fixed
/// number of columns. Adding a row reduces it against the current basis;
/// the row is kept only when it is independent.
class RowBasis {
public:
  explicit RowBasis(std::size_t columns) : columns_(columns) {}

  std::size_t rank() const { return rows_.size(); }
  std::size_t columns() const { return columns_; }

  /// Adds the 0/1 vector with ones at the given columns if independent.
  bool try_add(std::span<const std::size_t> ones);
  bool try_add(Vector v);
  bool in_span(std::span<const std::size_t> ones) const;
  bool in_span(Vector v) const;

private:
  Vector reduce(Vector v) const;
  static Vector indicator(std::size_t columns, std::span<const std::size_t> ones);

  std::size_t columns_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

/// Point-by-coordinate 0/1 matrix of a point set. Columns are the union of
/// the projections in canonical order (axis-major, then value order).
class IncidenceSystem {
public:
  explicit IncidenceSystem(PointSet points);

  const PointSet& points() const { return points_; }
  const std::vector<Coordinate>& columns() const { return columns_; }
  std::size_t rows() const { return points_.size(); }
  std::size_t cols() const { return columns_.size(); }
  std::optional<std::size_t> column_index(Coordinate c) const;

  const Matrix& matrix() const { return matrix_; }
  /// Incidence vector of an arbitrary point in this system's column
  /// indexing; nullopt when a coordinate of p is not a column.
  std::optional<Vector> row_vector(const Point& p) const;

private:
  PointSet points_;
  std::vector<Coordinate> columns_;
  std::map<Coordinate, std::size_t> column_index_;
  Matrix matrix_;
};

/// Column-kernel vectors, indexed like IncidenceSystem::columns().
struct KernelBasis {
  std::vector<Vector> vectors;

  std::size_t dimension() const { return vectors.size(); }
  bool empty() const { return vectors.empty(); }
};

enum class Verdict { Unique, Underdetermined, Inconsistent };

const char* to_string(Verdict v);

/// Result of a pinned solve. decomposition is meaningful unless the verdict
/// is Inconsistent; witness is meaningful only then.
struct PinnedSolution {
  Verdict verdict = Verdict::Inconsistent;
  Decomposition decomposition;
  KernelBasis kernel;
  /// Combination y of the equations (points first, then pins in PinSet
  /// order) with y^T A = 0 and y . rhs != 0.
  Vector witness;
};

std::size_t rank(const IncidenceSystem& m);

/// {g : M g = 0, g = 0 on pinned columns}. Pins are equations; their values
/// are ignored here.
KernelBasis column_kernel(const IncidenceSystem& m, const PinSet& pins);

/// u_1 + ... + u_n = rhs on the rows of m, with pins added as unit
/// equations. Free variables are set to zero.
PinnedSolution solve_pinned(const IncidenceSystem& m, const FunctionTable& rhs, const PinSet& pins);

bool in_span(const IncidenceSystem& m, std::span<const Scalar> v);

/// A minimal linearly dependent set of points together with its integer
/// dependency.
struct CircuitVector {
  std::vector<Point> support;
  std::vector<mpz_class> coefficients;

  std::size_t size() const { return support.size(); }
};

/// Finds a circuit among the given points. Support points keep the input
/// order. Throws PreconditionError when the points are independent.
CircuitVector extract_circuit(const Space& space, std::span<const Point> points);

/// Re-checks a circuit: nonzero primitive coefficients, zero formal sum,
/// and every proper subset independent.
bool verify_circuit(const Space& space, const CircuitVector& circuit);

} // namespace goodsets

#endif // GOODSETS_LINALG_HPP
