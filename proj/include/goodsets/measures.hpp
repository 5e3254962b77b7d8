#ifndef GOODSETS_MEASURES_HPP
#define GOODSETS_MEASURES_HPP

#include "goodsets/goodness.hpp"

#include <optional>

namespace goodsets {

/// Probability measure with finite support and rational weights.
class FiniteMeasure {
public:
  /// weights aligned with support; each weight > 0, total exactly 1.
  FiniteMeasure(PointSet support, std::vector<Scalar> weights);

  static FiniteMeasure uniform(PointSet support);

  const PointSet& support() const { return support_; }
  const std::vector<Scalar>& weights() const { return weights_; }
  const Scalar& weight(const Point& p) const;

private:
  PointSet support_;
  std::vector<Scalar> weights_;
};

/// One-dimensional marginals: per axis, mass of each coordinate value
/// (only values carrying mass are listed).
struct MarginalVector {
  std::vector<std::map<std::size_t, Scalar>> per_axis;

  bool operator==(const MarginalVector&) const = default;
};

MarginalVector marginals(const FiniteMeasure& m);

/// Signed measure nu = sum_k c_k delta_{x_k} with zero marginals, scaled by
/// epsilon so that mu + epsilon nu and mu - epsilon nu are both probability
/// measures.
struct Perturbation {
  Loop loop;
  Scalar epsilon;
};

struct SimplicialVerdict {
  bool simplicial = false;
  std::optional<Perturbation> certificate;  ///< present iff !simplicial
};

/// A finite measure is extreme among the measures sharing its marginals
/// exactly when its support carries no loop. The certificate uses the loop
/// of the support with epsilon = min weight / |coefficient| over the loop.
SimplicialVerdict is_simplicial(const FiniteMeasure& m);

/// mu + sign * epsilon * nu, with zero-weight points dropped.
FiniteMeasure perturbed(const FiniteMeasure& m, const Perturbation& p, int sign);

struct MuSetVerdict {
  bool mu_set = false;
  /// A non-simplicial measure supported on S (uniform on a loop) when
  /// !mu_set.
  std::optional<FiniteMeasure> counterexample;
};

/// Every measure supported on S is simplicial iff S is good.
MuSetVerdict is_mu_set(const PointSet& S);

} // namespace goodsets

#endif // GOODSETS_MEASURES_HPP
