#include "goodsets/measures.hpp"

namespace goodsets {

FiniteMeasure::FiniteMeasure(PointSet support, std::vector<Scalar> weights)
    : support_(std::move(support)), weights_(std::move(weights)) {
  if (support_.empty()) {
    throw PreconditionError("a probability measure needs a nonempty support");
  }
  if (weights_.size() != support_.size()) {
    throw PreconditionError("measure must have one weight per support point");
  }
  Scalar total = 0;
  for (const Scalar& w : weights_) {
    if (sgn(w) <= 0) {
      throw PreconditionError("measure weights must be positive on the support");
    }
    total += w;
  }
  if (total != 1) {
    throw PreconditionError("measure weights sum to " + total.get_str() + ", not 1");
  }
}

FiniteMeasure FiniteMeasure::uniform(PointSet support) {
  const Scalar w(1, static_cast<unsigned long>(support.size()));
  std::vector<Scalar> weights(support.size(), w);
  return FiniteMeasure(std::move(support), std::move(weights));
}

const Scalar& FiniteMeasure::weight(const Point& p) const {
  auto idx = support_.index_of(p);
  if (!idx) {
    throw PreconditionError("point is outside the support");
  }
  return weights_[*idx];
}

MarginalVector marginals(const FiniteMeasure& m) {
  MarginalVector out;
  out.per_axis.resize(m.support().arity());
  for (std::size_t k = 0; k < m.support().size(); ++k) {
    const Point& p = m.support()[k];
    for (std::size_t i = 0; i < p.arity(); ++i) {
      out.per_axis[i][p[i]] += m.weights()[k];
    }
  }
  return out;
}

SimplicialVerdict is_simplicial(const FiniteMeasure& m) {
  GoodnessVerdict good = is_good(m.support());
  if (good.good) {
    return {true, std::nullopt};
  }
  Perturbation cert{std::move(*good.loop), Scalar(0)};
  bool first = true;
  for (std::size_t k = 0; k < cert.loop.size(); ++k) {
    const Scalar ratio = m.weight(cert.loop.support[k]) / Scalar(abs(cert.loop.coefficients[k]));
    if (first || ratio < cert.epsilon) {
      cert.epsilon = ratio;
      first = false;
    }
  }
  const MarginalVector base = marginals(m);
  for (int sign : {1, -1}) {
    if (!(marginals(perturbed(m, cert, sign)) == base)) {
      throw InternalError("perturbation changed the marginals");
    }
  }
  return {false, std::move(cert)};
}

FiniteMeasure perturbed(const FiniteMeasure& m, const Perturbation& p, int sign) {
  std::vector<Scalar> weights = m.weights();
  for (std::size_t k = 0; k < p.loop.size(); ++k) {
    auto idx = m.support().index_of(p.loop.support[k]);
    if (!idx) {
      throw PreconditionError("perturbation leaves the support");
    }
    weights[*idx] += Scalar(sign) * p.epsilon * Scalar(p.loop.coefficients[k]);
  }
  PointSet support(m.support().space_ptr());
  std::vector<Scalar> kept;
  for (std::size_t k = 0; k < weights.size(); ++k) {
    if (sgn(weights[k]) < 0) {
      throw PreconditionError("perturbation makes a weight negative");
    }
    if (sgn(weights[k]) > 0) {
      support.insert(m.support()[k]);
      kept.push_back(weights[k]);
    }
  }
  return FiniteMeasure(std::move(support), std::move(kept));
}

MuSetVerdict is_mu_set(const PointSet& S) {
  GoodnessVerdict good = is_good(S);
  if (good.good) {
    return {true, std::nullopt};
  }
  PointSet loop_points(S.space_ptr(), good.loop->support);
  FiniteMeasure witness = FiniteMeasure::uniform(std::move(loop_points));
  if (is_simplicial(witness).simplicial) {
    throw InternalError("uniform measure on a loop is simplicial");
  }
  return {false, std::move(witness)};
}

} // namespace goodsets
