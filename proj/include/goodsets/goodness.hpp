#ifndef GOODSETS_GOODNESS_HPP
#define GOODSETS_GOODNESS_HPP

#include "goodsets/linalg.hpp"

#include <optional>
#include <span>

namespace goodsets {

/// A loop is a circuit of incidence vectors: a minimal point set admitting
/// nonzero integer weights whose formal coordinatewise sum vanishes.
using Loop = CircuitVector;

struct GoodnessVerdict {
  bool good = false;
  std::optional<Loop> loop;  ///< present iff !good
};

/// Good iff the incidence rows of S are linearly independent. A non-good
/// verdict carries a loop extracted from S (in S's order).
GoodnessVerdict is_good(const PointSet& S);

/// Fast path: good and deficiency(S) == n - 1.
bool is_full(const PointSet& S);

/// Definitional check: good and every point of Pi_1 S x ... x Pi_n S outside
/// S has an incidence vector in the row span of S.
bool is_full_by_span(const PointSet& S);

/// Greedily adds points of the whole space, in lexicographic order, while
/// goodness is kept. The result is a maximal good set of the space.
PointSet extend_to_maximal(const PointSet& S);

/// Greedily adds points of Pi_1 S x ... x Pi_n S, in lexicographic order,
/// until the set is full. Projections are unchanged.
PointSet full_closure(const PointSet& S);

struct SplitExtension {
  PointSet full;        ///< F: full, contains S, same projections as S
  PointSet complement;  ///< F \ S: full
};

/// Full extension F of a good non-full S such that F \ S is full as well.
/// Grows F one point at a time from a seed point, each time killing one
/// dimension of the homogeneous solutions pinned at the seed.
SplitExtension split_extension(const PointSet& S);

/// F(S, B) = S united with the comb through (b_1, ..., b_n), b_i the least
/// element of B on axis i, with teeth B_i along axis i. Requires B to be a
/// boundary of S meeting every axis; the result is verified to be full with
/// a full comb and unchanged projections.
PointSet associated_full_set(const PointSet& S, std::span<const Coordinate> boundary);

/// The comb part of associated_full_set, in lexicographic order.
PointSet boundary_comb(const SpacePtr& space, std::span<const Coordinate> boundary);

/// Throws PreconditionError unless S is nonempty and good.
void require_good(const PointSet& S, const char* operation);

} // namespace goodsets

#endif // GOODSETS_GOODNESS_HPP
