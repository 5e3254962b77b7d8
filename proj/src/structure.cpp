#include "goodsets/structure.hpp"

#include "goodsets/goodness.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace goodsets {

namespace {

class UnionFind {
public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

  std::size_t find(std::size_t a) {
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }

  // The smaller root wins, so representatives are the least members.
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent_[std::max(a, b)] = std::min(a, b);
    }
  }

private:
  std::vector<std::size_t> parent_;
};

/// Subset under construction during the geodesic search: an echelon basis
/// for goodness and per-column counts for the deficiency.
class PartialSubset {
public:
  explicit PartialSubset(const Space& space)
      : space_(&space), basis_(space.column_count()), counts_(space.column_count(), 0) {}

  bool try_add(const Point& p) {
    const auto ones = incidence_vector(*space_, p);
    if (!basis_.try_add(ones)) {
      return false;
    }
    for (std::size_t c : ones) {
      if (counts_[c]++ == 0) {
        ++coordinates_;
      }
    }
    ++points_;
    return true;
  }

  long deficiency() const { return static_cast<long>(coordinates_) - static_cast<long>(points_); }

private:
  const Space* space_;
  RowBasis basis_;
  std::vector<unsigned> counts_;
  std::size_t coordinates_ = 0;
  std::size_t points_ = 0;
};

/// Lower bound used to prune the geodesic search.
///
/// On a good set g(T) = |proj T| - |T| never drops below n - 1 and is
/// submodular, so full subsets are exactly the minimisers of g. The least
/// minimiser containing a forced set P inside P + pool is the source side of
/// the minimal minimum cut in the network
///   source -> point (1, or unbounded if forced) -> its coordinates -> sink (1).
/// Every full subset in range contains it, so if it is missing or larger than
/// the size being enumerated the branch holds no full subset of that size.
class TightBound {
public:
  TightBound(const Space& space, const std::vector<Point>& points) {
    std::vector<std::size_t> local(space.column_count(), kNone);
    for (const Point& p : points) {
      std::vector<std::size_t> cols;
      for (std::size_t c : incidence_vector(space, p)) {
        if (local[c] == kNone) {
          local[c] = columns_++;
        }
        cols.push_back(local[c]);
      }
      columns_of_.push_back(std::move(cols));
    }
  }

  /// Size of the least full superset of `forced` drawn from `forced` + `pool`,
  /// or nullopt when there is none.
  std::optional<std::size_t> least_full_size(const std::vector<std::size_t>& forced,
                                             const std::vector<std::size_t>& pool, long full_deficiency) const {
    const std::size_t m = columns_of_.size();
    const std::size_t source = 0, sink = 1, point0 = 2, column0 = 2 + m;
    Network net(column0 + columns_);
    for (std::size_t p : forced) {
      net.add(source, point0 + p, kUnbounded);
    }
    for (std::size_t p : pool) {
      net.add(source, point0 + p, 1);
    }
    std::vector<bool> used(columns_, false);
    for (const auto* group : {&forced, &pool}) {
      for (std::size_t p : *group) {
        for (std::size_t c : columns_of_[p]) {
          net.add(point0 + p, column0 + c, kUnbounded);
          used[c] = true;
        }
      }
    }
    for (std::size_t c = 0; c < columns_; ++c) {
      if (used[c]) {
        net.add(column0 + c, sink, 1);
      }
    }
    const long flow = net.max_flow(source, sink);
    const long least = flow - static_cast<long>(forced.size() + pool.size());
    if (least < full_deficiency) {
      throw InternalError("a subset of a good set has deficiency below n - 1");
    }
    if (least > full_deficiency) {
      return std::nullopt;
    }
    const auto reach = net.residual_reach(source);
    std::size_t size = 0;
    for (std::size_t p = 0; p < m; ++p) {
      size += reach[point0 + p] ? 1 : 0;
    }
    return size;
  }

private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  static constexpr long kUnbounded = 1L << 30;

  struct Network {
    struct Edge {
      std::size_t to;
      long capacity;
    };
    std::vector<Edge> edges;
    std::vector<std::vector<std::size_t>> out;

    explicit Network(std::size_t nodes) : out(nodes) {}

    void add(std::size_t a, std::size_t b, long capacity) {
      out[a].push_back(edges.size());
      edges.push_back({b, capacity});
      out[b].push_back(edges.size());
      edges.push_back({a, 0});
    }

    long max_flow(std::size_t s, std::size_t t) {
      long total = 0;
      for (;;) {
        std::vector<std::size_t> via(out.size(), kNone);
        std::vector<std::size_t> queue{s};
        std::vector<bool> seen(out.size(), false);
        seen[s] = true;
        for (std::size_t head = 0; head < queue.size() && !seen[t]; ++head) {
          for (std::size_t e : out[queue[head]]) {
            if (edges[e].capacity > 0 && !seen[edges[e].to]) {
              seen[edges[e].to] = true;
              via[edges[e].to] = e;
              queue.push_back(edges[e].to);
            }
          }
        }
        if (!seen[t]) {
          return total;
        }
        long push = kUnbounded;
        for (std::size_t v = t; v != s; v = edges[via[v] ^ 1].to) {
          push = std::min(push, edges[via[v]].capacity);
        }
        for (std::size_t v = t; v != s; v = edges[via[v] ^ 1].to) {
          edges[via[v]].capacity -= push;
          edges[via[v] ^ 1].capacity += push;
        }
        total += push;
      }
    }

    std::vector<bool> residual_reach(std::size_t s) const {
      std::vector<bool> seen(out.size(), false);
      std::vector<std::size_t> stack{s};
      seen[s] = true;
      while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t e : out[v]) {
          if (edges[e].capacity > 0 && !seen[edges[e].to]) {
            seen[edges[e].to] = true;
            stack.push_back(edges[e].to);
          }
        }
      }
      return seen;
    }
  };

  std::vector<std::vector<std::size_t>> columns_of_;
  std::size_t columns_ = 0;
};

/// Candidate indices are offset by the number of endpoints inside `bound`.
struct GeodesicSearch {
  const std::vector<Point>& candidates;
  const TightBound& bound;
  std::size_t endpoint_count;
  long full_deficiency;
  std::vector<std::size_t> chosen;
  std::vector<std::vector<std::size_t>> found;

  void run(const PartialSubset& partial, std::size_t start, std::size_t remaining) {
    if (remaining == 0) {
      if (partial.deficiency() == full_deficiency) {
        found.push_back(chosen);
      }
      return;
    }
    // Each added point lowers the deficiency by at most one.
    if (partial.deficiency() - static_cast<long>(remaining) > full_deficiency) {
      return;
    }
    std::vector<std::size_t> forced(endpoint_count);
    std::iota(forced.begin(), forced.end(), std::size_t{0});
    for (std::size_t j : chosen) {
      forced.push_back(endpoint_count + j);
    }
    std::vector<std::size_t> pool;
    for (std::size_t j = start; j < candidates.size(); ++j) {
      pool.push_back(endpoint_count + j);
    }
    const auto least = bound.least_full_size(forced, pool, full_deficiency);
    if (!least || *least > forced.size() + remaining) {
      return;
    }
    for (std::size_t j = start; j + remaining <= candidates.size(); ++j) {
      PartialSubset next = partial;
      if (!next.try_add(candidates[j])) {
        continue;
      }
      chosen.push_back(j);
      run(next, j + 1, remaining - 1);
      chosen.pop_back();
    }
  }
};

} // namespace

std::optional<Geodesic> geodesic(const PointSet& S, const Point& x, const Point& y) {
  require_good(S, "geodesic");
  if (!S.contains(x) || !S.contains(y)) {
    throw PreconditionError("geodesic: endpoints must be points of the set");
  }
  const long full_deficiency = static_cast<long>(S.arity()) - 1;

  PartialSubset seed(S.space());
  seed.try_add(x);
  std::vector<Point> endpoints{x};
  if (y != x) {
    if (!seed.try_add(y)) {
      throw InternalError("two distinct points with dependent incidence vectors");
    }
    endpoints.push_back(y);
  }
  std::vector<Point> candidates;
  for (const Point& p : S) {
    if (p != x && p != y) {
      candidates.push_back(p);
    }
  }

  std::vector<Point> indexed = endpoints;
  indexed.insert(indexed.end(), candidates.begin(), candidates.end());
  const TightBound bound(S.space(), indexed);

  for (std::size_t extra = 0; extra <= candidates.size(); ++extra) {
    GeodesicSearch search{candidates, bound, endpoints.size(), full_deficiency, {}, {}};
    search.run(seed, 0, extra);
    if (search.found.empty()) {
      continue;
    }
    if (search.found.size() != 1) {
      throw InternalError("two distinct geodesics of length " + std::to_string(endpoints.size() + extra) +
                          " join " + S.space().describe(x) + " and " + S.space().describe(y));
    }
    std::set<Point> members(endpoints.begin(), endpoints.end());
    for (std::size_t j : search.found.front()) {
      members.insert(candidates[j]);
    }
    PointSet path(S.space_ptr());
    for (const Point& p : S) {
      if (members.contains(p)) {
        path.insert(p);
      }
    }
    return Geodesic{x, y, std::move(path)};
  }
  return std::nullopt;
}

bool related(const PointSet& S, const Point& x, const Point& y) {
  return geodesic(S, x, y).has_value();
}

ComponentPartition related_components(const PointSet& S) {
  require_good(S, "related_components");
  const std::size_t m = S.size();
  std::vector<std::vector<bool>> pairwise(m, std::vector<bool>(m, false));
  UnionFind uf(m);
  for (std::size_t a = 0; a < m; ++a) {
    pairwise[a][a] = true;
    for (std::size_t b = a + 1; b < m; ++b) {
      if (related(S, S[a], S[b])) {
        pairwise[a][b] = pairwise[b][a] = true;
        uf.unite(a, b);
      }
    }
  }

  ComponentPartition out;
  out.component_of.assign(m, 0);
  std::vector<std::size_t> slot_of_root(m, m);
  std::vector<std::vector<std::size_t>> members;
  for (std::size_t a = 0; a < m; ++a) {
    const std::size_t root = uf.find(a);
    if (slot_of_root[root] == m) {
      slot_of_root[root] = members.size();
      members.emplace_back();
    }
    out.component_of[a] = slot_of_root[root];
    members[slot_of_root[root]].push_back(a);
  }
  for (const auto& idx : members) {
    for (std::size_t a : idx) {
      for (std::size_t b : idx) {
        if (!pairwise[a][b]) {
          throw InternalError("relatedness is not transitive between " + S.space().describe(S[a]) + " and " +
                              S.space().describe(S[b]));
        }
      }
    }
    PointSet component = S.subset(idx);
    if (!is_full(component)) {
      throw InternalError("a related component is not full");
    }
    out.components.push_back(std::move(component));
  }
  return out;
}

std::size_t EiClasses::class_of(Coordinate c) const {
  const auto& axis = classes.at(c.axis);
  for (std::size_t k = 0; k < axis.size(); ++k) {
    if (std::binary_search(axis[k].begin(), axis[k].end(), c.value)) {
      return k;
    }
  }
  throw PreconditionError("coordinate is not in the projection");
}

std::size_t EiClasses::total() const {
  std::size_t t = 0;
  for (const auto& axis : classes) {
    t += axis.size();
  }
  return t;
}

EiClasses ei_classes(const PointSet& S, const ComponentPartition& components) {
  EiClasses out;
  for (std::size_t i = 0; i < S.arity(); ++i) {
    UnionFind uf(S.space().axis_size(i));
    for (const PointSet& component : components.components) {
      const auto proj = projection(component, i);
      for (std::size_t k = 1; k < proj.size(); ++k) {
        uf.unite(proj[0].value, proj[k].value);
      }
    }
    std::vector<std::vector<std::size_t>> classes;
    std::vector<std::size_t> slot(S.space().axis_size(i), S.space().axis_size(i));
    for (Coordinate c : projection(S, i)) {
      const std::size_t root = uf.find(c.value);
      if (slot[root] == S.space().axis_size(i)) {
        slot[root] = classes.size();
        classes.emplace_back();
      }
      classes[slot[root]].push_back(c.value);
    }
    out.classes.push_back(std::move(classes));
  }
  return out;
}

EiClasses ei_classes(const PointSet& S) {
  return ei_classes(S, related_components(S));
}

bool is_boundary(const PointSet& S, std::span<const Coordinate> B) {
  require_good(S, "is_boundary");
  const IncidenceSystem system(S);
  PinSet pins;
  for (Coordinate c : B) {
    if (!system.column_index(c) || !pins.emplace(c, Scalar(0)).second) {
      return false;
    }
  }
  if (static_cast<long>(pins.size()) != deficiency(S)) {
    return false;
  }
  return column_kernel(system, pins).empty();
}

BoundaryConstruction boundary(const PointSet& S, BoundaryCheck check) {
  require_good(S, "boundary");
  BoundaryConstruction out;
  out.components = related_components(S);
  out.classes = ei_classes(S, out.components);
  for (const PointSet& component : out.components.components) {
    out.cross_section.push_back(component[0]);
  }

  std::vector<std::size_t> first_generator;
  for (std::size_t i = 0; i < S.arity(); ++i) {
    first_generator.push_back(out.generators.size());
    for (std::size_t k = 0; k < out.classes.classes[i].size(); ++k) {
      out.generators.push_back({i, k});
    }
  }

  out.relations = Matrix(out.components.size(), out.generators.size());
  for (std::size_t alpha = 0; alpha < out.cross_section.size(); ++alpha) {
    const Point& representative = out.cross_section[alpha];
    for (std::size_t i = 0; i < S.arity(); ++i) {
      const std::size_t k = out.classes.class_of(representative.coordinate(i));
      out.relations(alpha, first_generator[i] + k) = 1;
    }
  }

  const Echelon echelon = row_reduce(out.relations);
  std::vector<bool> is_pivot(out.generators.size(), false);
  for (std::size_t p : echelon.pivots) {
    is_pivot[p] = true;
  }
  for (std::size_t g = 0; g < out.generators.size(); ++g) {
    if (!is_pivot[g]) {
      out.basis.push_back(g);
      const Generator gen = out.generators[g];
      out.boundary.push_back({gen.axis, out.classes.classes[gen.axis][gen.index].front()});
    }
  }

  if (check == BoundaryCheck::Verify) {
    if (out.boundary.size() != out.classes.total() - echelon.rank()) {
      throw InternalError("boundary size differs from generators minus relation rank");
    }
    std::set<std::pair<std::size_t, std::size_t>> hit;
    for (Coordinate c : out.boundary) {
      if (!hit.emplace(c.axis, out.classes.class_of(c)).second) {
        throw InternalError("boundary meets an E_i class twice");
      }
    }
    if (!is_boundary(S, out.boundary)) {
      throw InternalError("constructed boundary does not determine solutions uniquely");
    }
  }
  return out;
}

std::vector<Coordinate> split_boundary(const PointSet& S) {
  require_good(S, "split_boundary");
  if (is_full(S)) {
    std::vector<Coordinate> out;
    for (std::size_t i = 0; i + 1 < S.arity(); ++i) {
      out.push_back(S[0].coordinate(i));
    }
    return out;
  }
  return all_projections(split_extension(S).complement);
}

} // namespace goodsets
