// Acceptance run: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria (0 when everything passes).
//
// Sample sizes, seeds and wall-clock limits are fixed here; every
// comparison is exact rational equality.

#include "support/oracle.hpp"

#include "goodsets/goodness.hpp"
#include "goodsets/instance.hpp"
#include "goodsets/measures.hpp"
#include "goodsets/solver.hpp"
#include "goodsets/structure.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

using namespace goodsets;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

/// Collects the first few failure messages; any failure fails the criterion.
class Tally {
public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) {
      ++failures_;
      if (failures_ <= 3) {
        messages_ += (messages_.empty() ? "" : "; ") + what;
      }
    }
  }
  void count(const std::string& name, std::size_t value) {
    counts_ += (counts_.empty() ? "" : ", ") + name + "=" + std::to_string(value);
  }
  Outcome outcome() const {
    Outcome o;
    o.pass = failures_ == 0 && checks_ > 0;
    std::ostringstream s;
    s << checks_ << " checks";
    if (!counts_.empty()) {
      s << ", " << counts_;
    }
    if (failures_) {
      s << ", " << failures_ << " failed: " << messages_;
    }
    o.detail = s.str();
    return o;
  }

private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::string messages_;
  std::string counts_;
};

PointSet subset_of(const PointSet& s, std::uint64_t mask) {
  std::vector<std::size_t> idx;
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (mask >> j & 1U) {
      idx.push_back(j);
    }
  }
  return s.subset(idx);
}

/// Masks of all full subsets of a small good set.
std::vector<std::uint64_t> full_masks(const PointSet& s) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << s.size()); ++mask) {
    if (oracle::full_by_count(s.space(), subset_of(s, mask).points())) {
      out.push_back(mask);
    }
  }
  return out;
}

bool same_projections(const PointSet& a, const PointSet& b) {
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (projection(a, i) != projection(b, i)) {
      return false;
    }
  }
  return true;
}

FunctionTable random_function(oracle::Rng& rng, const PointSet& s) {
  std::vector<Scalar> v;
  for (std::size_t k = 0; k < s.size(); ++k) {
    v.push_back(oracle::random_rational(rng));
  }
  return FunctionTable(s, v);
}

bool reproduces(const Decomposition& d, const FunctionTable& f) {
  for (std::size_t k = 0; k < f.domain().size(); ++k) {
    if (evaluate(d, f.domain()[k]) != f[k]) {
      return false;
    }
  }
  return true;
}

// 1 ------------------------------------------------------------------------
Outcome doubling_values() {
  Tally t;
  for (std::size_t depth = 1; depth <= 6; ++depth) {
    const Instance inst = doubling_instance(depth);
    const auto r = solve_direct(inst.points, inst.function(), *inst.pins);
    t.expect(r.verdict == Verdict::Unique, "depth " + std::to_string(depth) + " not unique");
    if (r.verdict != Verdict::Unique) {
      continue;
    }
    const Space& sp = *inst.space;
    const auto u = [&](const std::string& axis, const std::string& label) {
      const std::size_t i = *sp.find_axis(axis);
      return r.decomposition.at({i, *sp.find_value(i, label)});
    };
    t.expect(u("z", "z0") == 1, "W(z0) != 1");
    t.expect(u("x", "x0") == 0 && u("y", "y0") == 0, "pins not honoured");
    mpz_class power = 1;
    for (std::size_t n = 1; n <= depth; ++n) {
      const std::string k = std::to_string(n);
      t.expect(u("x", "x" + k) == -power, "U(x" + k + ") wrong at depth " + std::to_string(depth));
      t.expect(u("y", "y" + k) == -power, "V(y" + k + ") wrong at depth " + std::to_string(depth));
      power *= 2;
      t.expect(u("z", "z" + k) == power, "W(z" + k + ") wrong at depth " + std::to_string(depth));
    }
  }
  return t.outcome();
}

// 2 ------------------------------------------------------------------------
Outcome t4_distances() {
  Tally t;
  auto space = make_uniform_space(3, {"0", "1"});
  const PointSet t4(space, {{1, 0, 1}, {1, 1, 0}, {0, 1, 1}, {0, 0, 0}});
  std::size_t pairs = 0;
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = a + 1; b < 4; ++b) {
      const auto g = geodesic(t4, t4[a], t4[b]);
      t.expect(g && g->length() == 4 && g->points.same_points(t4), "pair " + std::to_string(a) + "," + std::to_string(b));
      t.expect(oracle::minimal_full_supersets(*space, t4.points(), t4[a], t4[b]).size() == 1,
               "brute force not unique");
      ++pairs;
    }
  }
  t.count("pairs", pairs);
  return t.outcome();
}

// 3 ------------------------------------------------------------------------
Outcome five_point_loop() {
  Tally t;
  auto space = make_uniform_space(3, {"0", "1"});
  const PointSet e5(space, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  t.expect(is_good(e5).good, "four-point set not good");
  t.expect(oracle::good(*space, e5.points()), "oracle: four-point set not good");
  const PointSet plus = e5.with({1, 1, 1});
  const auto v = is_good(plus);
  t.expect(!v.good && v.loop.has_value(), "extended set reported good");
  if (v.loop) {
    t.expect(v.loop->size() == 5, "loop is not five points");
    t.expect(verify_circuit(*space, *v.loop), "library re-verification failed");
    t.expect(oracle::formal_sum_vanishes(*space, v.loop->support, v.loop->coefficients), "formal sum nonzero");
    t.expect(oracle::is_circuit(*space, v.loop->support), "loop not minimal");
    t.expect(v.loop->coefficients == std::vector<mpz_class>{2, -1, -1, -1, 1}, "unexpected coefficients");
  }
  return t.outcome();
}

// 4 ------------------------------------------------------------------------
Outcome fullness_equivalence() {
  Tally t;
  oracle::Rng rng(1004);
  std::size_t full = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 2 + trial % 3;
    auto space = oracle::random_space(rng, n, 4);
    const PointSet s = trial % 2 ? oracle::random_points(rng, space, 1 + rng() % 8)
                                 : oracle::random_good_set(rng, space, 8);
    const bool fast = is_full(s);
    t.expect(fast == is_full_by_span(s), "fast path differs from span check");
    t.expect(fast == oracle::full_by_definition(*space, s.points()), "fast path differs from oracle");
    full += fast ? 1 : 0;
  }
  t.count("instances", 1000);
  t.count("full", full);
  return t.outcome();
}

// 5 ------------------------------------------------------------------------
Outcome geodesic_uniqueness() {
  Tally t;
  oracle::Rng rng(1005);
  std::size_t related_pairs = 0;
  std::size_t unrelated_pairs = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 3;
    auto space = oracle::random_space(rng, n, 4);
    const PointSet s = trial % 2 ? oracle::random_good_set(rng, space, 10) : oracle::random_full_set(rng, space, 5);
    if (s.size() > 10) {
      --trial;
      continue;
    }
    const auto masks = full_masks(s);
    for (std::size_t a = 0; a < s.size(); ++a) {
      for (std::size_t b = a + 1; b < s.size(); ++b) {
        const std::uint64_t need = (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
        std::size_t best = s.size() + 1;
        std::size_t count = 0;
        std::uint64_t best_mask = 0;
        for (std::uint64_t m : masks) {
          if ((m & need) != need) {
            continue;
          }
          const auto size = static_cast<std::size_t>(__builtin_popcountll(m));
          if (size < best) {
            best = size;
            count = 0;
            best_mask = m;
          }
          count += size == best ? 1 : 0;
        }
        const auto g = geodesic(s, s[a], s[b]);
        if (best > s.size()) {
          t.expect(!g, "library found a geodesic between unrelated points");
          ++unrelated_pairs;
          continue;
        }
        t.expect(count == 1, "more than one full subset at minimal size");
        t.expect(g && g->points.same_points(subset_of(s, best_mask)), "library geodesic differs");
        ++related_pairs;
      }
    }
  }
  t.count("sets", 200);
  t.count("related_pairs", related_pairs);
  t.count("unrelated_pairs", unrelated_pairs);
  t.expect(related_pairs >= 200, "too few related pairs sampled");
  return t.outcome();
}

// 6 ------------------------------------------------------------------------
Outcome intersection_property() {
  Tally t;
  oracle::Rng rng(1006);
  std::size_t pairs = 0;
  std::size_t proper = 0;
  for (int trial = 0; pairs < 500 || trial < 50; ++trial) {
    if (trial > 5000) {
      break;
    }
    auto space = oracle::random_space(rng, 2 + trial % 3, 4);
    const PointSet s = oracle::random_full_set(rng, space, 4);
    if (s.size() > 10) {
      continue;
    }
    const auto masks = full_masks(s);
    const std::set<std::uint64_t> is_full_mask(masks.begin(), masks.end());
    for (std::size_t i = 0; i < masks.size(); ++i) {
      for (std::size_t j = i + 1; j < masks.size(); ++j) {
        const std::uint64_t meet = masks[i] & masks[j];
        if (meet == 0 || !is_full_mask.contains(masks[i] | masks[j])) {
          continue;
        }
        const PointSet m = subset_of(s, meet);
        t.expect(is_full(m), "intersection not full");
        t.expect(oracle::full_by_definition(*space, m.points()), "oracle: intersection not full");
        ++pairs;
        proper += (meet != masks[i] && meet != masks[j]) ? 1 : 0;
      }
    }
  }
  t.count("pairs", pairs);
  t.count("non_nested", proper);
  t.expect(pairs >= 500, "fewer than 500 pairs");
  return t.outcome();
}

// 7 ------------------------------------------------------------------------
Outcome solver_round_trip() {
  Tally t;
  oracle::Rng rng(1007);
  for (int trial = 0; trial < 500; ++trial) {
    auto space = oracle::random_space(rng, 2 + trial % 3, 4);
    const PointSet s = oracle::random_full_set(rng, space, 5);
    Decomposition d(space->arity());
    for (Coordinate c : all_projections(s)) {
      d.set(c, oracle::random_rational(rng));
    }
    std::vector<Scalar> values;
    for (const Point& p : s) {
      values.push_back(evaluate(d, p));
    }
    const FunctionTable f(s, values);

    PinSet pins;
    for (Coordinate c : boundary(s).boundary) {
      pins[c] = d.at(c);
    }
    const auto r = solve_direct(s, f, pins);
    t.expect(r.verdict == Verdict::Unique && r.decomposition == d, "round trip failed");

    const Point base = s[rng() % s.size()];
    const auto via = solve_via_geodesics(s, f, base);
    const auto direct = solve_direct(s, f, base_pins(base));
    t.expect(via.verdict == Verdict::Unique && via.decomposition == direct.decomposition,
             "geodesic procedure differs from direct solve");
  }
  t.count("sets", 500);
  return t.outcome();
}

// 8 ------------------------------------------------------------------------
Outcome boundary_contract() {
  Tally t;
  oracle::Rng rng(1008);
  for (int trial = 0; trial < 200; ++trial) {
    auto space = oracle::random_space(rng, 2 + trial % 3, 4);
    const PointSet s = oracle::random_good_set(rng, space, 9);
    const auto bc = boundary(s);

    std::set<std::pair<std::size_t, std::size_t>> hit;
    for (Coordinate c : bc.boundary) {
      t.expect(hit.emplace(c.axis, bc.classes.class_of(c)).second, "(a) class met twice");
    }

    PinSet values;
    for (Coordinate c : bc.boundary) {
      values[c] = oracle::random_rational(rng);
    }
    const FunctionTable f = random_function(rng, s);
    const auto r = solve_direct(s, f, values);
    t.expect(r.verdict == Verdict::Unique && reproduces(r.decomposition, f), "(b) not unique");
    const auto wb = solve_with_boundary(s, f, values);
    t.expect(wb.verdict == Verdict::Unique && wb.decomposition == r.decomposition, "(b) boundary route differs");

    for (std::size_t k = 0; k < bc.boundary.size(); ++k) {
      PinSet fewer = values;
      fewer.erase(bc.boundary[k]);
      t.expect(solve_direct(s, f, fewer).verdict == Verdict::Underdetermined, "(c) still unique");
    }
  }
  t.count("sets", 200);
  return t.outcome();
}

// 9 ------------------------------------------------------------------------
Outcome simplicial_equivalence() {
  Tally t;
  oracle::Rng rng(1009);
  const std::vector<std::vector<std::size_t>> shapes{{2, 2}, {2, 3}, {3, 3}, {2, 4}, {3, 4},
                                                     {2, 6}, {2, 2, 2}, {2, 2, 3}};
  std::size_t extreme = 0;
  std::size_t measures = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const auto& shape = shapes[trial % shapes.size()];
    std::vector<Axis> axes;
    for (std::size_t i = 0; i < shape.size(); ++i) {
      Axis a{"a" + std::to_string(i), {}};
      for (std::size_t v = 0; v < shape[i]; ++v) {
        a.values.push_back(std::to_string(v));
      }
      axes.push_back(std::move(a));
    }
    auto space = make_space(std::move(axes));
    const std::size_t omega = oracle::all_space_points(*space).size();
    const PointSet support = oracle::random_points(rng, space, 1 + rng() % omega);
    std::vector<Scalar> weights;
    Scalar total = 0;
    for (std::size_t k = 0; k < support.size(); ++k) {
      weights.emplace_back(1 + rng() % 5);
      total += weights.back();
    }
    for (auto& w : weights) {
      w /= total;
    }
    const FiniteMeasure mu(support, weights);
    const auto v = is_simplicial(mu);
    const bool brute = oracle::extreme_by_enumeration(*space, support.points(), weights);
    t.expect(v.simplicial == brute, "verdict differs from vertex enumeration");
    ++measures;
    extreme += brute ? 1 : 0;
    if (!v.simplicial) {
      t.expect(v.certificate.has_value(), "missing certificate");
      if (!v.certificate) {
        continue;
      }
      const auto target = oracle::marginals(support.points(), weights, space->arity());
      for (int sign : {1, -1}) {
        // Apply the perturbation independently of the library.
        std::map<Point, Scalar> moved;
        for (std::size_t k = 0; k < support.size(); ++k) {
          moved[support[k]] = weights[k];
        }
        const auto& loop = v.certificate->loop;
        for (std::size_t k = 0; k < loop.size(); ++k) {
          moved[loop.support[k]] += sign * v.certificate->epsilon * Scalar(loop.coefficients[k]);
        }
        std::vector<Point> pts;
        std::vector<Scalar> ws;
        bool nonnegative = true;
        for (const auto& [p, w] : moved) {
          nonnegative &= w >= 0;
          pts.push_back(p);
          ws.push_back(w);
        }
        t.expect(nonnegative, "perturbation leaves the simplex");
        t.expect(oracle::marginals(pts, ws, space->arity()) == target, "perturbation changes marginals");
      }
    }
  }
  t.count("measures", measures);
  t.count("extreme", extreme);
  return t.outcome();
}

// 10 -----------------------------------------------------------------------
Outcome split_property() {
  Tally t;
  oracle::Rng rng(1010);
  std::size_t checked = 0;
  for (int trial = 0; checked < 200 && trial < 5000; ++trial) {
    const std::size_t n = 2 + trial % 3;
    auto space = oracle::random_space(rng, n, 4);
    const PointSet s = oracle::random_good_set(rng, space, 8);
    if (oracle::full_by_count(*space, s.points())) {
      continue;
    }
    const auto split = split_extension(s);
    t.expect(oracle::full_by_definition(*space, split.full.points()), "F not full");
    t.expect(oracle::full_by_definition(*space, split.complement.points()), "F minus S not full");
    t.expect(same_projections(split.full, s), "projections changed");
    t.expect(s.is_subset_of(split.full) && split.full.minus(s).same_points(split.complement), "F does not extend S");
    t.expect(static_cast<long>(split.complement.size()) == oracle::deficiency(*space, s.points()) - static_cast<long>(n - 1),
             "wrong number of added points");
    ++checked;
  }
  t.count("sets", checked);
  t.expect(checked >= 200, "fewer than 200 sets");
  return t.outcome();
}

// 11 -----------------------------------------------------------------------
Outcome bipartite_consistency() {
  Tally t;
  oracle::Rng rng(1011);
  std::size_t good = 0;
  std::size_t total = 0;
  for (int trial = 0; trial < 400; ++trial) {
    auto space = oracle::random_space(rng, 2, 5);
    const PointSet s = trial % 2 ? oracle::random_points(rng, space, 1 + rng() % 8)
                                 : oracle::random_good_set(rng, space, 8);
    const auto graph = oracle::bipartite_components(*space, s.points());
    t.expect(is_good(s).good == graph.forest, "goodness differs from acyclicity");
    ++total;
    if (!graph.forest) {
      continue;
    }
    const auto parts = related_components(s);
    bool same = parts.size() == graph.groups.size();
    for (std::size_t c = 0; same && c < parts.size(); ++c) {
      same = parts.components[c].points() == s.subset(graph.groups[c]).points();
    }
    t.expect(same, "components differ from graph components");
    ++good;
  }
  t.count("instances", total);
  t.count("forests", good);
  t.expect(good >= 200, "fewer than 200 good instances");
  return t.outcome();
}

struct Criterion {
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

} // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"doubling example depths 1..6: exact values", 1.0, doubling_values},
      {"T4: every pair joined by the whole set, length 4", 1.0, t4_distances},
      {"four-point set good; adding (1,1,1) gives a verified 5-point loop", 1.0, five_point_loop},
      {"fast fullness == span fullness on 1000 random instances", 60.0, fullness_equivalence},
      {"unique geodesic per related pair on 200 random good sets", 120.0, geodesic_uniqueness},
      {"A, B, A u B full => A n B full on >= 500 pairs", 60.0, intersection_property},
      {"solver round trip and geodesic == direct on 500 full sets", 120.0, solver_round_trip},
      {"boundary contract (a)(b)(c) on 200 random good sets", 120.0, boundary_contract},
      {"simplicial verdict == vertex enumeration, |Omega| <= 12", 120.0, simplicial_equivalence},
      {"split extension postconditions on 200 good non-full sets", 120.0, split_property},
      {"n = 2: components == graph components, good == acyclic", 60.0, bipartite_consistency},
  };

  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto& c = criteria[k];
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < c.limit_seconds;
    const bool pass = o.pass && in_time;
    failed += pass ? 0 : 1;
    std::printf("AC%-2zu %s  %s  [%.3f s / limit %.0f s%s]  %s\n", k + 1, pass ? "PASS" : "FAIL", c.name, seconds,
                c.limit_seconds, in_time ? "" : ", TOO SLOW", o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed;
}
