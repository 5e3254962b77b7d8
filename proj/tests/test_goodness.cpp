#include "support/fixtures.hpp"

#include "goodsets/goodness.hpp"
#include "goodsets/structure.hpp"

using namespace goodsets;
using namespace fixtures;

namespace {

bool same_projections(const PointSet& a, const PointSet& b) {
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (projection(a, i) != projection(b, i)) {
      return false;
    }
  }
  return true;
}

} // namespace

TEST_SUITE("goodness") {

TEST_CASE("is_good examples") {
  CHECK(is_good(ex07()).good);
  CHECK_FALSE(is_good(ex07()).loop);

  const auto bad = is_good(e5plus());
  CHECK_FALSE(bad.good);
  REQUIRE(bad.loop);
  CHECK(bad.loop->size() == 5);
  CHECK(bad.loop->coefficients == std::vector<mpz_class>{2, -1, -1, -1, 1});
  CHECK(oracle::formal_sum_vanishes(e5plus().space(), bad.loop->support, bad.loop->coefficients));

  for (const Point& p : all_points(*digits(3, 2))) {
    CHECK(is_good(set(digits(3, 2), {p})).good);
  }
  CHECK_THROWS_AS(is_good(PointSet(digits(3, 2))), PreconditionError);
}

TEST_CASE("is_full examples") {
  CHECK(is_full(t4()));
  CHECK(is_full_by_span(t4()));
  CHECK(is_full(e5()));
  CHECK(oracle::full_by_definition(e5().space(), e5().points()));
  CHECK_FALSE(is_full(diagonal_pair()));
  CHECK_FALSE(is_full_by_span(diagonal_pair()));
  CHECK_FALSE(is_full(e5plus()));
}

TEST_CASE("extend_to_maximal examples") {
  auto plane = digits(2, 2);
  const PointSet m = extend_to_maximal(set(plane, {{0, 0}}));
  CHECK(m.points() == std::vector<Point>{{0, 0}, {0, 1}, {1, 0}});

  CHECK(extend_to_maximal(m).points() == m.points());

  auto cube = digits(3, 2);
  const PointSet m3 = extend_to_maximal(set(cube, {{0, 0, 0}}));
  CHECK(m3.size() == 4);
  CHECK(m3.contains({0, 0, 0}));
  for (const Point& p : all_points(*cube)) {
    if (!m3.contains(p)) {
      auto extended = m3.points();
      extended.push_back(p);
      CHECK_FALSE(oracle::good(*cube, extended));
    }
  }

  CHECK_THROWS_AS(extend_to_maximal(e5plus()), PreconditionError);
}

TEST_CASE("full_closure examples") {
  const PointSet f = full_closure(diagonal_pair());
  CHECK(f.points() == std::vector<Point>{{0, 0, 0}, {1, 1, 1}, {0, 0, 1}, {0, 1, 0}});
  CHECK(oracle::full_by_definition(f.space(), f.points()));
  CHECK(full_closure(t4()).points() == t4().points());
  CHECK(full_closure(e5()).points() == e5().points());
  CHECK_THROWS_AS(full_closure(e5plus()), PreconditionError);
}

TEST_CASE("split_extension examples") {
  const auto split = split_extension(diagonal_pair());
  CHECK(split.full.size() == 4);
  CHECK(split.complement.size() == 2);
  CHECK(oracle::full_by_definition(split.full.space(), split.full.points()));
  CHECK(oracle::full_by_definition(split.complement.space(), split.complement.points()));
  CHECK(same_projections(split.full, diagonal_pair()));

  auto space = make_space({{"x1", {"a", "c"}}, {"x2", {"b", "d"}}});
  const auto two = split_extension(set(space, {{0, 0}, {1, 1}}));
  CHECK(two.complement.size() == 1);
  CHECK(two.full.size() == 3);

  CHECK_THROWS_AS(split_extension(t4()), PreconditionError);
  CHECK_THROWS_AS(split_extension(e5plus()), PreconditionError);
}

TEST_CASE("associated_full_set examples") {
  const std::vector<Coordinate> missing_axis1{{1, 0}, {1, 1}, {2, 0}, {2, 1}};
  CHECK(is_boundary(diagonal_pair(), missing_axis1));
  CHECK_THROWS_AS(associated_full_set(diagonal_pair(), missing_axis1), PreconditionError);

  const auto b = split_boundary(diagonal_pair());
  const PointSet f = associated_full_set(diagonal_pair(), b);
  CHECK(oracle::full_by_definition(f.space(), f.points()));
  CHECK(same_projections(f, diagonal_pair()));
  CHECK(diagonal_pair().is_subset_of(f));

  // A comb on its own is full.
  auto space = digits(3, 3);
  const std::vector<Coordinate> teeth{{0, 0}, {0, 2}, {1, 1}, {2, 0}, {2, 1}, {2, 2}};
  const PointSet comb = boundary_comb(space, teeth);
  CHECK(comb.size() == 6 - 2);
  CHECK(oracle::full_by_definition(*space, comb.points()));
}

TEST_CASE("property: subsets of good sets are good") {
  oracle::Rng rng(31);
  for (int trial = 0; trial < 150; ++trial) {
    auto space = oracle::random_space(rng, 2 + trial % 3, 4);
    const PointSet s = oracle::random_good_set(rng, space, 8);
    REQUIRE(is_good(s).good);
    for (int k = 0; k < 5; ++k) {
      std::vector<std::size_t> idx;
      for (std::size_t j = 0; j < s.size(); ++j) {
        if (rng() % 2) {
          idx.push_back(j);
        }
      }
      if (!idx.empty()) {
        CHECK(is_good(s.subset(idx)).good);
      }
    }
  }
}

TEST_CASE("property: goodness matches an independent rank and loops are circuits") {
  oracle::Rng rng(32);
  for (int trial = 0; trial < 300; ++trial) {
    auto space = oracle::random_space(rng, 2 + trial % 3, 3);
    const PointSet s = oracle::random_points(rng, space, 1 + trial % 8);
    const auto v = is_good(s);
    CHECK(v.good == oracle::good(*space, s.points()));
    if (!v.good) {
      REQUIRE(v.loop);
      CHECK(oracle::is_circuit(*space, v.loop->support));
      for (const Point& p : v.loop->support) {
        CHECK(s.contains(p));
      }
    }
  }
}

TEST_CASE("property: fast fullness equals the span and definitional checks") {
  oracle::Rng rng(33);
  for (int trial = 0; trial < 300; ++trial) {
    auto space = oracle::random_space(rng, 2 + trial % 3, 3);
    const PointSet s = oracle::random_points(rng, space, 1 + trial % 7);
    const bool fast = is_full(s);
    CHECK(fast == is_full_by_span(s));
    CHECK(fast == oracle::full_by_definition(*space, s.points()));
  }
}

TEST_CASE("property: full_closure is idempotent with deficiency n-1") {
  oracle::Rng rng(34);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 2 + trial % 3;
    auto space = oracle::random_space(rng, n, 4);
    const PointSet s = oracle::random_good_set(rng, space, 7);
    const PointSet f = full_closure(s);
    CHECK(deficiency(f) == static_cast<long>(n) - 1);
    CHECK(full_closure(f).points() == f.points());
    CHECK(same_projections(f, s));
    CHECK(s.is_subset_of(f));
  }
}

TEST_CASE("property: split_extension postconditions") {
  oracle::Rng rng(35);
  int checked = 0;
  for (int trial = 0; trial < 2000 && checked < 100; ++trial) {
    const std::size_t n = 2 + trial % 3;
    auto space = oracle::random_space(rng, n, 4);
    const PointSet s = oracle::random_good_set(rng, space, 7);
    if (oracle::full_by_count(*space, s.points())) {
      continue;
    }
    const auto split = split_extension(s);
    CHECK(oracle::full_by_count(*space, split.full.points()));
    CHECK(oracle::full_by_count(*space, split.complement.points()));
    CHECK(same_projections(split.full, s));
    CHECK(split.complement.size() == static_cast<std::size_t>(deficiency(s) - static_cast<long>(n - 1)));
    CHECK(split.full.minus(s).same_points(split.complement));
    ++checked;
  }
  CHECK(checked == 100);
}

TEST_CASE("property: maximal extensions cover every axis") {
  oracle::Rng rng(36);
  for (int trial = 0; trial < 100; ++trial) {
    auto space = oracle::random_space(rng, 2 + trial % 3, 3);
    const PointSet s = oracle::random_good_set(rng, space, 5);
    const PointSet m = extend_to_maximal(s);
    CHECK(s.is_subset_of(m));
    for (std::size_t i = 0; i < m.arity(); ++i) {
      CHECK(projection(m, i).size() == space->axis_size(i));
    }
    CHECK(oracle::full_by_definition(*space, m.points()));
  }
}

} // TEST_SUITE
