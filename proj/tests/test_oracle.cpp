#include <doctest.h>

#include <random>

#include "pogroup/error.hpp"
#include "pogroup/oracle.hpp"
#include "support.hpp"

using namespace pogroup;
using testing::downset;

TEST_CASE("empty and whole downsets") {
  GridBox box = GridBox::cube(2, -3, 3);
  GridSet empty(box);
  GridSet whole = GridSet::from_predicate(box, [](const IntVec&) { return true; });
  for (CoordSet tau : orthant_faces(2)) {
    CHECK(oracle::grid_localize(empty, tau).empty());
    CHECK(oracle::grid_global_support(empty, tau).empty());
    CHECK(oracle::grid_local_support(empty, tau).empty());
    CHECK(oracle::grid_primary_component(empty, tau).empty());
    GridSet ls = oracle::grid_local_support(whole, tau);
    if (tau == CoordSet::full(2))
      CHECK(ls == whole);
    else
      CHECK(ls.empty());
  }
  CHECK(oracle::grid_canonical_decomposition(empty).empty());
  auto c = oracle::grid_canonical_decomposition(whole);
  REQUIRE(c.size() == 1);
  CHECK(c[0].face == CoordSet::full(2));
}

TEST_CASE("comparison reports the first mismatch") {
  auto d = testing::e1();
  GridBox box = oracle::margin_box(d);
  GridSet g = oracle::grid_from_downset(d, box);
  CHECK(oracle::compare(d, g).equal);
  auto mutated = downset(2, {{{0, 0}, {1}}, {{2, 0}, {}}});
  auto c = oracle::compare(mutated, oracle::grid_from_downset(d, oracle::margin_box(mutated)));
  CHECK_FALSE(c.equal);
  REQUIRE(c.mismatch);
  CHECK(*c.mismatch == IntVec{2, -1});
  CHECK_FALSE(member(*c.mismatch, d));
  CHECK(member(*c.mismatch, mutated));
}

TEST_CASE("margin rule") {
  auto d = testing::e2();
  GridBox box = oracle::margin_box(d);
  CHECK(box.lo() == IntVec{-1, -1});
  CHECK(box.hi() == IntVec{3, 3});
  try {
    oracle::grid_from_downset(d, GridBox::cube(2, -1, 2));
    FAIL("expected BoxTooSmall");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BoxTooSmall);
  }
}

TEST_CASE("property: margin 1 and margin 3 give the same verdicts") {
  std::mt19937 rng(41);
  for (int t = 0; t < 100; ++t) {
    std::size_t n = static_cast<std::size_t>(testing::uniform(rng, 1, 3));
    auto d = testing::random_downset(rng, n);
    GridBox small = oracle::margin_box(d, 1), large = oracle::margin_box(d, 3);
    GridSet gs = oracle::grid_from_downset(d, small), gl = oracle::grid_from_downset(d, large);
    for (CoordSet tau : orthant_faces(n)) {
      GridSet ls = oracle::grid_local_support(gs, tau), ll = oracle::grid_local_support(gl, tau);
      // Restrict the large answer to the small box.
      GridSet restricted = GridSet::from_predicate(small, [&](const IntVec& q) { return ll.test(q); });
      CHECK(restricted == ls);
    }
    auto ds = oracle::grid_canonical_decomposition(gs), dl = oracle::grid_canonical_decomposition(gl);
    REQUIRE(ds.size() == dl.size());
    for (std::size_t k = 0; k < ds.size(); ++k)
      CHECK(ds[k].face == dl[k].face);
  }
}

TEST_CASE("property: grid decomposition reassembles D") {
  std::mt19937 rng(42);
  for (int t = 0; t < 100; ++t) {
    std::size_t n = static_cast<std::size_t>(testing::uniform(rng, 1, 3));
    auto d = testing::random_downset(rng, n);
    GridSet g = oracle::grid_from_downset(d, oracle::margin_box(d));
    GridSet cover(g.box()), supports(g.box());
    for (const auto& c : oracle::grid_canonical_decomposition(g)) {
      cover = cover | c.component;
      supports = supports | c.support;
      CHECK(c.component.subset_of(g));
    }
    CHECK(cover == g);
    CHECK(supports == g);
  }
}
