#include <doctest.h>

#include <random>

#include "pogroup/error.hpp"
#include "pogroup/oracle.hpp"
#include "pogroup/region.hpp"
#include "support.hpp"

using namespace pogroup;

namespace {

constexpr auto Z = EndpointMode::Integer;
constexpr auto Q = EndpointMode::Rational;

std::optional<Rational> inf() { return std::nullopt; }

GeneralizedBox box2(std::optional<Rational> xl, std::optional<Rational> xh, std::optional<Rational> yl,
                    std::optional<Rational> yh, EndpointMode mode = Z) {
  return {closed_interval(xl, xh, mode), closed_interval(yl, yh, mode)};
}

/// Test coordinates for a family of regions: every finite endpoint, the
/// midpoints between neighbours and one step beyond each end. Over Z the
/// integers spanning the endpoints with margin 1.
std::vector<RatVec> probe_points(const std::vector<Region>& regions) {
  const std::size_t n = regions[0].rank();
  const bool integral = regions[0].mode() == Z;
  std::vector<std::vector<Rational>> axes(n);
  for (const auto& r : regions) {
    auto e = finite_endpoints(r);
    for (std::size_t i = 0; i < n; ++i)
      axes[i].insert(axes[i].end(), e[i].begin(), e[i].end());
  }
  for (auto& a : axes) {
    a.push_back(0);
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    std::vector<Rational> out;
    if (integral) {
      for (Rational v = floor(a.front()) - 1; v <= ceil(a.back()) + 1; v += 1)
        out.push_back(v);
    } else {
      out.push_back(a.front() - 1);
      for (std::size_t k = 0; k < a.size(); ++k) {
        out.push_back(a[k]);
        if (k + 1 < a.size())
          out.push_back((a[k] + a[k + 1]) / 2);
      }
      out.push_back(a.back() + 1);
    }
    a = out;
  }
  std::vector<RatVec> points{RatVec{}};
  for (const auto& a : axes) {
    std::vector<RatVec> next;
    for (const auto& p : points)
      for (const auto& v : a) {
        RatVec q = p;
        q.push_back(v);
        next.push_back(q);
      }
    points = next;
  }
  return points;
}

} // namespace

TEST_CASE("difference of two boxes") {
  Region a(2, Z, {box2(inf(), 1, inf(), 0)});
  Region b(2, Z, {box2(inf(), 0, inf(), inf())});
  Region expected(2, Z, {box2(1, 1, inf(), 0)});
  Region diff = region_difference(a, b);
  CHECK(diff == expected);
  CHECK(region_equals(diff, expected));
  GridSet grid = oracle::grid_from_region(diff, GridBox::cube(2, -4, 4));
  CHECK(grid.count() == 5);
  CHECK(grid.test(IntVec{1, -4}));
  CHECK(grid.test(IntVec{1, 0}));
  CHECK_FALSE(grid.test(IntVec{1, 1}));
}

TEST_CASE("identities") {
  Region a(2, Z, {box2(inf(), 1, inf(), 0), box2(-2, 3, 2, 2)});
  Region empty(2, Z);
  CHECK(region_union(a, empty) == a);
  CHECK(region_is_empty(region_difference(a, a)));
  CHECK(region_equals(empty, empty));
}

TEST_CASE("integer intervals merge") {
  Region a(1, Z, {{closed_interval(Rational(0), Rational(1), Z)}});
  Region b(1, Z, {{closed_interval(Rational(0), Rational(0), Z)}, {closed_interval(Rational(1), Rational(1), Z)}});
  CHECK(region_equals(a, b));
  CHECK(a == b);
  CHECK(b.boxes().size() == 1);
}

TEST_CASE("removing a corner point changes the region") {
  Region a(2, Z, {box2(inf(), 2, inf(), 2)});
  Region pt(2, Z, {box2(2, 2, 2, 2)});
  CHECK_FALSE(region_equals(a, region_difference(a, pt)));
}

TEST_CASE("down-closure examples") {
  Region a(2, Z, {box2(1, 1, inf(), 0)});
  CHECK(down_closure(a) == Region(2, Z, {box2(inf(), 1, inf(), 0)}));
  CHECK(down_closure(Region(2, Z)).empty());
  Region closed(2, Z, {box2(inf(), 1, inf(), 0), box2(inf(), -1, inf(), 4)});
  CHECK(down_closure(closed) == closed);
  GridBox box = GridBox::cube(2, -4, 4);
  CHECK(oracle::grid_from_region(down_closure(a), box) ==
        oracle::grid_down_closure(oracle::grid_from_region(a, box)));
}

TEST_CASE("membership") {
  Region a(2, Z, {box2(inf(), 1, inf(), 0)});
  CHECK(a.member({0, 0}));
  CHECK_FALSE(a.member({2, 0}));
  Region open(1, Q, {{Interval{Cut::after_value(0), Cut::before(1)}}});
  CHECK(open.member({Rational(1, 2)}));
  CHECK_FALSE(open.member({Rational(0)}));
  CHECK_FALSE(open.member({Rational(1)}));
  Region closed(1, Q, {{closed_interval(Rational(0), Rational(1), Q)}});
  CHECK(closed.member({Rational(1)}));
  CHECK_FALSE(region_equals(open, closed));
  CHECK(region_subset(open, closed));
}

TEST_CASE("errors") {
  Region a(2, Z), b(1, Z), c(2, Q);
  try {
    region_union(a, b);
    FAIL("expected RankMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::RankMismatch);
  }
  try {
    region_union(a, c);
    FAIL("expected ModeMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ModeMismatch);
  }
}

TEST_CASE("property: Boolean laws hold pointwise") {
  std::mt19937 rng(21);
  for (EndpointMode mode : {Z, Q})
    for (int t = 0; t < 120; ++t) {
      std::size_t n = static_cast<std::size_t>(testing::uniform(rng, 1, 3));
      Region a = testing::random_region(rng, n, mode), b = testing::random_region(rng, n, mode),
             c = testing::random_region(rng, n, mode);
      Region u = region_union(a, b), i = region_intersect(a, b), d = region_difference(a, b);
      for (const auto& p : probe_points({a, b, c})) {
        CHECK(u.member(p) == (a.member(p) || b.member(p)));
        CHECK(i.member(p) == (a.member(p) && b.member(p)));
        CHECK(d.member(p) == (a.member(p) && !b.member(p)));
      }
      CHECK(region_union(region_union(a, b), c) == region_union(a, region_union(b, c)));
      CHECK(region_intersect(a, region_union(b, c)) ==
            region_union(region_intersect(a, b), region_intersect(a, c)));
      CHECK(region_difference(a, region_union(b, c)) ==
            region_intersect(region_difference(a, b), region_difference(a, c)));
      CHECK(region_difference(a, region_intersect(b, c)) ==
            region_union(region_difference(a, b), region_difference(a, c)));
      CHECK(region_equals(u, region_union(b, a)));
    }
}

TEST_CASE("property: normal form is a function of the point set") {
  std::mt19937 rng(22);
  for (EndpointMode mode : {Z, Q})
    for (int t = 0; t < 150; ++t) {
      std::size_t n = static_cast<std::size_t>(testing::uniform(rng, 1, 3));
      Region a = testing::random_region(rng, n, mode, 6);
      CHECK(Region(n, mode, a.boxes()) == a);
      // The same set, presented through a split into pieces.
      Region b = testing::random_region(rng, n, mode);
      Region split = region_union(region_intersect(a, b), region_difference(a, b));
      CHECK(split == a);
      for (std::size_t k = 0; k + 1 < a.boxes().size(); ++k)
        for (std::size_t l = k + 1; l < a.boxes().size(); ++l) {
          GeneralizedBox meet;
          for (std::size_t i = 0; i < n; ++i)
            meet.push_back({std::max(a.boxes()[k][i].lo, a.boxes()[l][i].lo),
                            std::min(a.boxes()[k][i].hi, a.boxes()[l][i].hi)});
          CHECK(box_empty(meet));
        }
    }
}

TEST_CASE("property: down-closure") {
  std::mt19937 rng(23);
  for (EndpointMode mode : {Z, Q})
    for (int t = 0; t < 150; ++t) {
      std::size_t n = static_cast<std::size_t>(testing::uniform(rng, 1, 3));
      Region a = testing::random_region(rng, n, mode), b = testing::random_region(rng, n, mode);
      Region da = down_closure(a);
      CHECK(down_closure(da) == da);
      CHECK(region_subset(a, da));
      CHECK(region_subset(da, down_closure(region_union(a, b))));
      CHECK(down_closure(region_union(a, b)) == region_union(da, down_closure(b)));
      if (mode == Z) {
        IntVec lo(n, -5), hi(n, 5);
        GridBox box(lo, hi);
        // Below the box everything is inherited from its lower faces, so
        // the grid closure matches inside the box.
        CHECK(oracle::grid_from_region(da, box) == oracle::grid_down_closure(oracle::grid_from_region(a, box)));
      }
    }
}
