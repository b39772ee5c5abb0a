#pragma once

#include <functional>
#include <random>
#include <vector>

#include "pogroup/cone_geometry.hpp"
#include "pogroup/downset.hpp"
#include "pogroup/grid_module.hpp"
#include "pogroup/hull.hpp"
#include "pogroup/region.hpp"

namespace testing {

using namespace pogroup;

inline std::int64_t uniform(std::mt19937& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline DownsetExpr downset(std::size_t n, const std::vector<std::pair<IntVec, std::vector<int>>>& pieces) {
  DownsetExpr d{ConePresentation::orthant_int(n), {}};
  for (const auto& [apex, face] : pieces)
    d.pieces.push_back({to_rational(apex), CoordSet::from_indices(face), {}});
  return normalize(d);
}

/// D = {x<=0} ∪ {x<=1, y<=0}.
inline DownsetExpr e1() { return downset(2, {{{0, 0}, {1}}, {{1, 0}, {}}}); }
/// D = {y<=0} ∪ {x<=0} ∪ {x<=2, y<=2}.
inline DownsetExpr e2() { return downset(2, {{{0, 0}, {0}}, {{0, 0}, {1}}, {{2, 2}, {}}}); }

inline DownsetExpr random_downset(std::mt19937& rng, std::size_t n, std::size_t max_pieces = 5,
                                  std::int64_t range = 3) {
  DownsetExpr d{ConePresentation::orthant_int(n), {}};
  std::size_t count = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(max_pieces)));
  for (std::size_t k = 0; k < count; ++k) {
    CoprincipalPiece p;
    // Bias towards small faces so that bounded pieces dominate.
    for (std::size_t i = 0; i < n; ++i) {
      p.apex.push_back(Rational(static_cast<long>(uniform(rng, -range, range))));
      if (uniform(rng, 0, 3) == 0)
        p.face = p.face.with(i);
    }
    d.pieces.push_back(p);
  }
  return normalize(d);
}

inline Rational random_rational(std::mt19937& rng, std::int64_t range) {
  static const long dens[] = {1, 1, 2, 3};
  long den = dens[uniform(rng, 0, 3)];
  Rational r(static_cast<long>(uniform(rng, -range * den, range * den)), den);
  r.canonicalize();
  return r;
}

/// A random region; rational mode draws half-integer endpoints with random openness.
inline Region random_region(std::mt19937& rng, std::size_t n, EndpointMode mode, std::size_t max_boxes = 4,
                            std::int64_t range = 3) {
  std::vector<GeneralizedBox> boxes;
  std::size_t count = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(max_boxes)));
  for (std::size_t k = 0; k < count; ++k) {
    GeneralizedBox b;
    for (std::size_t i = 0; i < n; ++i) {
      std::optional<Rational> lo, hi;
      if (uniform(rng, 0, 3) != 0)
        lo = mode == EndpointMode::Integer ? Rational(static_cast<long>(uniform(rng, -range, range)))
                                           : random_rational(rng, range);
      if (uniform(rng, 0, 3) != 0)
        hi = mode == EndpointMode::Integer ? Rational(static_cast<long>(uniform(rng, -range, range)))
                                           : random_rational(rng, range);
      if (lo && hi && *hi < *lo)
        std::swap(lo, hi);
      Interval iv = closed_interval(lo, hi, mode);
      if (mode == EndpointMode::Rational) {
        if (lo && uniform(rng, 0, 1))
          iv.lo = Cut::after_value(*lo);
        if (hi && uniform(rng, 0, 1))
          iv.hi = Cut::before(*hi);
      }
      b.push_back(iv);
    }
    boxes.push_back(b);
  }
  return Region(n, mode, boxes);
}

inline Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, std::int64_t range = 2) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = static_cast<long>(uniform(rng, -range, range));
  return m;
}

inline Matrix random_invertible(std::mt19937& rng, std::size_t n) {
  for (;;) {
    Matrix m = random_matrix(rng, n, n);
    if (rank(m) == n)
      return m;
  }
}

inline Matrix inverse(const Matrix& m) { return *solve_in_basis(m, Matrix::identity(m.rows())); }

/// A random hull presentation over Z^2 on the given box: up to `max_hull`
/// downsets with apexes below box.hi, generators in their union.
inline HullPresentation random_hull(std::mt19937& rng, const GridBox& box, std::size_t max_hull,
                                    std::size_t max_generators) {
  const std::size_t n = box.rank();
  HullPresentation h;
  h.box = box;
  std::size_t k = static_cast<std::size_t>(uniform(rng, 1, static_cast<std::int64_t>(max_hull)));
  for (std::size_t j = 0; j < k; ++j) {
    DownsetExpr d{ConePresentation::orthant_int(n), {}};
    std::size_t pieces = static_cast<std::size_t>(uniform(rng, 1, 3));
    for (std::size_t p = 0; p < pieces; ++p) {
      CoprincipalPiece piece;
      for (std::size_t i = 0; i < n; ++i) {
        piece.apex.push_back(Rational(static_cast<long>(uniform(rng, box.lo()[i], box.hi()[i] - 1))));
        if (uniform(rng, 0, 3) == 0)
          piece.face = piece.face.with(i);
      }
      d.pieces.push_back(piece);
    }
    h.hull.push_back(normalize(d));
  }
  std::size_t gens = static_cast<std::size_t>(uniform(rng, 1, static_cast<std::int64_t>(max_generators)));
  for (std::size_t g = 0; g < gens; ++g) {
    HullGenerator gen;
    for (std::size_t i = 0; i < n; ++i)
      gen.degree.push_back(uniform(rng, box.lo()[i], box.hi()[i] - 1));
    for (std::size_t j = 0; j < k; ++j)
      gen.coeffs.push_back(member(gen.degree, h.hull[j]) ? Rational(static_cast<long>(uniform(rng, -2, 2)))
                                                          : Rational(0));
    h.generators.push_back(gen);
  }
  return h;
}

/// Same module with a random change of basis at every degree.
inline GridModule scramble(std::mt19937& rng, const GridModule& m) {
  const GridBox& box = m.box();
  std::vector<Matrix> a, a_inv;
  for (std::size_t k = 0; k < box.size(); ++k) {
    a.push_back(random_invertible(rng, m.dim(k)));
    a_inv.push_back(inverse(a.back()));
  }
  std::vector<std::vector<Matrix>> maps(box.size(), std::vector<Matrix>(box.rank()));
  for (std::size_t k = 0; k < box.size(); ++k)
    for (std::size_t i = 0; i < box.rank(); ++i) {
      std::size_t up = box.step(k, i);
      if (up < box.size())
        maps[k][i] = a[up] * m.map(k, i) * a_inv[k];
    }
  return GridModule(box, m.dims(), maps);
}

inline std::vector<std::pair<IntVec, RatVec>> random_elements(std::mt19937& rng, const GridModule& m,
                                                              std::size_t count) {
  std::vector<std::pair<IntVec, RatVec>> out;
  for (std::size_t c = 0; c < count; ++c) {
    std::size_t k = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(m.box().size()) - 1));
    RatVec v(m.dim(k));
    for (auto& x : v)
      x = static_cast<long>(uniform(rng, -2, 2));
    out.emplace_back(m.box().point(k), v);
  }
  return out;
}

/// A random module on a rank-2 box with per-degree dimension at most 3:
/// a hull module, sometimes divided by a random submodule, with scrambled bases.
inline GridModule random_module(std::mt19937& rng, const GridBox& box) {
  GridModule m = realize_module(random_hull(rng, box, 3, 3));
  if (uniform(rng, 0, 1) == 1)
    m = quotient_module(m, generated_submodule(m, random_elements(rng, m, 2))).module;
  return scramble(rng, m);
}

/// Exhaustive decision of essentiality: branch, for every degree above q,
/// on whether the element dies there or misses s there, and test the final
/// subspace against the accumulated avoidance constraints.
inline bool exhaustive_essential(const GridModule& m, const Subspaces& s) {
  const GridBox& box = m.box();
  for (std::size_t k = 0; k < box.size(); ++k) {
    if (m.dim(k) == 0)
      continue;
    IntVec q = box.point(k);
    std::vector<Matrix> dead, good;
    for (std::size_t k2 = 0; k2 < box.size(); ++k2) {
      IntVec p = box.point(k2);
      bool above = true;
      for (std::size_t i = 0; i < p.size(); ++i)
        above = above && q[i] <= p[i];
      if (!above)
        continue;
      Matrix push = m.push(q, p);
      dead.push_back(kernel(push));
      good.push_back(preimage(push, s[k2]));
    }
    std::vector<const Matrix*> avoid;
    std::function<bool(std::size_t, const Matrix&)> bad = [&](std::size_t t, const Matrix& w) -> bool {
      if (w.cols() == 0)
        return false;
      for (const Matrix* g : avoid)
        if (contains(*g, w))
          return false;
      if (t == dead.size())
        return true;
      if (bad(t + 1, intersect(w, dead[t])))
        return true;
      avoid.push_back(&good[t]);
      bool found = bad(t + 1, w);
      avoid.pop_back();
      return found;
    };
    if (bad(0, Matrix::identity(m.dim(k))))
      return false;
  }
  return true;
}

inline bool exhaustive_coprimary(const GridModule& m, CoordSet tau) {
  const GridBox& box = m.box();
  for (std::size_t k = 0; k < box.size(); ++k) {
    IntVec q = box.point(k);
    if (kernel(m.push(q, clamp(box, q, tau))).cols() > 0)
      return false;
  }
  Localization loc = localize_module(m, tau);
  return exhaustive_essential(loc.module, global_support_module(loc.module, tau));
}

/// x ∈ cone(vectors), vectors spanning the space, via nonnegative solves
/// over every basis drawn from the vectors.
inline bool in_conic_hull(const std::vector<IntVec>& vectors, const IntVec& x) {
  const std::size_t n = x.size();
  std::vector<std::size_t> pick(n);
  std::function<bool(std::size_t, std::size_t)> go = [&](std::size_t depth, std::size_t start) {
    if (depth == n) {
      Matrix b(n, n);
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = 0; r < n; ++r)
          b(r, c) = static_cast<long>(vectors[pick[c]][r]);
      if (rank(b) < n)
        return false;
      Matrix sol = *solve_in_basis(b, Matrix::column(to_rational(x)));
      for (std::size_t r = 0; r < n; ++r)
        if (sgn(sol(r, 0)) < 0)
          return false;
      return true;
    }
    for (std::size_t g = start; g < vectors.size(); ++g) {
      pick[depth] = g;
      if (go(depth + 1, g + 1))
        return true;
    }
    return false;
  };
  return go(0, 0);
}

/// q ∈ a + τ − Q₊ iff q − a lies in the cone generated by τ and −Q₊.
inline bool direct_piece_member(const IntVec& q, const GeneralPiece& p, const GeneralDownset& d) {
  std::vector<IntVec> vectors;
  for (IntVec g : d.cone.generators) {
    for (auto& x : g)
      x = -x;
    vectors.push_back(g);
  }
  for (int g : d.lattice.faces[p.face].generator_ids)
    vectors.push_back(d.cone.generators[g]);
  IntVec diff(q.size());
  for (std::size_t i = 0; i < q.size(); ++i)
    diff[i] = q[i] - p.apex[i];
  return in_conic_hull(vectors, diff);
}

} // namespace testing
