#include "pogroup/cone.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

#include "pogroup/error.hpp"
#include "pogroup/matrix.hpp"

namespace pogroup {

const char* to_string(ConeKind kind) {
  switch (kind) {
  case ConeKind::OrthantInt: return "orthant-int";
  case ConeKind::OrthantRat: return "orthant-rat";
  case ConeKind::ConeInt: return "cone-int";
  }
  return "?";
}

const char* to_string(ClosedFlag flag) {
  switch (flag) {
  case ClosedFlag::Proven: return "proven";
  case ClosedFlag::Refuted: return "refuted";
  case ClosedFlag::SampledOk: return "sampled-ok";
  }
  return "?";
}

namespace {

using IntRow = std::vector<Integer>;

std::vector<IntVec> unit_vectors(std::size_t n) {
  std::vector<IntVec> out(n, IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    out[i][i] = 1;
  return out;
}

void make_primitive(IntRow& row) {
  Integer g = 0;
  for (const auto& x : row)
    g = gcd(g, x);
  if (g > 1)
    for (auto& x : row)
      x /= g;
}

IntRow scale_to_integers(const RatVec& row) {
  Integer l = 1;
  for (const auto& x : row)
    l = lcm(l, Integer(x.get_den()));
  IntRow out(row.size());
  for (std::size_t i = 0; i < row.size(); ++i) {
    Rational scaled = row[i] * l;
    out[i] = scaled.get_num();
  }
  make_primitive(out);
  return out;
}

Integer dot(const IntRow& a, const IntVec& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < b.size(); ++i)
    s += a[i] * Integer(static_cast<long>(b[i]));
  return s;
}

std::int64_t dot64(const IntVec& a, const IntVec& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += a[i] * b[i];
  return s;
}

Matrix to_matrix(const std::vector<IntVec>& rows, std::size_t n) {
  Matrix m(rows.size(), n);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < n; ++c)
      m(r, c) = static_cast<long>(rows[r][c]);
  return m;
}

void check_vectors(const std::vector<IntVec>& vs, std::size_t n, const char* what) {
  if (n == 0 || n > kMaxConeRank)
    throw Error(ErrorKind::InvalidInput, "cone rank must be in 1.." + std::to_string(kMaxConeRank));
  for (const auto& v : vs)
    if (v.size() != n)
      throw Error(ErrorKind::RankMismatch, std::string(what) + " has wrong length");
}

} // namespace

IntVec primitive(const std::vector<Integer>& v) {
  IntRow row = v;
  make_primitive(row);
  IntVec out(row.size());
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (!row[i].fits_slong_p())
      throw Error(ErrorKind::ConversionOverflow, "coefficient exceeds 64 bits");
    out[i] = row[i].get_si();
  }
  return out;
}

std::vector<IntVec> fourier_motzkin(const std::vector<IntVec>& vectors, std::size_t n,
                                    std::size_t row_budget) {
  check_vectors(vectors, n, "vector");
  Matrix x = to_matrix(vectors, n);
  // Greedy basis among the input vectors.
  std::vector<std::size_t> basis, rest;
  {
    Matrix xt = x.transpose();
    Matrix tmp = xt;
    auto piv = rref(tmp);
    if (piv.size() < n)
      throw Error(ErrorKind::NotFullDimensional, "vectors do not span the ambient space");
    std::set<std::size_t> in_basis(piv.begin(), piv.end());
    for (std::size_t k = 0; k < vectors.size(); ++k)
      (in_basis.count(k) ? basis : rest).push_back(k);
  }
  const std::size_t m = vectors.size();
  const std::size_t free_vars = m - n;

  // y = X_B^T λ_B + X_N^T λ_N  =>  λ_B = A (y - X_N^T λ_N) with A = (X_B^T)^{-1}.
  Matrix xbt(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      xbt(r, c) = x(basis[c], r);
  Matrix inv = *solve_in_basis(xbt, Matrix::identity(n));
  Matrix xnt(n, free_vars);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < free_vars; ++c)
      xnt(r, c) = x(rest[c], r);
  Matrix coupled = inv * xnt;

  // Rows over the variables (y_1..y_n, λ_N); each row means row·v >= 0.
  // Each row remembers which input rows it combines; after eliminating k
  // variables a row built from more than k + 1 of them is redundant.
  std::map<IntRow, std::uint64_t> rows;
  auto add = [](std::map<IntRow, std::uint64_t>& into, IntRow row, std::uint64_t history) {
    auto [it, fresh] = into.emplace(std::move(row), history);
    if (!fresh && std::popcount(history) < std::popcount(it->second))
      it->second = history;
  };
  std::size_t origin = 0;
  auto next_origin = [&]() -> std::uint64_t {
    return origin < 64 ? (std::uint64_t{1} << origin++) : 0;
  };
  for (std::size_t r = 0; r < n; ++r) {
    RatVec row(n + free_vars);
    for (std::size_t c = 0; c < n; ++c)
      row[c] = inv(r, c);
    for (std::size_t c = 0; c < free_vars; ++c)
      row[n + c] = -coupled(r, c);
    add(rows, scale_to_integers(row), next_origin());
  }
  for (std::size_t c = 0; c < free_vars; ++c) {
    IntRow row(n + free_vars, 0);
    row[n + c] = 1;
    add(rows, row, next_origin());
  }
  const bool prune = n + free_vars <= 64;

  std::size_t eliminated = 0;
  for (std::size_t v = n + free_vars; v-- > n;) {
    ++eliminated;
    std::vector<std::pair<IntRow, std::uint64_t>> pos, neg;
    std::map<IntRow, std::uint64_t> next;
    for (const auto& [r, h] : rows) {
      int s = sgn(r[v]);
      if (s > 0)
        pos.emplace_back(r, h);
      else if (s < 0)
        neg.emplace_back(r, h);
      else
        add(next, r, h);
    }
    for (const auto& [p, hp] : pos)
      for (const auto& [q, hq] : neg) {
        std::uint64_t history = hp | hq;
        if (prune && static_cast<std::size_t>(std::popcount(history)) > eliminated + 1)
          continue;
        IntRow comb(p.size());
        Integer a = p[v];
        Integer b = -q[v];
        for (std::size_t i = 0; i < p.size(); ++i)
          comb[i] = b * p[i] + a * q[i];
        make_primitive(comb);
        add(next, std::move(comb), history);
        if (next.size() > row_budget)
          throw Error(ErrorKind::ConversionOverflow,
                      "Fourier-Motzkin exceeded row budget " + std::to_string(row_budget));
      }
    rows = std::move(next);
  }

  std::set<IntVec> facets;
  for (const auto& [r, history] : rows) {
    IntRow h(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(n));
    if (std::all_of(h.begin(), h.end(), [](const Integer& z) { return z == 0; }))
      continue;
    std::vector<RatVec> tight;
    for (const auto& g : vectors)
      if (dot(h, g) == 0)
        tight.push_back(to_rational(g));
    if (tight.empty() || rank(Matrix::from_rows(tight, n)) != n - 1)
      continue;
    facets.insert(primitive(h));
  }
  return {facets.begin(), facets.end()};
}

ConePresentation ConePresentation::orthant_int(std::size_t n) {
  if (n == 0 || n > 31)
    throw Error(ErrorKind::InvalidInput, "orthant rank must be in 1..31");
  return {ConeKind::OrthantInt, n, unit_vectors(n), unit_vectors(n)};
}

ConePresentation ConePresentation::orthant_rat(std::size_t n) {
  auto c = orthant_int(n);
  c.kind = ConeKind::OrthantRat;
  return c;
}

ConePresentation ConePresentation::from_generators(std::size_t n,
                                                   const std::vector<IntVec>& generators,
                                                   std::size_t row_budget) {
  check_vectors(generators, n, "generator");
  auto halfspaces = fourier_motzkin(generators, n, row_budget);
  if (halfspaces.empty() || rank(to_matrix(halfspaces, n)) < n)
    throw Error(ErrorKind::NonPointedCone, "positive cone contains a line");
  auto extreme = fourier_motzkin(halfspaces, n, row_budget);
  if (fourier_motzkin(extreme, n, row_budget) != halfspaces)
    throw Error(ErrorKind::InvalidInput, "V/H round trip disagrees");
  return {ConeKind::ConeInt, n, extreme, halfspaces};
}

ConePresentation ConePresentation::from_halfspaces(std::size_t n,
                                                   const std::vector<IntVec>& halfspaces,
                                                   std::size_t row_budget) {
  check_vectors(halfspaces, n, "halfspace");
  if (halfspaces.empty() || rank(to_matrix(halfspaces, n)) < n)
    throw Error(ErrorKind::NonPointedCone, "positive cone contains a line");
  auto extreme = fourier_motzkin(halfspaces, n, row_budget);
  if (extreme.empty() || rank(to_matrix(extreme, n)) < n)
    throw Error(ErrorKind::NotFullDimensional, "positive cone does not generate the group");
  auto facets = fourier_motzkin(extreme, n, row_budget);
  if (fourier_motzkin(facets, n, row_budget) != extreme)
    throw Error(ErrorKind::InvalidInput, "H/V round trip disagrees");
  return {ConeKind::ConeInt, n, extreme, facets};
}

bool in_cone(const ConePresentation& cone, const RatVec& x) {
  if (x.size() != cone.n)
    throw Error(ErrorKind::RankMismatch, "point rank " + std::to_string(x.size()) +
                                             " vs group rank " + std::to_string(cone.n));
  for (const auto& h : cone.halfspaces) {
    Rational s = 0;
    for (std::size_t i = 0; i < cone.n; ++i)
      s += x[i] * static_cast<long>(h[i]);
    if (sgn(s) < 0)
      return false;
  }
  return true;
}

bool leq(const RatVec& q, const RatVec& q2, const ConePresentation& cone) {
  if (q.size() != cone.n || q2.size() != cone.n)
    throw Error(ErrorKind::RankMismatch, "leq operands must have rank " + std::to_string(cone.n));
  if (cone.integral())
    for (std::size_t i = 0; i < cone.n; ++i)
      if (!is_integer(q[i]) || !is_integer(q2[i]))
        throw Error(ErrorKind::InvalidInput, "non-integer point in an integer group");
  RatVec diff(cone.n);
  for (std::size_t i = 0; i < cone.n; ++i)
    diff[i] = q2[i] - q[i];
  return in_cone(cone, diff);
}

bool leq(const IntVec& q, const IntVec& q2, const ConePresentation& cone) {
  return leq(to_rational(q), to_rational(q2), cone);
}

std::optional<std::size_t> FaceLattice::find(CoordSet char_set) const {
  for (const auto& f : faces)
    if (f.char_set == char_set)
      return f.id;
  return std::nullopt;
}

std::size_t FaceLattice::join(std::size_t a, std::size_t b) const {
  for (std::size_t j = 0; j < faces.size(); ++j)
    if (leq[a][j] && leq[b][j])
      return j; // faces are sorted by dimension, so the first hit is least
  return full();
}

FaceLattice enumerate_faces(const ConePresentation& cone) {
  FaceLattice lattice;
  const std::size_t n = cone.n;
  if (cone.is_orthant() && n > kMaxOrthantRank)
    throw Error(ErrorKind::BoxTooLarge, "orthant face lattice limited to rank " +
                                            std::to_string(kMaxOrthantRank));
  const std::size_t h = cone.halfspaces.size();
  if (h > 20)
    throw Error(ErrorKind::BoxTooLarge, "too many facets to enumerate tight sets");

  // Faces keyed by the generators they contain.
  std::map<std::vector<int>, Face> by_gens;
  for (std::uint32_t mask = 0; mask < (1u << h); ++mask) {
    std::vector<int> gens;
    for (std::size_t g = 0; g < cone.generators.size(); ++g) {
      bool on = true;
      for (std::size_t k = 0; k < h && on; ++k)
        if ((mask >> k) & 1u)
          on = dot64(cone.halfspaces[k], cone.generators[g]) == 0;
      if (on)
        gens.push_back(static_cast<int>(g));
    }
    if (by_gens.count(gens))
      continue;
    Face f;
    f.generator_ids = gens;
    for (std::size_t k = 0; k < h; ++k) {
      bool tight = true;
      for (int g : gens)
        tight = tight && dot64(cone.halfspaces[k], cone.generators[g]) == 0;
      if (tight)
        f.tight.push_back(static_cast<int>(k));
    }
    if (!gens.empty()) {
      std::vector<RatVec> rows;
      for (int g : gens)
        rows.push_back(to_rational(cone.generators[g]));
      f.dim = rank(Matrix::from_rows(rows, n));
    }
    if (cone.is_orthant())
      f.char_set = CoordSet::from_indices(gens);
    by_gens.emplace(gens, std::move(f));
  }

  for (auto& [gens, f] : by_gens)
    lattice.faces.push_back(f);
  std::sort(lattice.faces.begin(), lattice.faces.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim)
      return a.dim < b.dim;
    return a.generator_ids < b.generator_ids;
  });
  const std::size_t count = lattice.faces.size();
  lattice.leq.assign(count, std::vector<bool>(count, false));
  for (std::size_t i = 0; i < count; ++i) {
    lattice.faces[i].id = i;
    if (lattice.faces[i].dim == 1)
      lattice.rays.push_back(i);
    for (std::size_t j = 0; j < count; ++j) {
      const auto& a = lattice.faces[i].generator_ids;
      const auto& b = lattice.faces[j].generator_ids;
      lattice.leq[i][j] = std::includes(b.begin(), b.end(), a.begin(), a.end());
    }
  }
  lattice.closed_flag = is_closed(cone, lattice).flag;
  return lattice;
}

IntVec ray_generator(const ConePresentation& cone, const Face& ray) {
  if (ray.dim != 1 || ray.generator_ids.size() != 1)
    throw Error(ErrorKind::FaceNotInLattice, "face " + std::to_string(ray.id) + " is not a ray");
  return cone.generators[ray.generator_ids.front()];
}

IntVec interior_point(const ConePresentation& cone, const Face& face) {
  IntVec w(cone.n, 0);
  for (int g : face.generator_ids)
    for (std::size_t i = 0; i < cone.n; ++i)
      w[i] += cone.generators[g][i];
  return w;
}

bool face_contains(const ConePresentation& cone, const Face& face, const RatVec& x) {
  if (!in_cone(cone, x))
    return false;
  for (int k : face.tight) {
    Rational s = 0;
    for (std::size_t i = 0; i < cone.n; ++i)
      s += x[i] * static_cast<long>(cone.halfspaces[k][i]);
    if (sgn(s) != 0)
      return false;
  }
  return true;
}

ClosednessReport is_closed(const ConePresentation& cone, const FaceLattice& lattice,
                           std::size_t sample_budget) {
  if (cone.is_orthant())
    return {ClosedFlag::Proven, std::nullopt};
  // A rational polyhedral cone is topologically closed, hence closed in the
  // order-theoretic sense once its two descriptions are confirmed equal.
  bool agree = false;
  try {
    agree = fourier_motzkin(cone.generators, cone.n) == cone.halfspaces &&
            fourier_motzkin(cone.halfspaces, cone.n) == cone.generators;
  } catch (const Error&) {
    agree = false;
  }
  if (agree)
    return {ClosedFlag::Proven, std::nullopt};
  return sample_closedness(cone, lattice, 6, sample_budget);
}

ClosednessReport sample_closedness(const ConePresentation& cone, const FaceLattice& lattice,
                                   std::int64_t radius, std::size_t sample_budget,
                                   std::int64_t max_multiple) {
  const std::size_t n = cone.n;
  IntVec s(n, -radius);
  std::size_t sampled = 0;
  std::vector<IntVec> ray_gens;
  for (auto r : lattice.rays)
    ray_gens.push_back(ray_generator(cone, lattice.faces[r]));

  while (sampled < sample_budget) {
    if (in_cone(cone, to_rational(s))) {
      ++sampled;
      for (const auto& tau : lattice.faces) {
        if (face_contains(cone, tau, to_rational(s)))
          continue;
        bool dominated = false;
        for (std::size_t k = 0; k < ray_gens.size() && !dominated; ++k) {
          if (lattice.leq[lattice.rays[k]][tau.id])
            continue;
          // Smallest λ with λ s - r ∈ C, if any.
          std::int64_t lambda = 1;
          bool feasible = true;
          for (const auto& h : cone.halfspaces) {
            std::int64_t hs = dot64(h, s);
            std::int64_t hr = dot64(h, ray_gens[k]);
            if (hs == 0) {
              feasible = feasible && hr <= 0;
            } else {
              // hs > 0 because s lies in the cone.
              std::int64_t need = hr / hs + (hr % hs > 0 ? 1 : 0);
              lambda = std::max(lambda, need);
            }
          }
          dominated = feasible && lambda <= max_multiple;
        }
        if (!dominated)
          return {ClosedFlag::Refuted, ClosednessWitness{tau.id, s}};
      }
    }
    std::size_t i = 0;
    while (i < n && s[i] == radius) {
      s[i] = -radius;
      ++i;
    }
    if (i == n)
      break;
    ++s[i];
  }
  return {ClosedFlag::SampledOk, std::nullopt};
}

} // namespace pogroup
