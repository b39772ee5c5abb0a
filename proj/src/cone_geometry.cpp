#include "pogroup/cone_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "pogroup/error.hpp"

namespace pogroup {

namespace {

Rational dot(const IntVec& a, const IntVec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += Rational(static_cast<long>(a[i])) * static_cast<long>(b[i]);
  return s;
}

void check_piece(const GeneralPiece& p, const ConePresentation& cone, const FaceLattice& lattice) {
  if (p.apex.size() != cone.n)
    throw Error(ErrorKind::RankMismatch, "general piece apex has wrong rank");
  if (p.face >= lattice.faces.size())
    throw Error(ErrorKind::FaceNotInLattice, "face id " + std::to_string(p.face));
}

} // namespace

GeneralDownset make_general_downset(ConePresentation cone, std::vector<GeneralPiece> pieces) {
  FaceLattice lattice = enumerate_faces(cone);
  for (const auto& p : pieces)
    check_piece(p, cone, lattice);
  return {std::move(cone), std::move(lattice), std::move(pieces)};
}

bool piece_member(const IntVec& q, const GeneralPiece& piece, const ConePresentation& cone,
                  const FaceLattice& lattice, std::size_t row_budget) {
  check_piece(piece, cone, lattice);
  if (q.size() != cone.n)
    throw Error(ErrorKind::RankMismatch, "point has wrong rank");
  IntVec x(cone.n);
  for (std::size_t i = 0; i < cone.n; ++i)
    x[i] = piece.apex[i] - q[i];
  const auto& gens = lattice.faces[piece.face].generator_ids;
  const std::size_t k = gens.size();

  // Rows c·λ >= b from h·(x + Σ λ_j g_j) >= 0.
  struct Row {
    RatVec c;
    Rational b;
  };
  std::vector<Row> rows;
  for (const auto& h : cone.halfspaces) {
    Row r{RatVec(k), -dot(h, x)};
    for (std::size_t j = 0; j < k; ++j)
      r.c[j] = dot(h, cone.generators[gens[j]]);
    rows.push_back(std::move(r));
  }
  for (std::size_t v = 0; v < k; ++v) {
    std::vector<Row> next, pos, neg;
    for (auto& r : rows) {
      int s = sgn(r.c[v]);
      (s > 0 ? pos : s < 0 ? neg : next).push_back(std::move(r));
    }
    for (const auto& p : pos)
      for (const auto& m : neg) {
        Rational a = p.c[v];
        Rational b = -m.c[v];
        Row comb{RatVec(k), b * p.b + a * m.b};
        for (std::size_t j = 0; j < k; ++j)
          comb.c[j] = b * p.c[j] + a * m.c[j];
        next.push_back(std::move(comb));
        if (next.size() > row_budget)
          throw Error(ErrorKind::ConversionOverflow, "feasibility elimination exceeded row budget");
      }
    rows = std::move(next);
  }
  return std::all_of(rows.begin(), rows.end(), [](const Row& r) { return sgn(r.b) <= 0; });
}

bool member(const IntVec& q, const GeneralDownset& d) {
  return std::any_of(d.pieces.begin(), d.pieces.end(), [&](const GeneralPiece& p) {
    return piece_member(q, p, d.cone, d.lattice);
  });
}

GeneralDownset localize_general(const GeneralDownset& d, std::size_t tau) {
  if (tau >= d.lattice.faces.size())
    throw Error(ErrorKind::FaceNotInLattice, "face id " + std::to_string(tau));
  if (d.lattice.closed_flag != ClosedFlag::Proven)
    throw Error(ErrorKind::NotProvenClosed,
                std::string("closedness is ") + to_string(d.lattice.closed_flag));
  GeneralDownset out{d.cone, d.lattice, {}};
  for (const auto& p : d.pieces)
    if (d.lattice.leq[tau][p.face])
      out.pieces.push_back(p);
  return out;
}

bool pushed_member(const IntVec& q, const IntVec& w, const GeneralDownset& d) {
  // Each tight constraint h·(a − q − λw) >= 0 can only switch off, at
  // λ = h·(a − q) / h·w, because h·w >= 0 for w in the cone.
  Rational last = 0;
  for (const auto& p : d.pieces)
    for (int k : d.lattice.faces[p.face].tight) {
      const IntVec& h = d.cone.halfspaces[k];
      Rational hw = dot(h, w);
      if (sgn(hw) <= 0)
        continue;
      IntVec diff(q.size());
      for (std::size_t i = 0; i < q.size(); ++i)
        diff[i] = p.apex[i] - q[i];
      last = std::max(last, Rational(dot(h, diff) / hw));
    }
  Rational steps = floor(last) + 1;
  if (!steps.get_num().fits_slong_p())
    throw Error(ErrorKind::ConversionOverflow, "push length exceeds 64 bits");
  std::int64_t lambda = steps.get_num().get_si();
  IntVec far(q.size());
  for (std::size_t i = 0; i < q.size(); ++i)
    far[i] = q[i] + lambda * w[i];
  return member(far, d);
}

GeneralSupports grid_supports_general(const GeneralDownset& d, std::size_t tau,
                                      const GridBox& box) {
  if (tau >= d.lattice.faces.size())
    throw Error(ErrorKind::FaceNotInLattice, "face id " + std::to_string(tau));
  if (box.rank() != d.cone.n)
    throw Error(ErrorKind::RankMismatch, "box rank differs from cone rank");
  for (const auto& p : d.pieces)
    for (std::size_t i = 0; i < d.cone.n; ++i)
      if (box.lo()[i] > p.apex[i] - 1 || box.hi()[i] < p.apex[i] + 1)
        throw Error(ErrorKind::BoxTooSmall, "box must reach one step beyond every apex");

  const IntVec w_tau = interior_point(d.cone, d.lattice.faces[tau]);
  std::vector<IntVec> off_rays;
  for (auto r : d.lattice.rays)
    if (!d.lattice.leq[r][tau])
      off_rays.push_back(ray_generator(d.cone, d.lattice.faces[r]));

  GeneralSupports out{GridSet(box), GridSet(box)};
  for (std::size_t k = 0; k < box.size(); ++k) {
    IntVec q = box.point(k);
    if (member(q, d)) {
      bool global = std::none_of(off_rays.begin(), off_rays.end(),
                                 [&](const IntVec& r) { return pushed_member(q, r, d); });
      out.global.set(k, global);
    }
    if (pushed_member(q, w_tau, d)) {
      bool local = std::none_of(off_rays.begin(), off_rays.end(), [&](const IntVec& r) {
        IntVec w = w_tau;
        for (std::size_t i = 0; i < w.size(); ++i)
          w[i] += r[i];
        return pushed_member(q, w, d);
      });
      out.local.set(k, local);
    }
  }
  return out;
}

std::vector<IntVec> polygon_cone_generators(std::size_t m, std::int64_t scale) {
  if (m < 3)
    throw Error(ErrorKind::InvalidInput, "polygon needs at least 3 vertices");
  std::vector<IntVec> out;
  for (std::size_t k = 0; k < m; ++k) {
    double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(m);
    out.push_back({static_cast<std::int64_t>(std::llround(scale * std::cos(theta))),
                   static_cast<std::int64_t>(std::llround(scale * std::sin(theta))), scale});
  }
  return out;
}

} // namespace pogroup
