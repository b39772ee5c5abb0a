#include "pogroup/hull.hpp"

#include <algorithm>
#include <map>

#include "pogroup/error.hpp"

namespace pogroup {

namespace {

void validate(const HullPresentation& h) {
  const GridBox& box = h.box;
  const std::size_t n = box.rank();
  if (h.hull.empty())
    throw Error(ErrorKind::InvalidInput, "hull: at least one downset is required");
  for (std::size_t j = 0; j < h.hull.size(); ++j) {
    const DownsetExpr& d = h.hull[j];
    if (d.group.kind != ConeKind::OrthantInt)
      throw Error(ErrorKind::ModeMismatch, "hull[" + std::to_string(j) + "]: orthant-int group required");
    if (d.rank() != n)
      throw Error(ErrorKind::RankMismatch, "hull[" + std::to_string(j) + "]: rank differs from box");
    for (const auto& p : d.pieces)
      for (std::size_t i = 0; i < n; ++i)
        if (!p.face.contains(i) && p.apex[i] + 1 > box.hi()[i])
          throw Error(ErrorKind::BoxTooSmall,
                      "box.hi[" + std::to_string(i) + "] must exceed apex coordinate " +
                          format_rational(p.apex[i]));
  }
  for (std::size_t g = 0; g < h.generators.size(); ++g) {
    const HullGenerator& gen = h.generators[g];
    std::string where = "generators[" + std::to_string(g) + "]";
    if (gen.degree.size() != n)
      throw Error(ErrorKind::RankMismatch, where + ".degree: rank differs from box");
    if (gen.coeffs.size() != h.hull.size())
      throw Error(ErrorKind::DimensionMismatch, where + ".coeffs: one entry per hull downset expected");
    for (std::size_t i = 0; i < n; ++i) {
      if (gen.degree[i] < box.lo()[i])
        throw Error(ErrorKind::DegreeOutsideBox, where + ".degree below box.lo");
      if (gen.degree[i] + 1 > box.hi()[i])
        throw Error(ErrorKind::BoxTooSmall, where + ".degree: box.hi must exceed it");
    }
    for (std::size_t j = 0; j < h.hull.size(); ++j)
      if (sgn(gen.coeffs[j]) != 0 && !member(gen.degree, h.hull[j]))
        throw Error(ErrorKind::GeneratorOutsideHull,
                    where + ".coeffs[" + std::to_string(j) + "]: degree not in hull[" +
                        std::to_string(j) + "]");
  }
}

bool above(const IntVec& a, const IntVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] < b[i])
      return false;
  return true;
}

} // namespace

RealizedModule realize(const HullPresentation& h) {
  validate(h);
  const GridBox& box = h.box;
  const std::size_t k = h.hull.size();
  // Membership of each degree in each hull downset.
  std::vector<std::vector<bool>> in(box.size(), std::vector<bool>(k));
  for (std::size_t idx = 0; idx < box.size(); ++idx) {
    IntVec q = box.point(idx);
    for (std::size_t j = 0; j < k; ++j)
      in[idx][j] = member(q, h.hull[j]);
  }
  std::vector<Matrix> bases;
  for (std::size_t idx = 0; idx < box.size(); ++idx) {
    IntVec q = box.point(idx);
    Matrix span(k, 0);
    for (const auto& gen : h.generators) {
      if (!above(q, gen.degree))
        continue;
      RatVec v(k);
      for (std::size_t j = 0; j < k; ++j)
        v[j] = in[idx][j] ? gen.coeffs[j] : Rational(0);
      span = hstack(span, Matrix::column(v));
    }
    bases.push_back(column_basis(span));
  }
  auto ambient = [&](std::size_t idx, std::size_t i) {
    std::size_t up = box.step(idx, i);
    Matrix t(k, k);
    for (std::size_t j = 0; j < k; ++j)
      if (in[idx][j] && in[up][j])
        t(j, j) = 1;
    return t;
  };
  GridModule m = subspace_module(box, bases, ambient);
  if (!m.is_commutative())
    throw Error(ErrorKind::InvalidInput, "realized module is not commutative");
  return {std::move(m), std::move(bases)};
}

GridModule realize_module(const HullPresentation& h) { return realize(h).module; }

ModuleDecomposition primary_decomposition_module(const HullPresentation& h) {
  ModuleDecomposition out{realize(h), {}};
  const GridModule& m = out.realized.module;
  const GridBox& box = h.box;
  const std::size_t k = h.hull.size();

  // τ ↦ list of (hull index, P_τ(Dⱼ)).
  std::map<std::uint32_t, std::vector<std::pair<std::size_t, DownsetExpr>>> summands;
  std::vector<CoordSet> faces;
  for (std::size_t j = 0; j < k; ++j)
    for (auto& c : canonical_decomposition(h.hull[j])) {
      if (!summands.count(c.face.bits()))
        faces.push_back(c.face);
      summands[c.face.bits()].emplace_back(j, std::move(c.downset));
    }
  std::sort(faces.begin(), faces.end(), [](CoordSet a, CoordSet b) {
    if (a.size() != b.size())
      return a.size() > b.size();
    return face_order_less(a, b);
  });

  Subspaces common = full_subspaces(m);
  for (CoordSet tau : faces) {
    const auto& parts = summands[tau.bits()];
    Subspaces kernel_tau;
    for (std::size_t idx = 0; idx < box.size(); ++idx) {
      IntVec q = box.point(idx);
      Matrix phi(parts.size(), k);
      for (std::size_t s = 0; s < parts.size(); ++s)
        if (member(q, parts[s].second))
          phi(s, parts[s].first) = 1;
      kernel_tau.push_back(column_basis(kernel(phi * out.realized.embedding[idx])));
    }
    if (!is_submodule(m, kernel_tau))
      throw Error(ErrorKind::InjectivityFailure, "kernel for face " + face_label(tau) +
                                                     " is not a submodule");
    common = intersect(common, kernel_tau);
    Quotient quotient = quotient_module(m, kernel_tau);
    out.components.push_back(
        {tau, std::move(kernel_tau), std::move(quotient.module), std::move(quotient.projection)});
  }
  for (std::size_t idx = 0; idx < box.size(); ++idx)
    if (common[idx].cols() > 0)
      throw Error(ErrorKind::InjectivityFailure,
                  "nonzero common kernel at degree " + format_point(to_rational(box.point(idx))));
  return out;
}

} // namespace pogroup
