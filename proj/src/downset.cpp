#include "pogroup/downset.hpp"

#include <algorithm>

#include "pogroup/error.hpp"

namespace pogroup {

namespace {

Cut upper_cut(const CoprincipalPiece& p, std::size_t i, EndpointMode mode) {
  if (p.face.contains(i))
    return Cut::pos_inf();
  if (mode == EndpointMode::Integer)
    return Cut::before(p.apex[i] + 1);
  return p.is_strict(i) ? Cut::before(p.apex[i]) : Cut::after_value(p.apex[i]);
}

bool component_order_less(CoordSet a, CoordSet b) {
  if (a.size() != b.size())
    return a.size() > b.size();
  return a.indices() < b.indices();
}

bool piece_less(const CoprincipalPiece& a, const CoprincipalPiece& b) {
  if (a.face != b.face)
    return component_order_less(a.face, b.face);
  if (a.apex != b.apex)
    return a.apex < b.apex;
  return a.strict < b.strict;
}

void check_face(CoordSet tau, std::size_t n) {
  if (!tau.is_subset_of(CoordSet::full(n)))
    throw Error(ErrorKind::FaceNotInLattice,
                "face uses a coordinate outside 0.." + std::to_string(n - 1));
}

Region union_of(const std::vector<CoprincipalPiece>& pieces, std::size_t n, EndpointMode mode) {
  std::vector<GeneralizedBox> boxes;
  boxes.reserve(pieces.size());
  for (const auto& p : pieces)
    boxes.push_back(piece_box(p, n, mode));
  return Region(n, mode, std::move(boxes));
}

Region union_of_components(const std::vector<Component>& comps, std::size_t n, EndpointMode mode,
                           std::size_t skip = static_cast<std::size_t>(-1)) {
  std::vector<GeneralizedBox> boxes;
  for (std::size_t k = 0; k < comps.size(); ++k) {
    if (k == skip)
      continue;
    for (const auto& p : comps[k].downset.pieces)
      boxes.push_back(piece_box(p, n, mode));
  }
  return Region(n, mode, std::move(boxes));
}

} // namespace

std::vector<CoordSet> orthant_faces(std::size_t n) {
  if (n > kMaxOrthantRank)
    throw Error(ErrorKind::BoxTooLarge, "orthant rank too large for face enumeration");
  std::vector<CoordSet> out;
  for (std::uint32_t m = 0; m < (1u << n); ++m)
    out.emplace_back(m);
  std::sort(out.begin(), out.end(), face_order_less);
  return out;
}

bool piece_subset(const CoprincipalPiece& a, const CoprincipalPiece& b) {
  if (a.apex.size() != b.apex.size())
    throw Error(ErrorKind::RankMismatch, "pieces of different rank");
  if (!a.face.is_subset_of(b.face))
    return false;
  const auto mode = EndpointMode::Rational; // cut comparison is mode-independent here
  for (std::size_t i = 0; i < a.apex.size(); ++i)
    if (!b.face.contains(i) && !(upper_cut(a, i, mode) <= upper_cut(b, i, mode)))
      return false;
  return true;
}

DownsetExpr normalize(DownsetExpr d) {
  if (!d.group.is_orthant())
    throw Error(ErrorKind::InvalidInput, "downset calculus requires an orthant group");
  const std::size_t n = d.rank();
  for (auto& p : d.pieces) {
    if (p.apex.size() != n)
      throw Error(ErrorKind::RankMismatch, "apex " + format_point(p.apex) + " in rank-" +
                                               std::to_string(n) + " group");
    check_face(p.face, n);
    if (!p.strict.empty() && p.strict.size() != n)
      throw Error(ErrorKind::RankMismatch, "strict flags must have one entry per coordinate");
    p.strict.resize(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      if (p.face.contains(i)) {
        p.apex[i] = 0;
        p.strict[i] = false;
        continue;
      }
      if (d.group.integral()) {
        if (!is_integer(p.apex[i]))
          throw Error(ErrorKind::InvalidInput, "non-integer apex " + format_point(p.apex));
        if (p.strict[i]) {
          p.apex[i] -= 1;
          p.strict[i] = false;
        }
      }
    }
    if (std::none_of(p.strict.begin(), p.strict.end(), [](bool b) { return b; }))
      p.strict.clear();
  }
  std::sort(d.pieces.begin(), d.pieces.end(), piece_less);
  d.pieces.erase(std::unique(d.pieces.begin(), d.pieces.end()), d.pieces.end());
  std::vector<CoprincipalPiece> kept;
  for (std::size_t i = 0; i < d.pieces.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < d.pieces.size() && !dominated; ++j)
      dominated = i != j && piece_subset(d.pieces[i], d.pieces[j]);
    if (!dominated)
      kept.push_back(d.pieces[i]);
  }
  d.pieces = std::move(kept);
  return d;
}

GeneralizedBox piece_box(const CoprincipalPiece& p, std::size_t n, EndpointMode mode) {
  GeneralizedBox box(n);
  for (std::size_t i = 0; i < n; ++i)
    box[i].hi = upper_cut(p, i, mode);
  return box;
}

Region to_region(const DownsetExpr& d) { return union_of(d.pieces, d.rank(), d.mode()); }

bool member(const RatVec& q, const DownsetExpr& d) {
  if (q.size() != d.rank())
    throw Error(ErrorKind::RankMismatch, "point " + format_point(q) + " in rank-" +
                                             std::to_string(d.rank()) + " group");
  return std::any_of(d.pieces.begin(), d.pieces.end(), [&](const CoprincipalPiece& p) {
    for (std::size_t i = 0; i < q.size(); ++i) {
      if (p.face.contains(i))
        continue;
      if (p.is_strict(i) ? !(q[i] < p.apex[i]) : !(q[i] <= p.apex[i]))
        return false;
    }
    return true;
  });
}

bool member(const IntVec& q, const DownsetExpr& d) { return member(to_rational(q), d); }

DownsetExpr localize(const DownsetExpr& d, CoordSet tau) {
  check_face(tau, d.rank());
  DownsetExpr out{d.group, {}};
  for (const auto& p : d.pieces)
    if (tau.is_subset_of(p.face))
      out.pieces.push_back(p);
  return out;
}

Region global_support(const DownsetExpr& d, CoordSet tau) {
  check_face(tau, d.rank());
  Region result = to_region(d);
  for (std::size_t j = 0; j < d.rank(); ++j)
    if (!tau.contains(j))
      result = region_difference(result, to_region(localize(d, CoordSet().with(j))));
  return result;
}

Region local_support(const DownsetExpr& d, CoordSet tau) {
  return global_support(localize(d, tau), tau);
}

DownsetExpr from_down_closed(const Region& r, const ConePresentation& group) {
  if (r.rank() != group.n)
    throw Error(ErrorKind::RankMismatch, "region rank differs from group rank");
  if (!(down_closure(r) == r))
    throw Error(ErrorKind::InvalidInput, "region is not down-closed");
  // Each box of a down-closed region may be extended downward, so only its
  // upper bounds matter.
  DownsetExpr out{group, {}};
  for (const auto& box : r.boxes()) {
    CoprincipalPiece p{RatVec(group.n), CoordSet(), std::vector<bool>(group.n, false)};
    for (std::size_t i = 0; i < group.n; ++i) {
      const Cut& hi = box[i].hi;
      if (hi.kind == Cut::PosInf) {
        p.face = p.face.with(i);
      } else if (hi.after) {
        p.apex[i] = hi.value;
      } else if (group.integral()) {
        p.apex[i] = hi.value - 1;
      } else {
        p.apex[i] = hi.value;
        p.strict[i] = true;
      }
    }
    out.pieces.push_back(std::move(p));
  }
  return normalize(std::move(out));
}

DownsetExpr primary_component(const DownsetExpr& d, CoordSet tau) {
  return from_down_closed(down_closure(local_support(d, tau)), d.group);
}

std::vector<Component> canonical_decomposition(const DownsetExpr& d) {
  const std::size_t n = d.rank();
  auto faces = orthant_faces(n);
  std::sort(faces.begin(), faces.end(), component_order_less);
  std::vector<Component> out;
  Region covered(n, d.mode());
  for (CoordSet tau : faces) {
    Region support = local_support(d, tau);
    if (support.empty())
      continue;
    covered = region_union(covered, support);
    out.push_back({tau, from_down_closed(down_closure(support), d.group)});
  }
  Region whole = to_region(d);
  if (!region_equals(covered, whole) ||
      !region_equals(union_of_components(out, n, d.mode()), whole))
    throw Error(ErrorKind::DecompositionUnionMismatch,
                "local supports do not reassemble the downset");
  return out;
}

std::vector<Component> prune_redundant(std::vector<Component> components, const DownsetExpr& d) {
  const std::size_t n = d.rank();
  const Region whole = to_region(d);
  std::vector<std::size_t> order(components.size());
  for (std::size_t k = 0; k < order.size(); ++k)
    order[k] = k;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return face_order_less(components[a].face, components[b].face);
  });
  std::vector<bool> removed(components.size(), false);
  for (std::size_t k : order) {
    std::vector<Component> others;
    for (std::size_t j = 0; j < components.size(); ++j)
      if (j != k && !removed[j])
        others.push_back(components[j]);
    if (region_equals(union_of_components(others, n, d.mode()), whole))
      removed[k] = true;
  }
  std::vector<Component> out;
  for (std::size_t k = 0; k < components.size(); ++k)
    if (!removed[k])
      out.push_back(std::move(components[k]));
  return out;
}

std::optional<CoordSet> is_coprimary_downset(const DownsetExpr& d) {
  Region whole = to_region(d);
  if (whole.empty())
    return std::nullopt;
  for (CoordSet tau : orthant_faces(d.rank()))
    if (region_equals(whole, to_region(primary_component(d, tau))))
      return tau;
  return std::nullopt;
}

} // namespace pogroup
