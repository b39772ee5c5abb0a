#include "pogroup/oracle.hpp"

#include <algorithm>

#include "pogroup/error.hpp"

namespace pogroup::oracle {

namespace {

std::vector<CoordSet> all_faces(std::size_t n) {
  std::vector<CoordSet> out;
  for (std::uint32_t m = 0; m < (1u << n); ++m)
    out.emplace_back(m);
  return out;
}

// Calls f on every point q + t, t ∈ τ, that lies in the box.
template <class F> bool all_in_face_translate(const GridBox& box, const IntVec& q, CoordSet tau, F&& f) {
  IntVec p = q;
  std::vector<int> dirs = tau.indices();
  while (true) {
    if (!f(p))
      return false;
    std::size_t k = 0;
    while (k < dirs.size() && p[dirs[k]] == box.hi()[dirs[k]]) {
      p[dirs[k]] = q[dirs[k]];
      ++k;
    }
    if (k == dirs.size())
      return true;
    ++p[dirs[k]];
  }
}

} // namespace

GridBox margin_box(const DownsetExpr& d, std::int64_t margin) {
  const std::size_t n = d.rank();
  IntVec lo(n, 0), hi(n, 0);
  for (const auto& p : d.pieces)
    for (std::size_t i = 0; i < n; ++i) {
      if (p.face.contains(i))
        continue;
      if (!is_integer(p.apex[i]))
        throw Error(ErrorKind::InvalidInput, "grid oracle needs integer apexes");
      std::int64_t a = p.apex[i].get_num().get_si();
      lo[i] = std::min(lo[i], a);
      hi[i] = std::max(hi[i], a);
    }
  for (std::size_t i = 0; i < n; ++i) {
    lo[i] -= margin;
    hi[i] += margin;
  }
  return GridBox(lo, hi);
}

GridSet grid_from_downset(const DownsetExpr& d, const GridBox& box) {
  if (box.rank() != d.rank())
    throw Error(ErrorKind::RankMismatch, "box rank differs from downset rank");
  for (const auto& p : d.pieces)
    for (std::size_t i = 0; i < d.rank(); ++i) {
      if (p.face.contains(i))
        continue;
      if (!(Rational(static_cast<long>(box.lo()[i])) <= p.apex[i] - 1) ||
          !(p.apex[i] + 1 <= Rational(static_cast<long>(box.hi()[i]))))
        throw Error(ErrorKind::BoxTooSmall, "box must extend one step past apex " +
                                                format_point(p.apex));
    }
  return GridSet::from_predicate(box, [&](const IntVec& q) { return member(q, d); });
}

GridSet grid_from_region(const Region& r, const GridBox& box) {
  return GridSet::from_predicate(box, [&](const IntVec& q) { return r.member(to_rational(q)); });
}

bool is_downset(const GridSet& d) {
  const GridBox& box = d.box();
  for (std::size_t k = 0; k < box.size(); ++k) {
    if (d.test(k))
      continue;
    for (std::size_t i = 0; i < box.rank(); ++i) {
      std::size_t up = box.step(k, i);
      if (up < box.size() && d.test(up))
        return false; // q+e_i in D but q not
    }
  }
  return true;
}

GridSet grid_localize(const GridSet& d, CoordSet tau) {
  const GridBox& box = d.box();
  GridSet out(box);
  for (std::size_t k = 0; k < box.size(); ++k) {
    if (!d.test(k))
      continue;
    IntVec q = box.point(k);
    out.set(k, all_in_face_translate(box, q, tau, [&](const IntVec& p) { return d.test(p); }));
  }
  return out;
}

GridSet grid_global_support(const GridSet& d, CoordSet tau) {
  const std::size_t n = d.box().rank();
  GridSet out = d;
  for (CoordSet other : all_faces(n)) {
    if (other.is_subset_of(tau))
      continue;
    GridSet loc = grid_localize(d, other);
    for (std::size_t k = 0; k < d.box().size(); ++k)
      if (loc.test(k))
        out.set(k, false);
  }
  return out;
}

GridSet grid_local_support(const GridSet& d, CoordSet tau) {
  return grid_global_support(grid_localize(d, tau), tau);
}

GridSet grid_down_closure(const GridSet& s) {
  const GridBox& box = s.box();
  GridSet out = s;
  // Sweeping each coordinate downward once closes under all of -Q₊.
  for (std::size_t i = 0; i < box.rank(); ++i)
    for (std::size_t k = box.size(); k-- > 0;) {
      std::size_t up = box.step(k, i);
      if (up < box.size() && out.test(up))
        out.set(k);
    }
  return out;
}

GridSet grid_primary_component(const GridSet& d, CoordSet tau) {
  return grid_down_closure(grid_local_support(d, tau));
}

std::vector<GridComponent> grid_canonical_decomposition(const GridSet& d) {
  const GridBox& box = d.box();
  const auto faces = all_faces(box.rank());
  std::vector<GridSet> loc;
  for (CoordSet f : faces)
    loc.push_back(grid_localize(d, f));
  std::vector<GridSet> supports(faces.size(), GridSet(box));
  for (std::size_t k = 0; k < box.size(); ++k) {
    if (!d.test(k))
      continue;
    for (std::size_t a = 0; a < faces.size(); ++a) {
      if (!loc[a].test(k))
        continue;
      bool maximal = true;
      for (std::size_t b = 0; b < faces.size() && maximal; ++b)
        if (b != a && faces[a].is_subset_of(faces[b]) && loc[b].test(k))
          maximal = false;
      if (maximal)
        supports[a].set(k);
    }
  }
  std::vector<GridComponent> out;
  for (std::size_t a = 0; a < faces.size(); ++a)
    if (!supports[a].empty())
      out.push_back({faces[a], supports[a], grid_down_closure(supports[a])});
  std::sort(out.begin(), out.end(), [](const GridComponent& x, const GridComponent& y) {
    if (x.face.size() != y.face.size())
      return x.face.size() > y.face.size();
    return x.face.indices() < y.face.indices();
  });
  return out;
}

Comparison compare(const GridSet& symbolic, const GridSet& grid) {
  if (!(symbolic.box() == grid.box()))
    throw Error(ErrorKind::RankMismatch, "comparison over different boxes");
  for (std::size_t k = 0; k < grid.box().size(); ++k)
    if (symbolic.test(k) != grid.test(k))
      return {false, grid.box().point(k)};
  return {};
}

Comparison compare(const Region& symbolic, const GridSet& grid) {
  return compare(grid_from_region(symbolic, grid.box()), grid);
}

Comparison compare(const DownsetExpr& symbolic, const GridSet& grid) {
  return compare(GridSet::from_predicate(grid.box(),
                                         [&](const IntVec& q) { return member(q, symbolic); }),
                 grid);
}

} // namespace pogroup::oracle
