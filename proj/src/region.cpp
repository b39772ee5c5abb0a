#include "pogroup/region.hpp"

#include <algorithm>

#include "pogroup/error.hpp"

namespace pogroup {

bool operator==(const Cut& a, const Cut& b) {
  if (a.kind != b.kind)
    return false;
  return a.kind != Cut::Finite || (a.value == b.value && a.after == b.after);
}

bool operator<(const Cut& a, const Cut& b) {
  if (a.kind != b.kind)
    return a.kind < b.kind;
  if (a.kind != Cut::Finite)
    return false;
  if (a.value != b.value)
    return a.value < b.value;
  return !a.after && b.after;
}

bool Interval::contains(const Rational& x) const {
  return lo <= Cut::before(x) && Cut::after_value(x) <= hi;
}

Interval closed_interval(const std::optional<Rational>& lo, const std::optional<Rational>& hi,
                         EndpointMode mode) {
  Interval out;
  if (lo)
    out.lo = Cut::before(mode == EndpointMode::Integer ? ceil(*lo) : *lo);
  if (hi)
    out.hi = mode == EndpointMode::Integer ? Cut::before(floor(*hi) + 1) : Cut::after_value(*hi);
  return out;
}

bool box_empty(const GeneralizedBox& b) {
  return std::any_of(b.begin(), b.end(), [](const Interval& iv) { return iv.empty(); });
}

bool box_contains(const GeneralizedBox& b, const RatVec& q) {
  for (std::size_t i = 0; i < b.size(); ++i)
    if (!b[i].contains(q[i]))
      return false;
  return true;
}

namespace {

using Suffix = std::vector<Interval>;

std::vector<Suffix> sweep(const std::vector<const GeneralizedBox*>& boxes, std::size_t d,
                          std::size_t rank) {
  if (d == rank) {
    if (boxes.empty())
      return {};
    return {Suffix{}};
  }
  std::vector<Cut> cuts;
  for (const auto* b : boxes) {
    if ((*b)[d].lo.finite())
      cuts.push_back((*b)[d].lo);
    if ((*b)[d].hi.finite())
      cuts.push_back((*b)[d].hi);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<Suffix> out;
  Interval run;
  std::vector<Suffix> run_cross;
  bool have_run = false;
  auto flush = [&] {
    if (!have_run)
      return;
    for (const auto& s : run_cross) {
      Suffix full;
      full.reserve(s.size() + 1);
      full.push_back(run);
      full.insert(full.end(), s.begin(), s.end());
      out.push_back(std::move(full));
    }
  };

  for (std::size_t k = 0; k <= cuts.size(); ++k) {
    Interval cell{k == 0 ? Cut::neg_inf() : cuts[k - 1],
                  k == cuts.size() ? Cut::pos_inf() : cuts[k]};
    std::vector<const GeneralizedBox*> active;
    for (const auto* b : boxes)
      if ((*b)[d].lo <= cell.lo && cell.hi <= (*b)[d].hi)
        active.push_back(b);
    auto cross = sweep(active, d + 1, rank);
    if (have_run && cross == run_cross) {
      run.hi = cell.hi;
      continue;
    }
    flush();
    run = cell;
    run_cross = std::move(cross);
    have_run = true;
  }
  flush();
  return out;
}

GeneralizedBox intersect_boxes(const GeneralizedBox& a, const GeneralizedBox& b) {
  GeneralizedBox out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = {std::max(a[i].lo, b[i].lo), std::min(a[i].hi, b[i].hi)};
  return out;
}

// a ∖ b as at most 2n disjoint boxes, splitting one coordinate at a time.
void subtract_box(const GeneralizedBox& a, const GeneralizedBox& b,
                  std::vector<GeneralizedBox>& out) {
  if (box_empty(intersect_boxes(a, b))) {
    out.push_back(a);
    return;
  }
  GeneralizedBox cur = a;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (cur[i].lo < b[i].lo) {
      GeneralizedBox piece = cur;
      piece[i].hi = std::min(cur[i].hi, b[i].lo);
      if (!box_empty(piece))
        out.push_back(std::move(piece));
    }
    if (b[i].hi < cur[i].hi) {
      GeneralizedBox piece = cur;
      piece[i].lo = std::max(cur[i].lo, b[i].hi);
      if (!box_empty(piece))
        out.push_back(std::move(piece));
    }
    cur[i] = {std::max(cur[i].lo, b[i].lo), std::min(cur[i].hi, b[i].hi)};
  }
}

void check_compatible(const Region& a, const Region& b) {
  if (a.rank() != b.rank())
    throw Error(ErrorKind::RankMismatch, "regions of rank " + std::to_string(a.rank()) + " and " +
                                             std::to_string(b.rank()));
  if (a.mode() != b.mode())
    throw Error(ErrorKind::ModeMismatch, "integer and rational regions mixed");
}

} // namespace

std::vector<GeneralizedBox> normalize_boxes(std::size_t rank, std::vector<GeneralizedBox> boxes) {
  std::vector<const GeneralizedBox*> live;
  for (const auto& b : boxes) {
    if (b.size() != rank)
      throw Error(ErrorKind::RankMismatch, "box rank differs from region rank");
    if (!box_empty(b))
      live.push_back(&b);
  }
  return sweep(live, 0, rank);
}

Region::Region(std::size_t rank, EndpointMode mode, std::vector<GeneralizedBox> boxes)
    : rank_(rank), mode_(mode), boxes_(normalize_boxes(rank, std::move(boxes))) {}

Region Region::whole(std::size_t rank, EndpointMode mode) {
  return Region(rank, mode, {GeneralizedBox(rank)});
}

bool Region::member(const RatVec& q) const {
  if (q.size() != rank_)
    throw Error(ErrorKind::RankMismatch, "point rank " + std::to_string(q.size()) +
                                             " vs region rank " + std::to_string(rank_));
  return std::any_of(boxes_.begin(), boxes_.end(),
                     [&](const GeneralizedBox& b) { return box_contains(b, q); });
}

Region region_boolean(BooleanOp op, const Region& a, const Region& b) {
  check_compatible(a, b);
  std::vector<GeneralizedBox> raw;
  switch (op) {
  case BooleanOp::Union:
    raw = a.boxes();
    raw.insert(raw.end(), b.boxes().begin(), b.boxes().end());
    break;
  case BooleanOp::Intersect:
    for (const auto& x : a.boxes())
      for (const auto& y : b.boxes()) {
        auto z = intersect_boxes(x, y);
        if (!box_empty(z))
          raw.push_back(std::move(z));
      }
    break;
  case BooleanOp::Difference:
    for (const auto& x : a.boxes()) {
      std::vector<GeneralizedBox> pieces{x};
      for (const auto& y : b.boxes()) {
        std::vector<GeneralizedBox> next;
        for (const auto& p : pieces)
          subtract_box(p, y, next);
        pieces = std::move(next);
      }
      raw.insert(raw.end(), pieces.begin(), pieces.end());
    }
    break;
  }
  return Region(a.rank(), a.mode(), std::move(raw));
}

Region region_union(const Region& a, const Region& b) {
  return region_boolean(BooleanOp::Union, a, b);
}
Region region_intersect(const Region& a, const Region& b) {
  return region_boolean(BooleanOp::Intersect, a, b);
}
Region region_difference(const Region& a, const Region& b) {
  return region_boolean(BooleanOp::Difference, a, b);
}

bool region_is_empty(const Region& a) { return a.empty(); }

bool region_equals(const Region& a, const Region& b) {
  check_compatible(a, b);
  return region_difference(a, b).empty() && region_difference(b, a).empty();
}

bool region_subset(const Region& a, const Region& b) { return region_difference(a, b).empty(); }

Region down_closure(const Region& a) {
  std::vector<GeneralizedBox> raw = a.boxes();
  for (auto& box : raw)
    for (auto& iv : box)
      iv.lo = Cut::neg_inf();
  return Region(a.rank(), a.mode(), std::move(raw));
}

std::vector<std::vector<Rational>> finite_endpoints(const Region& a) {
  std::vector<std::vector<Rational>> out(a.rank());
  for (const auto& box : a.boxes())
    for (std::size_t i = 0; i < a.rank(); ++i) {
      if (box[i].lo.finite())
        out[i].push_back(box[i].lo.value);
      if (box[i].hi.finite())
        out[i].push_back(box[i].hi.value);
    }
  for (auto& v : out) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
  return out;
}

} // namespace pogroup
