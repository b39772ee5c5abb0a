#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pogroup/rational.hpp"

namespace pogroup {

enum class EndpointMode { Integer, Rational };

/// A position on the extended line: -∞, +∞, or immediately before/after a
/// finite value. Intervals are half-open in cuts: x ∈ [lo, hi) iff
/// lo <= before(x) and after(x) <= hi. Integer-mode regions only ever
/// contain "before" cuts at integers, so [l, u] over Z is [before(l), before(u+1)).
struct Cut {
  enum Kind : int { NegInf = 0, Finite = 1, PosInf = 2 };
  Kind kind = NegInf;
  Rational value;
  bool after = false;

  static Cut neg_inf() { return {NegInf, 0, false}; }
  static Cut pos_inf() { return {PosInf, 0, false}; }
  static Cut before(const Rational& v) { return {Finite, v, false}; }
  static Cut after_value(const Rational& v) { return {Finite, v, true}; }

  bool finite() const { return kind == Finite; }
};

bool operator==(const Cut& a, const Cut& b);
bool operator<(const Cut& a, const Cut& b);
inline bool operator<=(const Cut& a, const Cut& b) { return !(b < a); }

struct Interval {
  Cut lo = Cut::neg_inf();
  Cut hi = Cut::pos_inf();

  bool empty() const { return !(lo < hi); }
  bool contains(const Rational& x) const;
  bool operator==(const Interval&) const = default;
};

/// Product of per-coordinate intervals.
using GeneralizedBox = std::vector<Interval>;

bool box_empty(const GeneralizedBox& b);
bool box_contains(const GeneralizedBox& b, const RatVec& q);

/// The closed interval [lo, hi] in the given mode; nullopt ends are infinite.
Interval closed_interval(const std::optional<Rational>& lo, const std::optional<Rational>& hi,
                         EndpointMode mode);

/// Finite union of generalized boxes, always held in normal form: pairwise
/// disjoint nonempty boxes produced by a lexicographic sweep, which makes the
/// representation a function of the point set alone.
class Region {
public:
  Region(std::size_t rank, EndpointMode mode) : rank_(rank), mode_(mode) {}
  Region(std::size_t rank, EndpointMode mode, std::vector<GeneralizedBox> boxes);

  static Region whole(std::size_t rank, EndpointMode mode);

  std::size_t rank() const { return rank_; }
  EndpointMode mode() const { return mode_; }
  const std::vector<GeneralizedBox>& boxes() const { return boxes_; }

  bool empty() const { return boxes_.empty(); }
  bool member(const RatVec& q) const;

  /// Structural equality of normal forms.
  bool operator==(const Region&) const = default;

private:
  std::size_t rank_;
  EndpointMode mode_;
  std::vector<GeneralizedBox> boxes_;
};

enum class BooleanOp { Union, Intersect, Difference };

Region region_boolean(BooleanOp op, const Region& a, const Region& b);
Region region_union(const Region& a, const Region& b);
Region region_intersect(const Region& a, const Region& b);
Region region_difference(const Region& a, const Region& b);

bool region_is_empty(const Region& a);
/// Equality by emptiness of the symmetric difference.
bool region_equals(const Region& a, const Region& b);
bool region_subset(const Region& a, const Region& b);

/// a - Q₊ for the orthant: drops every lower bound.
Region down_closure(const Region& a);

/// Re-runs the normalizing sweep on raw (possibly overlapping) boxes.
std::vector<GeneralizedBox> normalize_boxes(std::size_t rank, std::vector<GeneralizedBox> boxes);

/// All finite cut values, per coordinate, sorted and unique.
std::vector<std::vector<Rational>> finite_endpoints(const Region& a);

} // namespace pogroup
