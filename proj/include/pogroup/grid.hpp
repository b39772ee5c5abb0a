#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "pogroup/rational.hpp"

namespace pogroup {

/// The integer box ∏ [lo_i, hi_i], with points enumerated in row-major
/// order (last coordinate fastest).
class GridBox {
public:
  GridBox() = default;
  GridBox(IntVec lo, IntVec hi);
  /// [lo, hi] in every coordinate.
  static GridBox cube(std::size_t n, std::int64_t lo, std::int64_t hi);

  std::size_t rank() const { return lo_.size(); }
  const IntVec& lo() const { return lo_; }
  const IntVec& hi() const { return hi_; }
  std::size_t size() const { return size_; }

  bool contains(const IntVec& q) const;
  std::size_t index(const IntVec& q) const;
  IntVec point(std::size_t index) const;
  /// Index of q + e_i, or size() when that leaves the box.
  std::size_t step(std::size_t index, std::size_t i) const;

  bool operator==(const GridBox&) const = default;

private:
  IntVec lo_, hi_;
  std::vector<std::size_t> strides_;
  std::size_t size_ = 0;
};

/// A subset of a grid box.
class GridSet {
public:
  GridSet() = default;
  explicit GridSet(GridBox box) : box_(std::move(box)), bits_(box_.size(), 0) {}

  static GridSet from_predicate(const GridBox& box, const std::function<bool(const IntVec&)>& pred);

  const GridBox& box() const { return box_; }
  bool test(std::size_t index) const { return bits_[index] != 0; }
  bool test(const IntVec& q) const { return bits_[box_.index(q)] != 0; }
  void set(std::size_t index, bool value = true) { bits_[index] = value ? 1 : 0; }

  std::size_t count() const;
  bool empty() const { return count() == 0; }
  std::vector<IntVec> points() const;

  GridSet operator|(const GridSet& o) const;
  GridSet operator&(const GridSet& o) const;
  bool subset_of(const GridSet& o) const;
  bool operator==(const GridSet&) const = default;

private:
  GridBox box_;
  std::vector<char> bits_;
};

} // namespace pogroup
