#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace pogroup {

using Rational = mpq_class;
using Integer = mpz_class;
using RatVec = std::vector<Rational>;
using IntVec = std::vector<std::int64_t>;

/// Parses "p", "-p" or "p/q"; the result is in lowest terms.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string format_rational(const Rational& r);

bool is_integer(const Rational& r);
Rational floor(const Rational& r);
Rational ceil(const Rational& r);

RatVec to_rational(const IntVec& v);
std::string format_point(const RatVec& v);

/// A subset of coordinate indices {0..31}. Faces of the orthant are
/// identified with their characteristic subsets.
class CoordSet {
public:
  constexpr CoordSet() = default;
  constexpr explicit CoordSet(std::uint32_t bits) : bits_(bits) {}

  static CoordSet from_indices(const std::vector<int>& indices);
  static constexpr CoordSet full(std::size_t n) {
    return CoordSet(n >= 32 ? ~0u : ((1u << n) - 1u));
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return std::popcount(bits_); }
  constexpr bool is_subset_of(CoordSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr CoordSet with(std::size_t i) const {
    return CoordSet(bits_ | (1u << i));
  }
  constexpr CoordSet operator|(CoordSet o) const { return CoordSet(bits_ | o.bits_); }
  constexpr CoordSet operator&(CoordSet o) const { return CoordSet(bits_ & o.bits_); }
  constexpr bool operator==(const CoordSet&) const = default;

  std::vector<int> indices() const;

private:
  std::uint32_t bits_ = 0;
};

/// Canonical face order: smaller sets first, ties broken lexicographically
/// on the sorted index lists.
bool face_order_less(CoordSet a, CoordSet b);

/// "0" for the trivial face, otherwise coordinate letters ("x", "xy", ...).
std::string face_label(CoordSet face);

} // namespace pogroup
