#include "pogroup/rational.hpp"

#include <algorithm>
#include <cctype>

#include "pogroup/error.hpp"

namespace pogroup {

const char* to_string(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::InvalidInput: return "InvalidInput";
  case ErrorKind::RankMismatch: return "RankMismatch";
  case ErrorKind::ModeMismatch: return "ModeMismatch";
  case ErrorKind::NonPointedCone: return "NonPointedCone";
  case ErrorKind::NotFullDimensional: return "NotFullDimensional";
  case ErrorKind::ConversionOverflow: return "ConversionOverflow";
  case ErrorKind::FaceNotInLattice: return "FaceNotInLattice";
  case ErrorKind::NotProvenClosed: return "NotProvenClosed";
  case ErrorKind::BoxTooSmall: return "BoxTooSmall";
  case ErrorKind::BoxTooLarge: return "BoxTooLarge";
  case ErrorKind::GeneratorOutsideHull: return "GeneratorOutsideHull";
  case ErrorKind::DegreeOutsideBox: return "DegreeOutsideBox";
  case ErrorKind::DimensionMismatch: return "DimensionMismatch";
  case ErrorKind::DecompositionUnionMismatch: return "DecompositionUnionMismatch";
  case ErrorKind::InjectivityFailure: return "InjectivityFailure";
  }
  return "Error";
}

namespace {

bool valid_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+'))
    s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

std::string strip_plus(std::string_view s) {
  if (!s.empty() && s.front() == '+')
    s.remove_prefix(1);
  return std::string(s);
}

} // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer_text(num) || !valid_integer_text(den) || den.front() == '-' ||
      den.front() == '+')
    throw Error(ErrorKind::InvalidInput, "malformed rational \"" + std::string(text) + "\"");
  Integer n(strip_plus(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0)
    throw Error(ErrorKind::InvalidInput, "zero denominator in \"" + std::string(text) + "\"");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& r) {
  if (r.get_den() == 1)
    return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

Rational floor(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return Rational(q);
}

Rational ceil(const Rational& r) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return Rational(q);
}

RatVec to_rational(const IntVec& v) {
  RatVec out;
  out.reserve(v.size());
  for (std::int64_t x : v)
    out.emplace_back(static_cast<long>(x));
  return out;
}

std::string format_point(const RatVec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i)
      out += ",";
    out += format_rational(v[i]);
  }
  return out + ")";
}

CoordSet CoordSet::from_indices(const std::vector<int>& indices) {
  std::uint32_t bits = 0;
  for (int i : indices) {
    if (i < 0 || i >= 32)
      throw Error(ErrorKind::FaceNotInLattice, "coordinate index " + std::to_string(i));
    bits |= 1u << i;
  }
  return CoordSet(bits);
}

std::vector<int> CoordSet::indices() const {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if (contains(static_cast<std::size_t>(i)))
      out.push_back(i);
  return out;
}

bool face_order_less(CoordSet a, CoordSet b) {
  if (a.size() != b.size())
    return a.size() < b.size();
  return a.indices() < b.indices();
}

std::string face_label(CoordSet face) {
  static const char* names[] = {"x", "y", "z", "w"};
  if (face.empty())
    return "0";
  std::string out;
  for (int i : face.indices())
    out += i < 4 ? std::string(names[i]) : "e" + std::to_string(i);
  return out;
}

} // namespace pogroup
