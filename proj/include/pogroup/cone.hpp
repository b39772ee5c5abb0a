#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pogroup/rational.hpp"

namespace pogroup {

enum class ConeKind { OrthantInt, OrthantRat, ConeInt };

const char* to_string(ConeKind kind);

/// A partially ordered group Q (Z^n or Q^n) together with its positive cone.
/// For ConeInt the cone is C ∩ Z^n where C is the rational polyhedral cone
/// with the stored generators (extreme rays) and halfspaces (facet normals,
/// <h, x> >= 0). Both descriptions are primitive, sorted and deduplicated.
struct ConePresentation {
  ConeKind kind = ConeKind::OrthantInt;
  std::size_t n = 0;
  std::vector<IntVec> generators;
  std::vector<IntVec> halfspaces;

  bool is_orthant() const { return kind != ConeKind::ConeInt; }
  bool integral() const { return kind != ConeKind::OrthantRat; }

  static ConePresentation orthant_int(std::size_t n);
  static ConePresentation orthant_rat(std::size_t n);
  /// Computes facets by Fourier–Motzkin and keeps only extreme generators.
  static ConePresentation from_generators(std::size_t n, const std::vector<IntVec>& generators,
                                          std::size_t row_budget = 20000);
  static ConePresentation from_halfspaces(std::size_t n, const std::vector<IntVec>& halfspaces,
                                          std::size_t row_budget = 20000);

  bool operator==(const ConePresentation&) const = default;
};

/// Largest ambient rank accepted for cone-int input.
inline constexpr std::size_t kMaxConeRank = 4;
/// Largest rank for which the orthant face lattice (2^n faces) is built.
inline constexpr std::size_t kMaxOrthantRank = 12;

bool in_cone(const ConePresentation& cone, const RatVec& x);

/// q ⪯ q2, i.e. q2 - q lies in the positive cone.
bool leq(const RatVec& q, const RatVec& q2, const ConePresentation& cone);
bool leq(const IntVec& q, const IntVec& q2, const ConePresentation& cone);

/// Facet normals of the cone generated by `vectors` (which must span
/// the ambient space), by Fourier–Motzkin elimination of the
/// combination coefficients. Output is primitive, sorted and unique.
/// Applied to facet normals it yields the extreme rays.
std::vector<IntVec> fourier_motzkin(const std::vector<IntVec>& vectors, std::size_t n,
                                    std::size_t row_budget = 20000);

IntVec primitive(const std::vector<Integer>& v);

enum class ClosedFlag { Proven, Refuted, SampledOk };

const char* to_string(ClosedFlag flag);

struct Face {
  std::size_t id = 0;
  /// Orthant kinds: the coordinates whose unit vectors lie on the face.
  CoordSet char_set;
  /// Indices of halfspaces that vanish on the face.
  std::vector<int> tight;
  /// Indices of cone generators lying on the face.
  std::vector<int> generator_ids;
  std::size_t dim = 0;
};

struct FaceLattice {
  std::vector<Face> faces;
  /// leq[i][j]: face i is contained in face j.
  std::vector<std::vector<bool>> leq;
  std::vector<std::size_t> rays;
  ClosedFlag closed_flag = ClosedFlag::Proven;

  std::size_t trivial() const { return 0; }
  std::size_t full() const { return faces.size() - 1; }
  /// Lattice id of the orthant face with the given characteristic set.
  std::optional<std::size_t> find(CoordSet char_set) const;
  /// Smallest face containing both.
  std::size_t join(std::size_t a, std::size_t b) const;
};

FaceLattice enumerate_faces(const ConePresentation& cone);

/// Ray generator (primitive integer vector) of a ray face.
IntVec ray_generator(const ConePresentation& cone, const Face& ray);

/// Sum of the face's generators: a relative-interior lattice point.
IntVec interior_point(const ConePresentation& cone, const Face& face);

bool face_contains(const ConePresentation& cone, const Face& face, const RatVec& x);

struct ClosednessWitness {
  std::size_t face_id = 0;
  IntVec point;
};

struct ClosednessReport {
  ClosedFlag flag = ClosedFlag::Proven;
  std::optional<ClosednessWitness> witness;
};

/// Orthant kinds and cone-int cones whose two descriptions agree are proven
/// closed. Otherwise falls back to sample_closedness.
ClosednessReport is_closed(const ConePresentation& cone, const FaceLattice& lattice,
                           std::size_t sample_budget = 2000);

/// Checks on lattice points s ∈ Q₊∖τ, |s_i| <= radius, that some multiple
/// λ s (1 <= λ <= max_multiple) dominates a ray generator off τ.
ClosednessReport sample_closedness(const ConePresentation& cone, const FaceLattice& lattice,
                                   std::int64_t radius, std::size_t sample_budget,
                                   std::int64_t max_multiple = 1000);

} // namespace pogroup
