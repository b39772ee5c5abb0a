#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pogroup/cone.hpp"
#include "pogroup/region.hpp"

namespace pogroup {

/// The coprincipal downset a + τ − Q₊ over an orthant: all q with
/// q_i <= a_i (q_i < a_i when strict) for every i outside the face χ.
struct CoprincipalPiece {
  RatVec apex;
  CoordSet face;
  /// Strict upper bounds, rational groups only; empty means all closed.
  std::vector<bool> strict;

  bool is_strict(std::size_t i) const { return i < strict.size() && strict[i]; }
  bool operator==(const CoprincipalPiece&) const = default;
};

/// A downset over an orthant group, as a finite union of coprincipal pieces.
struct DownsetExpr {
  ConePresentation group;
  std::vector<CoprincipalPiece> pieces;

  std::size_t rank() const { return group.n; }
  EndpointMode mode() const {
    return group.integral() ? EndpointMode::Integer : EndpointMode::Rational;
  }
  bool operator==(const DownsetExpr&) const = default;
};

/// Validates ranks, face indices and integrality, canonicalizes apexes
/// (coordinates on the face become 0, integer strict bounds become closed),
/// drops pieces contained in others and sorts.
DownsetExpr normalize(DownsetExpr d);

/// Pᵢ ⊆ Pⱼ for normalized pieces.
bool piece_subset(const CoprincipalPiece& a, const CoprincipalPiece& b);

GeneralizedBox piece_box(const CoprincipalPiece& p, std::size_t n, EndpointMode mode);
Region to_region(const DownsetExpr& d);

bool member(const RatVec& q, const DownsetExpr& d);
bool member(const IntVec& q, const DownsetExpr& d);

/// D_τ: the pieces whose face contains τ.
DownsetExpr localize(const DownsetExpr& d, CoordSet tau);

/// Γ_τ D, by the ray reduction D ∖ ⋃_{j∉τ} D_{e_j}.
Region global_support(const DownsetExpr& d, CoordSet tau);

/// Γ_τ(D_τ).
Region local_support(const DownsetExpr& d, CoordSet tau);

/// Converts a down-closed region back into pieces.
DownsetExpr from_down_closed(const Region& r, const ConePresentation& group);

/// P_τ(D) = Γ_τ(D_τ) − Q₊.
DownsetExpr primary_component(const DownsetExpr& d, CoordSet tau);

struct Component {
  CoordSet face;
  DownsetExpr downset;
};

/// One component per face with nonempty local support, faces ordered from
/// largest to smallest (ties lexicographic). Throws
/// DecompositionUnionMismatch if the union fails to reproduce D.
std::vector<Component> canonical_decomposition(const DownsetExpr& d);

/// Greedily drops components (smallest faces first) whose removal keeps the
/// union equal to D.
std::vector<Component> prune_redundant(std::vector<Component> components, const DownsetExpr& d);

/// The unique face τ with D = P_τ(D), if any. The empty downset has none.
std::optional<CoordSet> is_coprimary_downset(const DownsetExpr& d);

/// All 2ⁿ faces of the orthant in canonical order.
std::vector<CoordSet> orthant_faces(std::size_t n);

} // namespace pogroup
