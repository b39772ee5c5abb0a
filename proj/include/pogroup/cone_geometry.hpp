#pragma once

#include <cstddef>
#include <vector>

#include "pogroup/cone.hpp"
#include "pogroup/grid.hpp"

namespace pogroup {

/// a + τ − Q₊ over a general cone, with τ given by face-lattice id.
struct GeneralPiece {
  IntVec apex;
  std::size_t face = 0;
  bool operator==(const GeneralPiece&) const = default;
};

struct GeneralDownset {
  ConePresentation cone;
  FaceLattice lattice;
  std::vector<GeneralPiece> pieces;
};

GeneralDownset make_general_downset(ConePresentation cone, std::vector<GeneralPiece> pieces);

/// Decides q ∈ a + τ − Q₊, i.e. whether a − q + span(τ) meets the cone,
/// by Fourier–Motzkin elimination of the span coefficients.
bool piece_member(const IntVec& q, const GeneralPiece& piece, const ConePresentation& cone,
                  const FaceLattice& lattice, std::size_t row_budget = 20000);

bool member(const IntVec& q, const GeneralDownset& d);

/// Sub-union of pieces whose face contains τ. Refuses (NotProvenClosed)
/// unless the lattice's closedness is proven.
GeneralDownset localize_general(const GeneralDownset& d, std::size_t tau);

/// Whether q + λ w ∈ D for all λ >= 0, decided by pushing λ past the last
/// threshold at which any piece constraint can change. w must lie in the cone.
bool pushed_member(const IntVec& q, const IntVec& w, const GeneralDownset& d);

struct GeneralSupports {
  GridSet global;
  GridSet local;
};

/// Pointwise Γ_τ D and Γ_τ(D_τ) on the box via pushes along ray generators.
/// The box must reach one step beyond every apex in each direction.
GeneralSupports grid_supports_general(const GeneralDownset& d, std::size_t tau, const GridBox& box);

/// Integer generators approximating the cone over a regular m-gon at
/// height `scale` (apex at the origin).
std::vector<IntVec> polygon_cone_generators(std::size_t m, std::int64_t scale = 100);

} // namespace pogroup
