#pragma once

#include <optional>
#include <vector>

#include "pogroup/downset.hpp"
#include "pogroup/grid.hpp"

namespace pogroup::oracle {

/// Brute-force evaluation of the localization/support definitions on a
/// finite integer box for orthant groups. Points beyond the upper corner
/// are treated as equal to their projection onto the box, which is exact
/// once the box exceeds every finite apex coordinate by at least one.

/// The box [min − margin, max + margin] over all finite apex coordinates
/// (and 0, so the axes are always inside).
GridBox margin_box(const DownsetExpr& d, std::int64_t margin = 1);

/// D ∩ box; throws BoxTooSmall if the box violates the margin rule.
GridSet grid_from_downset(const DownsetExpr& d, const GridBox& box);
GridSet grid_from_region(const Region& r, const GridBox& box);

bool is_downset(const GridSet& d);

GridSet grid_localize(const GridSet& d, CoordSet tau);
GridSet grid_global_support(const GridSet& d, CoordSet tau);
GridSet grid_local_support(const GridSet& d, CoordSet tau);
GridSet grid_down_closure(const GridSet& s);
GridSet grid_primary_component(const GridSet& d, CoordSet tau);

struct GridComponent {
  CoordSet face;
  GridSet support;
  GridSet component;
};

/// Assigns every point of D to the maximal faces τ with q ∈ D_τ and
/// returns one component per face that receives points.
std::vector<GridComponent> grid_canonical_decomposition(const GridSet& d);

struct Comparison {
  bool equal = true;
  std::optional<IntVec> mismatch;
};

Comparison compare(const GridSet& symbolic, const GridSet& grid);
Comparison compare(const Region& symbolic, const GridSet& grid);
Comparison compare(const DownsetExpr& symbolic, const GridSet& grid);

} // namespace pogroup::oracle
