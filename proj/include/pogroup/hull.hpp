#pragma once

#include <cstddef>
#include <vector>

#include "pogroup/downset.hpp"
#include "pogroup/grid_module.hpp"

namespace pogroup {

/// A homogeneous element of ⊕ⱼ k[Dⱼ]: one coefficient per hull downset.
struct HullGenerator {
  IntVec degree;
  RatVec coeffs;
  bool operator==(const HullGenerator&) const = default;
};

/// The submodule of ⊕ⱼ k[Dⱼ] generated by the given elements, to be
/// realized on an integer box. Hull downsets live over orthant-int groups.
struct HullPresentation {
  std::vector<DownsetExpr> hull;
  std::vector<HullGenerator> generators;
  GridBox box;
};

struct RealizedModule {
  GridModule module;
  /// Per degree, the columns spanning M_q inside kᵏ (one row per hull downset).
  std::vector<Matrix> embedding;
};

/// Throws BoxTooSmall unless hi exceeds every finite apex coordinate and
/// every generator degree; GeneratorOutsideHull for a nonzero coefficient
/// on a downset that misses the generator's degree.
RealizedModule realize(const HullPresentation& h);
GridModule realize_module(const HullPresentation& h);

struct ModuleComponent {
  CoordSet face;
  /// M^τ inside M.
  Subspaces kernel;
  GridModule quotient;
  /// M_q → (M/M^τ)_q.
  std::vector<Matrix> projection;
};

struct ModuleDecomposition {
  RealizedModule realized;
  std::vector<ModuleComponent> components;
};

/// Sends M into ⊕_τ E^τ, where E^τ collects the τ-components k[P_τ(Dⱼ)] of
/// the hull, and returns the quotients M/M^τ by the kernels. Throws
/// InjectivityFailure if the kernels have nonzero common intersection.
ModuleDecomposition primary_decomposition_module(const HullPresentation& h);

} // namespace pogroup
