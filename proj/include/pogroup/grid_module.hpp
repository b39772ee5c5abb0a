#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "pogroup/grid.hpp"
#include "pogroup/matrix.hpp"

namespace pogroup {

/// A module over Z^n (orthant order) restricted to a finite box: one
/// rational vector space per degree and a map M_q → M_{q+e_i} for each
/// step inside the box. Beyond the upper corner the module is taken to be
/// constant, so pushes that leave the box act as the identity.
class GridModule {
public:
  GridModule() = default;
  GridModule(GridBox box, std::vector<std::size_t> dims, std::vector<std::vector<Matrix>> maps);

  static GridModule zero(const GridBox& box);

  const GridBox& box() const { return box_; }
  std::size_t rank() const { return box_.rank(); }
  std::size_t dim(std::size_t index) const { return dims_[index]; }
  std::size_t dim(const IntVec& q) const { return dims_[box_.index(q)]; }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t total_dim() const;

  /// M_q → M_{q+e_i}; only defined when q + e_i is in the box.
  const Matrix& map(std::size_t index, std::size_t i) const { return maps_[index][i]; }

  /// Structure map M_q → M_{q'} for q ⪯ q', composed along a monotone path
  /// with q' clamped into the box.
  Matrix push(const IntVec& from, const IntVec& to) const;

  bool is_commutative() const;

private:
  GridBox box_;
  std::vector<std::size_t> dims_;
  std::vector<std::vector<Matrix>> maps_;
};

/// A graded subspace: per degree, independent columns in M_q coordinates.
using Subspaces = std::vector<Matrix>;

Subspaces zero_subspaces(const GridModule& m);
Subspaces full_subspaces(const GridModule& m);
bool is_submodule(const GridModule& m, const Subspaces& s);
bool same_subspaces(const Subspaces& a, const Subspaces& b);
Subspaces intersect(const Subspaces& a, const Subspaces& b);
/// Submodule generated by the given homogeneous elements.
Subspaces generated_submodule(const GridModule& m,
                              const std::vector<std::pair<IntVec, RatVec>>& elements);

/// The module structure on graded subspaces of an ambient family of
/// spaces with maps between them. bases[q] must have independent columns.
GridModule subspace_module(const GridBox& box, const std::vector<Matrix>& bases,
                           const std::function<Matrix(std::size_t index, std::size_t i)>& ambient_map);

/// S as a module in its own right (coordinates w.r.t. the columns of S).
GridModule submodule_module(const GridModule& m, const Subspaces& s);

struct Quotient {
  GridModule module;
  /// M_q → (M/S)_q.
  std::vector<Matrix> projection;
};
Quotient quotient_module(const GridModule& m, const Subspaces& s);

/// q with the coordinates in τ moved to the box's upper corner.
IntVec clamp(const GridBox& box, const IntVec& q, CoordSet tau);

struct Localization {
  GridModule module;
  /// M_q → (M_τ)_q = M_{clamp_τ(q)}.
  std::vector<Matrix> comparison;
};
Localization localize_module(const GridModule& m, CoordSet tau);

/// Γ_τ M by the ray reduction ⋂_{j∉τ} ker(M → M_{e_j}).
Subspaces global_support_module(const GridModule& m, CoordSet tau);
/// Γ_τ M as ⋂ ker(M → M_τ') over every face τ' ⊄ τ.
Subspaces global_support_all_faces(const GridModule& m, CoordSet tau);

struct LocalSupport {
  GridModule module;
  /// Γ_τ(M_τ) inside M_τ.
  Subspaces in_localization;
};
LocalSupport local_support_module(const GridModule& m, CoordSet tau);

struct ElementClass {
  bool persistent = false;
  bool transient = false;
  bool coprimary = false;
};
ElementClass classify_element(const GridModule& m, const IntVec& q, const RatVec& v, CoordSet tau);

/// A degree q' ⪰ q at which the image of v is τ-coprimary, if one exists.
std::optional<IntVec> coprimary_multiple(const GridModule& m, const IntVec& q, const RatVec& v,
                                         CoordSet tau);

struct EssentialityWitness {
  IntVec degree;
  RatVec vector;
};

/// A nonzero homogeneous element none of whose images is a nonzero element
/// of s, or nullopt when s is essential in m.
std::optional<EssentialityWitness> essentiality_witness(const GridModule& m, const Subspaces& s);

inline constexpr std::size_t kDefaultCoprimaryDegreeBudget = 16;

/// M ↪ M_τ and Γ_τ(M_τ) essential in M_τ. Throws BoxTooLarge when the box
/// has more degrees than max_degrees.
bool is_coprimary_module(const GridModule& m, CoordSet tau,
                         std::size_t max_degrees = kDefaultCoprimaryDegreeBudget);

/// k[D] on the box for a downset given by a membership predicate.
GridModule indicator_module(const GridBox& box, const std::function<bool(const IntVec&)>& in_d);

} // namespace pogroup
