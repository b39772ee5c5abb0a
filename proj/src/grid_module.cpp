#include "pogroup/grid_module.hpp"

#include <algorithm>

#include "pogroup/error.hpp"

namespace pogroup {

GridModule::GridModule(GridBox box, std::vector<std::size_t> dims,
                       std::vector<std::vector<Matrix>> maps)
    : box_(std::move(box)), dims_(std::move(dims)), maps_(std::move(maps)) {
  if (dims_.size() != box_.size() || maps_.size() != box_.size())
    throw Error(ErrorKind::DimensionMismatch, "module data does not match box size");
  for (std::size_t k = 0; k < box_.size(); ++k) {
    if (maps_[k].size() != box_.rank())
      throw Error(ErrorKind::DimensionMismatch, "one map per coordinate expected");
    for (std::size_t i = 0; i < box_.rank(); ++i) {
      std::size_t up = box_.step(k, i);
      if (up == box_.size())
        continue;
      const Matrix& t = maps_[k][i];
      if (t.rows() != dims_[up] || t.cols() != dims_[k])
        throw Error(ErrorKind::DimensionMismatch, "transition shape at degree " +
                                                      format_point(to_rational(box_.point(k))));
    }
  }
}

GridModule GridModule::zero(const GridBox& box) {
  std::vector<std::vector<Matrix>> maps(box.size(), std::vector<Matrix>(box.rank()));
  return GridModule(box, std::vector<std::size_t>(box.size(), 0), std::move(maps));
}

std::size_t GridModule::total_dim() const {
  std::size_t s = 0;
  for (auto d : dims_)
    s += d;
  return s;
}

Matrix GridModule::push(const IntVec& from, const IntVec& to) const {
  if (!box_.contains(from))
    throw Error(ErrorKind::DegreeOutsideBox, "degree " + format_point(to_rational(from)));
  if (to.size() != rank())
    throw Error(ErrorKind::RankMismatch, "target degree rank");
  std::size_t k = box_.index(from);
  Matrix acc = Matrix::identity(dims_[k]);
  for (std::size_t i = 0; i < rank(); ++i) {
    if (to[i] < from[i])
      throw Error(ErrorKind::InvalidInput, "push target is not above the source");
    std::int64_t target = std::min(to[i], box_.hi()[i]);
    for (std::int64_t c = from[i]; c < target; ++c) {
      acc = maps_[k][i] * acc;
      k = box_.step(k, i);
    }
  }
  return acc;
}

bool GridModule::is_commutative() const {
  for (std::size_t k = 0; k < box_.size(); ++k)
    for (std::size_t i = 0; i < rank(); ++i)
      for (std::size_t j = i + 1; j < rank(); ++j) {
        std::size_t ki = box_.step(k, i), kj = box_.step(k, j);
        if (ki == box_.size() || kj == box_.size())
          continue;
        if (maps_[ki][j] * maps_[k][i] != maps_[kj][i] * maps_[k][j])
          return false;
      }
  return true;
}

Subspaces zero_subspaces(const GridModule& m) {
  Subspaces s;
  for (auto d : m.dims())
    s.emplace_back(d, 0);
  return s;
}

Subspaces full_subspaces(const GridModule& m) {
  Subspaces s;
  for (auto d : m.dims())
    s.push_back(Matrix::identity(d));
  return s;
}

bool is_submodule(const GridModule& m, const Subspaces& s) {
  const GridBox& box = m.box();
  for (std::size_t k = 0; k < box.size(); ++k)
    for (std::size_t i = 0; i < box.rank(); ++i) {
      std::size_t up = box.step(k, i);
      if (up < box.size() && !contains(s[up], m.map(k, i) * s[k]))
        return false;
    }
  return true;
}

bool same_subspaces(const Subspaces& a, const Subspaces& b) {
  if (a.size() != b.size())
    return false;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k].rows() != b[k].rows() || !same_span(a[k], b[k]))
      return false;
  return true;
}

Subspaces intersect(const Subspaces& a, const Subspaces& b) {
  Subspaces out;
  for (std::size_t k = 0; k < a.size(); ++k)
    out.push_back(intersect(a[k], b[k]));
  return out;
}

Subspaces generated_submodule(const GridModule& m,
                              const std::vector<std::pair<IntVec, RatVec>>& elements) {
  const GridBox& box = m.box();
  Subspaces out = zero_subspaces(m);
  for (const auto& [deg, v] : elements) {
    if (v.size() != m.dim(deg))
      throw Error(ErrorKind::DimensionMismatch, "element length differs from degree dimension");
    for (std::size_t k = 0; k < box.size(); ++k) {
      IntVec q = box.point(k);
      bool above = true;
      for (std::size_t i = 0; i < q.size(); ++i)
        above = above && deg[i] <= q[i];
      if (!above)
        continue;
      out[k] = hstack(out[k], Matrix::column(m.push(deg, q) * v));
    }
  }
  for (auto& s : out)
    s = column_basis(s);
  return out;
}

GridModule subspace_module(const GridBox& box, const std::vector<Matrix>& bases,
                           const std::function<Matrix(std::size_t, std::size_t)>& ambient_map) {
  std::vector<std::size_t> dims;
  std::vector<std::vector<Matrix>> maps(box.size(), std::vector<Matrix>(box.rank()));
  for (const auto& b : bases)
    dims.push_back(b.cols());
  for (std::size_t k = 0; k < box.size(); ++k)
    for (std::size_t i = 0; i < box.rank(); ++i) {
      std::size_t up = box.step(k, i);
      if (up == box.size())
        continue;
      auto coeffs = solve_in_basis(bases[up], ambient_map(k, i) * bases[k]);
      if (!coeffs)
        throw Error(ErrorKind::DimensionMismatch, "graded subspace is not closed under the maps");
      maps[k][i] = std::move(*coeffs);
    }
  return GridModule(box, std::move(dims), std::move(maps));
}

GridModule submodule_module(const GridModule& m, const Subspaces& s) {
  Subspaces bases;
  for (const auto& b : s)
    bases.push_back(column_basis(b));
  return subspace_module(m.box(), bases, [&](std::size_t k, std::size_t i) { return m.map(k, i); });
}

Quotient quotient_module(const GridModule& m, const Subspaces& s) {
  const GridBox& box = m.box();
  std::vector<Matrix> complement, projection;
  for (std::size_t k = 0; k < box.size(); ++k) {
    Matrix sub = column_basis(s[k]);
    Matrix comp = complement_basis(sub);
    Matrix full = hstack(sub, comp);
    Matrix coords = *solve_in_basis(full, Matrix::identity(m.dim(k)));
    Matrix p(comp.cols(), m.dim(k));
    for (std::size_t r = 0; r < comp.cols(); ++r)
      for (std::size_t c = 0; c < m.dim(k); ++c)
        p(r, c) = coords(sub.cols() + r, c);
    complement.push_back(std::move(comp));
    projection.push_back(std::move(p));
  }
  std::vector<std::size_t> dims;
  std::vector<std::vector<Matrix>> maps(box.size(), std::vector<Matrix>(box.rank()));
  for (std::size_t k = 0; k < box.size(); ++k) {
    dims.push_back(complement[k].cols());
    for (std::size_t i = 0; i < box.rank(); ++i) {
      std::size_t up = box.step(k, i);
      if (up < box.size())
        maps[k][i] = projection[up] * m.map(k, i) * complement[k];
    }
  }
  return {GridModule(box, std::move(dims), std::move(maps)), std::move(projection)};
}

IntVec clamp(const GridBox& box, const IntVec& q, CoordSet tau) {
  IntVec out = q;
  for (std::size_t i = 0; i < q.size(); ++i)
    if (tau.contains(i))
      out[i] = box.hi()[i];
  return out;
}

Localization localize_module(const GridModule& m, CoordSet tau) {
  const GridBox& box = m.box();
  if (!tau.is_subset_of(CoordSet::full(box.rank())))
    throw Error(ErrorKind::FaceNotInLattice, "face outside the module's rank");
  std::vector<std::size_t> dims;
  std::vector<std::vector<Matrix>> maps(box.size(), std::vector<Matrix>(box.rank()));
  std::vector<Matrix> comparison;
  for (std::size_t k = 0; k < box.size(); ++k) {
    IntVec q = box.point(k);
    IntVec c = clamp(box, q, tau);
    std::size_t ck = box.index(c);
    dims.push_back(m.dim(ck));
    comparison.push_back(m.push(q, c));
    for (std::size_t i = 0; i < box.rank(); ++i) {
      if (box.step(k, i) == box.size())
        continue;
      maps[k][i] = tau.contains(i) ? Matrix::identity(m.dim(ck)) : m.map(ck, i);
    }
  }
  return {GridModule(box, std::move(dims), std::move(maps)), std::move(comparison)};
}

Subspaces global_support_module(const GridModule& m, CoordSet tau) {
  const GridBox& box = m.box();
  Subspaces out;
  for (std::size_t k = 0; k < box.size(); ++k) {
    IntVec q = box.point(k);
    Matrix w = Matrix::identity(m.dim(k));
    for (std::size_t j = 0; j < box.rank(); ++j)
      if (!tau.contains(j))
        w = intersect(w, kernel(m.push(q, clamp(box, q, CoordSet().with(j)))));
    out.push_back(column_basis(w));
  }
  return out;
}

Subspaces global_support_all_faces(const GridModule& m, CoordSet tau) {
  const GridBox& box = m.box();
  Subspaces out;
  for (std::size_t k = 0; k < box.size(); ++k) {
    IntVec q = box.point(k);
    Matrix w = Matrix::identity(m.dim(k));
    for (std::uint32_t bits = 0; bits < (1u << box.rank()); ++bits) {
      CoordSet other(bits);
      if (other.is_subset_of(tau))
        continue;
      w = intersect(w, kernel(m.push(q, clamp(box, q, other))));
    }
    out.push_back(column_basis(w));
  }
  return out;
}

LocalSupport local_support_module(const GridModule& m, CoordSet tau) {
  Localization loc = localize_module(m, tau);
  Subspaces s = global_support_module(loc.module, tau);
  return {submodule_module(loc.module, s), s};
}

ElementClass classify_element(const GridModule& m, const IntVec& q, const RatVec& v,
                              CoordSet tau) {
  const GridBox& box = m.box();
  if (!box.contains(q))
    throw Error(ErrorKind::DegreeOutsideBox, "degree " + format_point(to_rational(q)));
  if (v.size() != m.dim(q))
    throw Error(ErrorKind::DimensionMismatch, "vector length " + std::to_string(v.size()) +
                                                  " at a degree of dimension " +
                                                  std::to_string(m.dim(q)));
  auto is_zero = [](const RatVec& x) {
    return std::all_of(x.begin(), x.end(), [](const Rational& r) { return sgn(r) == 0; });
  };
  ElementClass out;
  out.persistent = !is_zero(m.push(q, clamp(box, q, tau)) * v);
  out.transient = true;
  for (std::size_t j = 0; j < box.rank() && out.transient; ++j)
    if (!tau.contains(j))
      out.transient = is_zero(m.push(q, clamp(box, q, CoordSet().with(j))) * v);
  out.coprimary = out.persistent && out.transient;
  return out;
}

std::optional<IntVec> coprimary_multiple(const GridModule& m, const IntVec& q, const RatVec& v,
                                         CoordSet tau) {
  const GridBox& box = m.box();
  for (std::size_t k = 0; k < box.size(); ++k) {
    IntVec p = box.point(k);
    bool above = true;
    for (std::size_t i = 0; i < p.size(); ++i)
      above = above && q[i] <= p[i];
    if (above && classify_element(m, p, m.push(q, p) * v, tau).coprimary)
      return p;
  }
  return std::nullopt;
}

std::optional<EssentialityWitness> essentiality_witness(const GridModule& m, const Subspaces& s) {
  const GridBox& box = m.box();
  for (std::size_t k = 0; k < box.size(); ++k) {
    if (m.dim(k) == 0)
      continue;
    IntVec q = box.point(k);
    // For each q' ⪰ q: K = vectors dying at q', G = vectors landing in s there.
    std::vector<Matrix> dead, good;
    for (std::size_t k2 = 0; k2 < box.size(); ++k2) {
      IntVec p = box.point(k2);
      bool above = true;
      for (std::size_t i = 0; i < p.size(); ++i)
        above = above && q[i] <= p[i];
      if (!above)
        continue;
      Matrix push = m.push(q, p);
      dead.push_back(kernel(push));
      good.push_back(preimage(push, s[k2]));
    }
    // A bad vector avoids G∖K everywhere. Wherever the current candidate
    // space W lies inside G it is forced into K; once nothing more is forced,
    // W avoids the remaining G's unless W = 0, since a rational vector space
    // is not a finite union of proper subspaces.
    Matrix w = Matrix::identity(m.dim(k));
    std::vector<bool> forced(dead.size(), false);
    for (bool changed = true; changed && w.cols() > 0;) {
      changed = false;
      for (std::size_t t = 0; t < dead.size(); ++t)
        if (!forced[t] && contains(good[t], w)) {
          w = intersect(w, dead[t]);
          forced[t] = true;
          changed = true;
        }
    }
    if (w.cols() == 0)
      continue;
    for (long t = 1;; ++t) {
      RatVec v(m.dim(k));
      Rational power = 1;
      for (std::size_t c = 0; c < w.cols(); ++c, power *= t)
        for (std::size_t r = 0; r < v.size(); ++r)
          v[r] += power * w(r, c);
      bool avoids = true;
      for (std::size_t u = 0; u < good.size() && avoids; ++u)
        avoids = forced[u] || !contains(good[u], Matrix::column(v));
      if (avoids)
        return EssentialityWitness{q, v};
    }
  }
  return std::nullopt;
}

bool is_coprimary_module(const GridModule& m, CoordSet tau, std::size_t max_degrees) {
  const GridBox& box = m.box();
  if (box.size() > max_degrees)
    throw Error(ErrorKind::BoxTooLarge, std::to_string(box.size()) + " degrees exceed budget " +
                                            std::to_string(max_degrees));
  for (std::size_t k = 0; k < box.size(); ++k) {
    IntVec q = box.point(k);
    if (kernel(m.push(q, clamp(box, q, tau))).cols() > 0)
      return false;
  }
  Localization loc = localize_module(m, tau);
  return !essentiality_witness(loc.module, global_support_module(loc.module, tau)).has_value();
}

GridModule indicator_module(const GridBox& box, const std::function<bool(const IntVec&)>& in_d) {
  std::vector<std::size_t> dims(box.size());
  for (std::size_t k = 0; k < box.size(); ++k)
    dims[k] = in_d(box.point(k)) ? 1 : 0;
  std::vector<std::vector<Matrix>> maps(box.size(), std::vector<Matrix>(box.rank()));
  for (std::size_t k = 0; k < box.size(); ++k)
    for (std::size_t i = 0; i < box.rank(); ++i) {
      std::size_t up = box.step(k, i);
      if (up == box.size())
        continue;
      maps[k][i] = Matrix(dims[up], dims[k]);
      if (dims[up] && dims[k])
        maps[k][i](0, 0) = 1;
    }
  return GridModule(box, std::move(dims), std::move(maps));
}

} // namespace pogroup
