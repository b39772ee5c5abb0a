#include "pogroup/grid.hpp"

#include "pogroup/error.hpp"

namespace pogroup {

GridBox::GridBox(IntVec lo, IntVec hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_.size() != hi_.size())
    throw Error(ErrorKind::RankMismatch, "box corners of different rank");
  strides_.assign(lo_.size(), 1);
  size_ = 1;
  for (std::size_t i = lo_.size(); i-- > 0;) {
    if (hi_[i] < lo_[i])
      throw Error(ErrorKind::InvalidInput, "empty box in coordinate " + std::to_string(i));
    strides_[i] = size_;
    size_ *= static_cast<std::size_t>(hi_[i] - lo_[i] + 1);
  }
}

GridBox GridBox::cube(std::size_t n, std::int64_t lo, std::int64_t hi) {
  return GridBox(IntVec(n, lo), IntVec(n, hi));
}

bool GridBox::contains(const IntVec& q) const {
  if (q.size() != rank())
    return false;
  for (std::size_t i = 0; i < q.size(); ++i)
    if (q[i] < lo_[i] || q[i] > hi_[i])
      return false;
  return true;
}

std::size_t GridBox::index(const IntVec& q) const {
  if (!contains(q))
    throw Error(ErrorKind::DegreeOutsideBox, "point outside grid box");
  std::size_t idx = 0;
  for (std::size_t i = 0; i < q.size(); ++i)
    idx += static_cast<std::size_t>(q[i] - lo_[i]) * strides_[i];
  return idx;
}

IntVec GridBox::point(std::size_t index) const {
  IntVec q(rank());
  for (std::size_t i = 0; i < rank(); ++i) {
    q[i] = lo_[i] + static_cast<std::int64_t>(index / strides_[i]);
    index %= strides_[i];
  }
  return q;
}

std::size_t GridBox::step(std::size_t index, std::size_t i) const {
  std::int64_t coord = lo_[i] + static_cast<std::int64_t>((index / strides_[i]) %
                                                          static_cast<std::size_t>(hi_[i] - lo_[i] + 1));
  if (coord >= hi_[i])
    return size_;
  return index + strides_[i];
}

GridSet GridSet::from_predicate(const GridBox& box,
                                const std::function<bool(const IntVec&)>& pred) {
  GridSet s(box);
  for (std::size_t k = 0; k < box.size(); ++k)
    s.bits_[k] = pred(box.point(k)) ? 1 : 0;
  return s;
}

std::size_t GridSet::count() const {
  std::size_t c = 0;
  for (char b : bits_)
    c += b != 0;
  return c;
}

std::vector<IntVec> GridSet::points() const {
  std::vector<IntVec> out;
  for (std::size_t k = 0; k < bits_.size(); ++k)
    if (bits_[k])
      out.push_back(box_.point(k));
  return out;
}

GridSet GridSet::operator|(const GridSet& o) const {
  if (!(box_ == o.box_))
    throw Error(ErrorKind::RankMismatch, "grid sets over different boxes");
  GridSet out = *this;
  for (std::size_t k = 0; k < bits_.size(); ++k)
    out.bits_[k] = bits_[k] | o.bits_[k];
  return out;
}

GridSet GridSet::operator&(const GridSet& o) const {
  if (!(box_ == o.box_))
    throw Error(ErrorKind::RankMismatch, "grid sets over different boxes");
  GridSet out = *this;
  for (std::size_t k = 0; k < bits_.size(); ++k)
    out.bits_[k] = bits_[k] & o.bits_[k];
  return out;
}

bool GridSet::subset_of(const GridSet& o) const {
  for (std::size_t k = 0; k < bits_.size(); ++k)
    if (bits_[k] && !o.bits_[k])
      return false;
  return true;
}

} // namespace pogroup
