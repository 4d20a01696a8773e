#include "sdg/interval_product.hpp"

#include <limits>
#include <string>

#include "sdg/error.hpp"

namespace sdg {

IntervalProduct::IntervalProduct(std::vector<Interval> intervals) : intervals_(std::move(intervals)) {
  const std::size_t n = intervals_.size();
  strides_.assign(n, 1);
  size_ = 1;
  for (std::size_t i = n; i-- > 0;) {
    const auto& iv = intervals_[i];
    if (iv.min > iv.max)
      throw PreconditionError("empty interval [" + std::to_string(iv.min) + "," + std::to_string(iv.max) + "]");
    strides_[i] = size_;
    if (size_ > std::numeric_limits<std::size_t>::max() / iv.size()) throw CapExceeded("state space overflows");
    size_ *= iv.size();
  }
}

IntervalProduct IntervalProduct::from_sizes(std::span<const std::size_t> sizes) {
  std::vector<Interval> iv;
  iv.reserve(sizes.size());
  for (auto s : sizes) {
    if (s == 0) throw PreconditionError("interval size must be positive");
    iv.push_back({0, static_cast<int>(s) - 1});
  }
  return IntervalProduct(std::move(iv));
}

bool IntervalProduct::contains(std::span<const int> x) const {
  if (x.size() != intervals_.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!intervals_[i].contains(x[i])) return false;
  return true;
}

bool IntervalProduct::contains(const IntervalProduct& inner) const {
  if (inner.dimension() != dimension()) return false;
  for (std::size_t i = 0; i < dimension(); ++i)
    if (!intervals_[i].contains(inner[i])) return false;
  return true;
}

std::size_t IntervalProduct::offset(std::span<const int> x) const {
  if (!contains(x)) throw PreconditionError("state outside the domain");
  std::size_t off = 0;
  for (std::size_t i = 0; i < x.size(); ++i) off += static_cast<std::size_t>(x[i] - intervals_[i].min) * strides_[i];
  return off;
}

State IntervalProduct::state(std::size_t offset) const {
  State x(dimension());
  decode(offset, x);
  return x;
}

void IntervalProduct::decode(std::size_t offset, std::span<int> out) const {
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    const std::size_t s = intervals_[i].size();
    out[i] = intervals_[i].min + static_cast<int>((offset / strides_[i]) % s);
  }
}

State IntervalProduct::minimum() const {
  State x;
  for (const auto& iv : intervals_) x.push_back(iv.min);
  return x;
}

State IntervalProduct::maximum() const {
  State x;
  for (const auto& iv : intervals_) x.push_back(iv.max);
  return x;
}

}  // namespace sdg
