#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

namespace sdg {

// {min, ..., max}, min <= max.
struct Interval {
  int min = 0;
  int max = 0;

  std::size_t size() const noexcept { return static_cast<std::size_t>(max - min) + 1; }
  bool contains(int v) const noexcept { return min <= v && v <= max; }
  bool contains(const Interval& o) const noexcept { return min <= o.min && o.max <= max; }
  friend auto operator<=>(const Interval&, const Interval&) = default;
};

using State = std::vector<int>;

// X = X_1 × ... × X_n with mixed-radix offsets: component 1 is most significant,
// offset(x) = Σ (x_i - min X_i) · W_i, W_n = 1, W_i = W_{i+1} · |X_{i+1}|.
class IntervalProduct {
 public:
  IntervalProduct() = default;
  explicit IntervalProduct(std::vector<Interval> intervals);
  // {0, ..., s_i - 1} per component.
  static IntervalProduct from_sizes(std::span<const std::size_t> sizes);

  std::size_t dimension() const noexcept { return intervals_.size(); }
  std::size_t size() const noexcept { return size_; }
  const Interval& operator[](std::size_t i) const { return intervals_[i]; }
  const std::vector<Interval>& intervals() const noexcept { return intervals_; }
  std::size_t stride(std::size_t i) const { return strides_[i]; }

  bool contains(std::span<const int> x) const;
  // Componentwise Y ⊆ X, same arity.
  bool contains(const IntervalProduct& inner) const;

  std::size_t offset(std::span<const int> x) const;
  State state(std::size_t offset) const;
  void decode(std::size_t offset, std::span<int> out) const;
  // Component i of the state at `offset`, without decoding the rest.
  int coordinate(std::size_t offset, std::size_t i) const {
    return intervals_[i].min + static_cast<int>((offset / strides_[i]) % intervals_[i].size());
  }

  State minimum() const;
  State maximum() const;

  friend bool operator==(const IntervalProduct& a, const IntervalProduct& b) { return a.intervals_ == b.intervals_; }

 private:
  std::vector<Interval> intervals_;
  std::vector<std::size_t> strides_;
  std::size_t size_ = 1;
};

}  // namespace sdg
