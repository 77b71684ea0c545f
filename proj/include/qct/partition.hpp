#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace qct {

// Weakly decreasing sequence of non-negative integers, normalized at
// construction so that trailing zeros are stripped.  Doubles as a GL(r)
// highest weight and, via rectangle(), as a rectangular shape (w^h).
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<long long> parts);
  Partition(std::initializer_list<long long> parts);

  // (width^height); empty when either side is zero.
  static Partition rectangle(long long height, long long width);

  // Sum of all parts.
  long long size() const;
  // Number of non-zero parts.
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }

  // i-th part, 0-based; zero beyond length().
  long long part(std::size_t i) const {
    return i < parts_.size() ? parts_[i] : 0;
  }
  const std::vector<long long>& parts() const { return parts_; }

  // Column-lengths partition (diagram transpose).
  Partition conjugate() const;
  // Cell-wise containment: other_i <= this_i for all i.
  bool contains(const Partition& other) const;
  // All non-zero parts equal; the empty partition counts as rectangular.
  bool is_rectangular() const;
  // Dominance order on partitions of equal size: every prefix sum of *this
  // is >= the corresponding prefix sum of other.
  bool dominates(const Partition& other) const;

  auto operator<=>(const Partition&) const = default;

  // Comma-separated text, e.g. "3,3,1"; the empty partition is "".
  std::string to_string() const;
  static Partition parse(std::string_view text);

 private:
  std::vector<long long> parts_;
};

// Outer/inner pair with inner contained in outer cell-wise; the cell set is
// the difference of the two Young diagrams.
struct SkewShape {
  Partition outer;
  Partition inner;

  SkewShape(Partition outer_shape, Partition inner_shape);
  long long cell_count() const { return outer.size() - inner.size(); }
};

// All partitions of n, optionally with at most max_length parts, in
// lexicographically decreasing order.  max_length < 0 means unbounded.
std::vector<Partition> partitions_of(long long n, long long max_length = -1);

}  // namespace qct
