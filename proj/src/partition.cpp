#include "qct/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace qct {

namespace {

// Parts comfortably below the overflow range of sums/products of a handful
// of entries.
constexpr long long kMaxPart = 1'000'000'000'000LL;

}  // namespace

Partition::Partition(std::vector<long long> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0 || parts_[i] > kMaxPart)
      throw std::invalid_argument("partition part out of range");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

Partition::Partition(std::initializer_list<long long> parts)
    : Partition(std::vector<long long>(parts)) {}

Partition Partition::rectangle(long long height, long long width) {
  if (height < 0 || width < 0)
    throw std::invalid_argument("rectangle sides must be non-negative");
  if (height == 0 || width == 0) return {};
  return Partition(std::vector<long long>(static_cast<std::size_t>(height), width));
}

long long Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return {};
  std::vector<long long> cols(static_cast<std::size_t>(parts_[0]), 0);
  for (long long p : parts_)
    for (long long c = 0; c < p; ++c) ++cols[static_cast<std::size_t>(c)];
  return Partition(std::move(cols));
}

bool Partition::contains(const Partition& other) const {
  if (other.length() > length()) return false;
  for (std::size_t i = 0; i < other.length(); ++i)
    if (other.parts_[i] > parts_[i]) return false;
  return true;
}

bool Partition::is_rectangular() const {
  return parts_.empty() || parts_.front() == parts_.back();
}

bool Partition::dominates(const Partition& other) const {
  if (size() != other.size()) return false;
  long long mine = 0, theirs = 0;
  std::size_t rows = std::max(length(), other.length());
  for (std::size_t i = 0; i < rows; ++i) {
    mine += part(i);
    theirs += other.part(i);
    if (mine < theirs) return false;
  }
  return true;
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

Partition Partition::parse(std::string_view text) {
  std::vector<long long> parts;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view token = text.substr(
        pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    long long value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
      throw std::invalid_argument("bad partition literal: '" + std::string(text) + "'");
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
    if (pos == text.size())
      throw std::invalid_argument("trailing comma in partition literal");
  }
  return Partition(std::move(parts));
}

SkewShape::SkewShape(Partition outer_shape, Partition inner_shape)
    : outer(std::move(outer_shape)), inner(std::move(inner_shape)) {
  if (!outer.contains(inner))
    throw std::invalid_argument("skew shape requires inner contained in outer");
}

std::vector<Partition> partitions_of(long long n, long long max_length) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<long long> stack;
  auto rec = [&](auto&& self, long long remaining, long long cap) -> void {
    if (remaining == 0) {
      out.emplace_back(stack);
      return;
    }
    if (max_length >= 0 && static_cast<long long>(stack.size()) >= max_length) return;
    for (long long next = std::min(cap, remaining); next >= 1; --next) {
      stack.push_back(next);
      self(self, remaining - next, next);
      stack.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

}  // namespace qct
