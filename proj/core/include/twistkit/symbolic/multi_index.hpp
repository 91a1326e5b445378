#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

namespace twistkit {

/// Per-direction differentiation counts. u_xt and u_tx share one MultiIndex.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::size_t dims) : counts_(dims, 0) {}
  MultiIndex(std::initializer_list<unsigned> counts) : counts_(counts) {}
  explicit MultiIndex(std::vector<unsigned> counts) : counts_(std::move(counts)) {}

  std::size_t dims() const noexcept { return counts_.size(); }
  unsigned operator[](std::size_t i) const { return counts_.at(i); }
  const std::vector<unsigned>& counts() const noexcept { return counts_; }

  unsigned order() const noexcept {
    unsigned total = 0;
    for (unsigned c : counts_) total += c;
    return total;
  }
  bool empty_order() const noexcept { return order() == 0; }

  /// (J, i): one more derivative in direction i.
  MultiIndex bumped(std::size_t i) const {
    MultiIndex out = *this;
    ++out.counts_.at(i);
    return out;
  }
  std::optional<MultiIndex> lowered(std::size_t i) const {
    if (counts_.at(i) == 0) return std::nullopt;
    MultiIndex out = *this;
    --out.counts_[i];
    return out;
  }

  /// Componentwise <=.
  bool below(const MultiIndex& other) const {
    if (other.dims() != dims()) return false;
    for (std::size_t i = 0; i < counts_.size(); ++i)
      if (counts_[i] > other.counts_[i]) return false;
    return true;
  }

  /// First direction carrying a nonzero count, or dims() for the empty index.
  std::size_t first_direction() const noexcept {
    for (std::size_t i = 0; i < counts_.size(); ++i)
      if (counts_[i] > 0) return i;
    return counts_.size();
  }

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
    return a.counts_ <=> b.counts_;
  }

  /// All multi-indices of `dims` directions with total order `order`,
  /// enumerated with the first direction most significant.
  static std::vector<MultiIndex> of_order(std::size_t dims, unsigned order);

 private:
  std::vector<unsigned> counts_;
};

inline std::vector<MultiIndex> MultiIndex::of_order(std::size_t dims, unsigned order) {
  std::vector<MultiIndex> out;
  if (dims == 0) {
    if (order == 0) out.emplace_back();
    return out;
  }
  std::vector<unsigned> counts(dims, 0);
  auto rec = [&](auto&& self, std::size_t pos, unsigned remaining) -> void {
    if (pos + 1 == dims) {
      counts[pos] = remaining;
      out.emplace_back(counts);
      return;
    }
    for (unsigned c = remaining + 1; c-- > 0;) {
      counts[pos] = c;
      self(self, pos + 1, remaining - c);
    }
  };
  rec(rec, 0, order);
  return out;
}

}  // namespace twistkit
