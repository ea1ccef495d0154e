#pragma once

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <type_traits>
#include <utility>
#include <vector>

namespace corrclust {

using Vertex = int;

/// Dense storage for one value per unordered pair {u, v} of distinct vertices
/// 0..n-1, laid out as a strict lower triangle.
template <class T>
class PairTable {
 public:
  // bool is stored as bytes so that elements are addressable.
  using Stored = std::conditional_t<std::is_same_v<T, bool>, std::uint8_t, T>;

  PairTable() = default;
  explicit PairTable(int n, const T& fill = T{})
      : n_(n), data_(pair_count(n), static_cast<Stored>(fill)) {}

  static std::size_t pair_count(int n) {
    return n < 2 ? 0 : static_cast<std::size_t>(n) * (n - 1) / 2;
  }

  /// Linear slot of {u, v}; pairs are ordered (0,1), (0,2), (1,2), (0,3), ...
  static std::size_t index(Vertex u, Vertex v) {
    assert(u != v);
    if (u > v) std::swap(u, v);
    return static_cast<std::size_t>(v) * (v - 1) / 2 + u;
  }

  int n() const { return n_; }
  std::size_t size() const { return data_.size(); }

  Stored& operator()(Vertex u, Vertex v) { return data_[index(u, v)]; }
  const Stored& operator()(Vertex u, Vertex v) const { return data_[index(u, v)]; }

  Stored& at_slot(std::size_t i) { return data_[i]; }
  const Stored& at_slot(std::size_t i) const { return data_[i]; }

  const std::vector<Stored>& raw() const { return data_; }

  bool operator==(const PairTable&) const = default;

 private:
  int n_ = 0;
  std::vector<Stored> data_;
};

/// Calls fn(u, v) for every pair u < v, in increasing (u, v) lexicographic order.
template <class Fn>
void for_each_pair(int n, Fn&& fn) {
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) fn(u, v);
}

}  // namespace corrclust
