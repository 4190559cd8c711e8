// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace sorklie::clique {

class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t bits) : words_((bits + 63) / 64, 0), bits_(bits) {}

  std::size_t size() const noexcept { return bits_; }

  void set(std::size_t i) noexcept { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) noexcept { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool test(std::size_t i) const noexcept { return (words_[i / 64] >> (i % 64)) & 1u; }

  bool any() const noexcept {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool intersects(const Bitset& o) const noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & o.words_[k]) return true;
    return false;
  }

  Bitset& operator&=(const Bitset& o) noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  friend Bitset operator&(Bitset a, const Bitset& b) noexcept { return a &= b; }

  // Clears bits 0..i inclusive.
  void clear_through(std::size_t i) noexcept {
    const std::size_t w = i / 64;
    for (std::size_t k = 0; k < w; ++k) words_[k] = 0;
    const unsigned shift = static_cast<unsigned>(i % 64);
    words_[w] &= shift == 63 ? 0 : ~std::uint64_t{0} << (shift + 1);
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        f(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  std::vector<std::uint64_t> words_;
  std::size_t bits_ = 0;
};

/// Undirected simple graph on vertices 0..n-1.
class Graph {
 public:
  explicit Graph(std::size_t n) : adj_(n, Bitset(n)) {}
  /// Adopts precomputed adjacency rows; the caller guarantees symmetry and an
  /// empty diagonal.
  explicit Graph(std::vector<Bitset> rows) : adj_(std::move(rows)) {}

  std::size_t size() const noexcept { return adj_.size(); }
  void add_edge(std::size_t i, std::size_t j) {
    if (i == j) return;
    adj_[i].set(j);
    adj_[j].set(i);
  }
  bool adjacent(std::size_t i, std::size_t j) const { return adj_[i].test(j); }
  const Bitset& neighbors(std::size_t i) const { return adj_[i]; }

  /// Subgraph on the given vertices, relabelled 0..k-1 in the given order.
  Graph induced(std::span<const std::size_t> vertices) const;

 private:
  std::vector<Bitset> adj_;
};

/// Lexicographically least maximum clique (sorted vertex indices), computed by
/// single-threaded branch and bound with a greedy-coloring bound. This is the
/// reference kernel the parallel one is tested against.
std::vector<std::size_t> max_clique_serial(const Graph& g);

/// Same contract as max_clique_serial; top-level branches run as OpenMP tasks.
/// The result does not depend on the thread count or schedule.
std::vector<std::size_t> max_clique_parallel(const Graph& g);

bool is_clique(const Graph& g, std::span<const std::size_t> vertices);

/// Sets the OpenMP thread count for subsequent parallel kernels. No-op when
/// built without OpenMP.
void set_num_threads(int n);
int max_threads();

}  // namespace sorklie::clique
