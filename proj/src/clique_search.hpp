// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <atomic>
#include <cstddef>
#include <vector>

#include "sorklie/clique.hpp"

namespace sorklie::clique::detail {

// Greedy coloring of `cand` visiting vertices from the highest index down.
// On return `order` lists cand ascending and bound[i] is the number of colors
// in use once order[i] has been colored, which bounds any clique contained in
// cand restricted to indices >= order[i].
void color_bounds(const Graph& g, const Bitset& cand, std::vector<std::size_t>& order,
                  std::vector<std::size_t>& bound);

// Depth-first branch and bound that visits cliques in lexicographic order of
// their sorted vertex lists, so the first maximum clique found is the
// lexicographically least. `shared_best`, when set, is the best size found by
// any other worker; it only prunes branches that cannot reach it.
class Search {
 public:
  Search(const Graph& g, const std::atomic<std::size_t>* shared_best) : g_(g), shared_best_(shared_best) {}

  void seed(std::vector<std::size_t> current, std::vector<std::size_t> best) {
    current_ = std::move(current);
    best_ = std::move(best);
  }
  void expand(const Bitset& cand);

  const std::vector<std::size_t>& best() const noexcept { return best_; }

 private:
  const Graph& g_;
  const std::atomic<std::size_t>* shared_best_;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
};

}  // namespace sorklie::clique::detail
