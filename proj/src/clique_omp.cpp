// SPDX-License-Identifier: Apache-2.0

#include <atomic>

#include "clique_search.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace sorklie::clique {

namespace {

void raise_to(std::atomic<std::size_t>& target, std::size_t value) {
  std::size_t seen = target.load(std::memory_order_relaxed);
  while (seen < value && !target.compare_exchange_weak(seen, value, std::memory_order_relaxed)) {
  }
}

}  // namespace

std::vector<std::size_t> max_clique_parallel(const Graph& g) {
  const std::size_t n = g.size();
  if (n == 0) return {};
  Bitset all(n);
  for (std::size_t v = 0; v < n; ++v) all.set(v);
  std::vector<std::size_t> order;
  std::vector<std::size_t> bound;
  detail::color_bounds(g, all, order, bound);

  // results[v] is the lexicographically least clique of maximum size among
  // cliques whose smallest vertex is v, or empty if the branch was pruned.
  std::vector<std::vector<std::size_t>> results(n);
  std::atomic<std::size_t> shared_best{0};
  const auto count = static_cast<long long>(n);

#pragma omp parallel for schedule(dynamic, 1)
  for (long long i = 0; i < count; ++i) {
    const auto v = static_cast<std::size_t>(i);
    if (bound[v] < shared_best.load(std::memory_order_relaxed)) continue;
    Bitset cand = g.neighbors(v);
    cand.clear_through(v);
    detail::Search search(g, &shared_best);
    search.seed({v}, {v});
    if (cand.any()) search.expand(cand);
    raise_to(shared_best, search.best().size());
    results[v] = search.best();
  }

  std::size_t pick = 0;
  for (std::size_t v = 1; v < n; ++v)
    if (results[v].size() > results[pick].size()) pick = v;
  return results[pick];
}

void set_num_threads(int n) {
#if defined(_OPENMP)
  if (n > 0) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

int max_threads() {
#if defined(_OPENMP)
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace sorklie::clique
