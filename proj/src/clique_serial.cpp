// SPDX-License-Identifier: Apache-2.0

#include "clique_search.hpp"

namespace sorklie::clique {

namespace detail {

void color_bounds(const Graph& g, const Bitset& cand, std::vector<std::size_t>& order,
                  std::vector<std::size_t>& bound) {
  order.clear();
  cand.for_each([&](std::size_t v) { order.push_back(v); });
  bound.assign(order.size(), 0);
  std::vector<Bitset> classes;
  for (std::size_t i = order.size(); i-- > 0;) {
    const std::size_t v = order[i];
    const Bitset& adj = g.neighbors(v);
    std::size_t c = 0;
    while (c < classes.size() && adj.intersects(classes[c])) ++c;
    if (c == classes.size()) classes.emplace_back(g.size());
    classes[c].set(v);
    bound[i] = classes.size();
  }
}

void Search::expand(const Bitset& cand) {
  std::vector<std::size_t> order;
  std::vector<std::size_t> bound;
  color_bounds(g_, cand, order, bound);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const std::size_t reach = current_.size() + bound[i];
    if (reach <= best_.size()) break;
    if (shared_best_ && reach < shared_best_->load(std::memory_order_relaxed)) break;
    const std::size_t v = order[i];
    Bitset next = cand & g_.neighbors(v);
    next.clear_through(v);
    current_.push_back(v);
    if (next.any()) {
      expand(next);
    } else if (current_.size() > best_.size()) {
      best_ = current_;
    }
    current_.pop_back();
  }
}

}  // namespace detail

Graph Graph::induced(std::span<const std::size_t> vertices) const {
  Graph sub(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (adjacent(vertices[i], vertices[j])) sub.add_edge(i, j);
  return sub;
}

bool is_clique(const Graph& g, std::span<const std::size_t> vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (!g.adjacent(vertices[i], vertices[j])) return false;
  return true;
}

std::vector<std::size_t> max_clique_serial(const Graph& g) {
  if (g.size() == 0) return {};
  Bitset all(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) all.set(v);
  detail::Search search(g, nullptr);
  search.expand(all);
  return search.best();
}

}  // namespace sorklie::clique
