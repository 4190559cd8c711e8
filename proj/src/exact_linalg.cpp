// SPDX-License-Identifier: Apache-2.0

#include "exact_linalg.hpp"

#include <stdexcept>
#include <utility>

namespace sorklie::detail {

std::vector<std::size_t> row_reduce(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && is_zero(m[p][c])) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const Rational lead = m[r][c];
    for (auto& x : m[r]) x /= lead;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(m[i][c])) continue;
      const Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(RationalMatrix m) { return row_reduce(m).size(); }

std::optional<std::vector<Rational>> solve_unique(const RationalMatrix& a, const std::vector<Rational>& b) {
  if (a.empty()) return std::vector<Rational>{};
  const std::size_t n = a.front().size();
  RationalMatrix aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  const auto pivots = row_reduce(aug);
  if (pivots.size() != n) return std::nullopt;  // rank deficient or pivot on b
  for (std::size_t c : pivots)
    if (c == n) return std::nullopt;
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug[i][n];
  return x;
}

RationalMatrix null_space(RationalMatrix m) {
  RationalMatrix basis;
  if (m.empty()) return basis;
  const std::size_t cols = m.front().size();
  const auto pivots = row_reduce(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

FullRankSystem::FullRankSystem(RationalMatrix a) : a_(std::move(a)) {
  const std::size_t n = a_.empty() ? 0 : a_.front().size();
  RationalMatrix t(n, std::vector<Rational>(a_.size()));
  for (std::size_t i = 0; i < a_.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) t[j][i] = a_[i][j];
  rows_ = row_reduce(t);
  if (rows_.size() != n) throw std::invalid_argument("system does not have full column rank");

  RationalMatrix aug(n, std::vector<Rational>(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a_[rows_[i]][j];
    aug[i][n + i] = 1;
  }
  row_reduce(aug);
  inverse_.assign(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inverse_[i][j] = aug[i][n + j];
}

std::optional<std::vector<Rational>> FullRankSystem::solve(const std::vector<Rational>& b) const {
  const std::size_t n = inverse_.size();
  std::vector<Rational> x(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!is_zero(inverse_[i][j])) x[i] += inverse_[i][j] * b[rows_[j]];
  for (std::size_t i = 0; i < a_.size(); ++i) {
    Rational r(0);
    for (std::size_t j = 0; j < n; ++j)
      if (!is_zero(a_[i][j])) r += a_[i][j] * x[j];
    if (r != b[i]) return std::nullopt;
  }
  return x;
}

}  // namespace sorklie::detail
