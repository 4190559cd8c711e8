// SPDX-License-Identifier: Apache-2.0

#include "sorklie/matrixcheck.hpp"

#include <algorithm>

#include "exact_linalg.hpp"

namespace sorklie {

Polynomial::Polynomial(std::int64_t c) {
  if (c != 0) terms_[{}] = c;
}

Polynomial Polynomial::variable(int index) {
  Polynomial p;
  p.terms_[{index}] = 1;
  return p;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  Polynomial c = a;
  for (const auto& [m, x] : b.terms_) {
    const auto v = (c.terms_[m] += x);
    if (v == 0) c.terms_.erase(m);
  }
  return c;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + Polynomial(-1) * b; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial c;
  for (const auto& [ma, xa] : a.terms_)
    for (const auto& [mb, xb] : b.terms_) {
      std::vector<int> m;
      m.reserve(ma.size() + mb.size());
      std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
      const auto v = (c.terms_[m] += xa * xb);
      if (v == 0) c.terms_.erase(m);
    }
  return c;
}

namespace {

template <class T>
bool bracket_identity(const Matrix<T>& g, const Matrix<T>& g2, const Matrix<T>& k, const Matrix<T>& k2) {
  if (!g.is_square() || !k.is_square() || g2.rows() != g.rows() || g2.cols() != g.cols() || k2.rows() != k.rows() ||
      k2.cols() != k.cols())
    throw ShapeError("bracket_split_check needs g, g' of one square shape and k, k' of another");
  const auto lhs = commutator(kronecker_sum(g, k), kronecker_sum(g2, k2));
  const auto rhs = kronecker(commutator(g, g2), Matrix<T>::identity(k.rows())) +
                   kronecker(Matrix<T>::identity(g.rows()), commutator(k, k2));
  return lhs == rhs;
}

Matrix<Polynomial> symbolic_matrix(std::size_t n, int& next_var) {
  Matrix<Polynomial> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Polynomial::variable(next_var++);
  return m;
}

IntMatrix unit(std::size_t n, std::size_t i, std::size_t j) {
  IntMatrix e(n, n);
  e(i, j) = 1;
  return e;
}

// Appends vec(m) as a new column of a.
void append_column(detail::RationalMatrix& a, const IntMatrix& m) {
  if (a.empty()) a.resize(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i * m.cols() + j].push_back(Rational(m(i, j)));
}

std::vector<Rational> flatten(const IntMatrix& m) {
  std::vector<Rational> v;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.emplace_back(m(i, j));
  return v;
}

// Coefficients of X in I_s (x) X (or in X (x) I_t when for_g).
detail::FullRankSystem coordinate_system(std::size_t s, std::size_t t, bool for_g) {
  detail::RationalMatrix a;
  const std::size_t n = for_g ? s : t;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      append_column(a, for_g ? kronecker(unit(s, i, j), IntMatrix::identity(t))
                             : kronecker(IntMatrix::identity(s), unit(t, i, j)));
  return detail::FullRankSystem(std::move(a));
}

// rhs is g (x) I_t (solving for the k side) or I_s (x) k (solving for the g
// side). The equations must be inconsistent unless the given side is zero,
// in which case X = 0 is the only solution.
bool forces_zero(const detail::FullRankSystem& system, const IntMatrix& given, const IntMatrix& rhs) {
  const auto x = system.solve(flatten(rhs));
  if (!given.is_zero()) return !x;
  return x && std::all_of(x->begin(), x->end(), [](const Rational& v) { return detail::is_zero(v); });
}

// The kernel of (g, k) -> g (x) I_t - I_s (x) k is spanned by (I_s, I_t).
bool scalar_kernel(std::size_t s, std::size_t t) {
  detail::RationalMatrix a;
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) append_column(a, kronecker(unit(s, i, j), IntMatrix::identity(t)));
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j < t; ++j) {
      const auto m = kronecker(IntMatrix::identity(s), unit(t, i, j));
      append_column(a, IntMatrix(m.rows(), m.cols()) - m);
    }
  const auto kernel = detail::null_space(std::move(a));
  if (kernel.size() != 1) return false;
  const auto& v = kernel.front();
  const Rational c = v[0];
  if (detail::is_zero(c)) return false;
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j)
      if (v[i * s + j] != (i == j ? c : Rational(0))) return false;
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j < t; ++j)
      if (v[s * s + i * t + j] != (i == j ? c : Rational(0))) return false;
  return true;
}

}  // namespace

bool bracket_split_check(const IntMatrix& g, const IntMatrix& g2, const IntMatrix& k, const IntMatrix& k2) {
  return bracket_identity(g, g2, k, k2);
}

bool bracket_split_symbolic(std::size_t s, std::size_t t) {
  int next = 0;
  const auto g = symbolic_matrix(s, next);
  const auto g2 = symbolic_matrix(s, next);
  const auto k = symbolic_matrix(t, next);
  const auto k2 = symbolic_matrix(t, next);
  return bracket_identity(g, g2, k, k2);
}

IntMatrix random_matrix(std::size_t n, std::mt19937_64& rng, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = dist(rng);
  return m;
}

IntMatrix random_trace_zero(std::size_t n, std::mt19937_64& rng, int lo, int hi) {
  auto m = random_matrix(n, rng, lo, hi);
  m(n - 1, n - 1) -= m.trace();
  return m;
}

bool trivial_intersection_check(std::size_t s, std::size_t t, std::size_t samples, std::uint64_t seed) {
  if (s < 2 || t < 2) throw ShapeError("trivial_intersection_check needs s, t >= 2");
  if (!scalar_kernel(s, t)) return false;

  const auto for_k = coordinate_system(s, t, false);
  const auto for_g = coordinate_system(s, t, true);
  const auto it = IntMatrix::identity(t);
  const auto is = IntMatrix::identity(s);
  const auto check = [&](const IntMatrix& g, const IntMatrix& k) {
    if (!forces_zero(for_k, g, kronecker(g, it)) || !forces_zero(for_g, k, kronecker(is, k))) return false;
    const bool equal = kronecker(g, it) == kronecker(is, k);
    return !equal || (g.is_zero() && k.is_zero());
  };

  IntMatrix h(s, s);
  h(0, 0) = 1;
  h(1, 1) = -1;
  if (!check(IntMatrix(s, s), IntMatrix(t, t)) || !check(h, IntMatrix(t, t))) return false;

  std::mt19937_64 rng(seed);
  for (std::size_t n = 0; n < samples; ++n)
    if (!check(random_trace_zero(s, rng), random_trace_zero(t, rng))) return false;
  return true;
}

KroneckerReport verify_kronecker(std::size_t max_size, std::size_t samples, std::uint64_t seed) {
  if (max_size < 2) throw ShapeError("verify_kronecker needs max_size >= 2");
  KroneckerReport report;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> size(2, max_size);
  for (std::size_t n = 0; n < samples; ++n) {
    const auto s = size(rng);
    const auto t = size(rng);
    const auto g = random_matrix(s, rng);
    const auto g2 = random_matrix(s, rng);
    const auto k = random_matrix(t, rng);
    const auto k2 = random_matrix(t, rng);
    ++report.quadruples;
    if (!bracket_split_check(g, g2, k, k2)) ++report.bracket_failures;
  }
  report.symbolic = bracket_split_symbolic(2, 2);
  report.intersection = true;
  for (std::size_t s = 2; s <= max_size; ++s)
    for (std::size_t t = 2; t <= max_size; ++t)
      report.intersection = report.intersection && trivial_intersection_check(s, t, samples / 4 + 1, seed + s * 31 + t);
  return report;
}

}  // namespace sorklie
