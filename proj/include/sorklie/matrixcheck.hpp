// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "sorklie/errors.hpp"

namespace sorklie {

/// Dense row-major matrix over an exact ring T (integers or polynomials).
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data) : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows * cols) throw ShapeError("matrix data does not match its shape");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  T trace() const {
    if (!is_square()) throw ShapeError("trace of a non-square matrix");
    T t(0);
    for (std::size_t i = 0; i < rows_; ++i) t = t + (*this)(i, i);
    return t;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!(x == T(0))) return false;
    return true;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) { return a.zip(b, [](const T& x, const T& y) { return x + y; }); }
  friend Matrix operator-(const Matrix& a, const Matrix& b) { return a.zip(b, [](const T& x, const T& y) { return x - y; }); }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw ShapeError("product of incompatible shapes");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& x = a(i, k);
        if (x == T(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) = c(i, j) + x * b(k, j);
      }
    return c;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  template <class F>
  Matrix zip(const Matrix& b, F f) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw ShapeError("sum of incompatible shapes");
    Matrix c(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) c.data_[i] = f(data_[i], b.data_[i]);
    return c;
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<std::int64_t>;

/// Integer polynomial in numbered variables. A monomial is the sorted list of
/// its variable indices, with repeats for powers.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::int64_t c);  // NOLINT(google-explicit-constructor)
  static Polynomial variable(int index);

  bool is_zero() const noexcept { return terms_.empty(); }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::map<std::vector<int>, std::int64_t> terms_;
};

template <class T>
Matrix<T> kronecker(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> c(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) c(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return c;
}

/// g (x) I_t + I_s (x) k for square g (s x s) and k (t x t).
template <class T>
Matrix<T> kronecker_sum(const Matrix<T>& g, const Matrix<T>& k) {
  if (!g.is_square() || !k.is_square()) throw ShapeError("kronecker_sum needs square matrices");
  return kronecker(g, Matrix<T>::identity(k.rows())) + kronecker(Matrix<T>::identity(g.rows()), k);
}

template <class T>
Matrix<T> commutator(const Matrix<T>& a, const Matrix<T>& b) {
  return a * b - b * a;
}

/// Whether [A, A'] = [g, g'] (x) I_t + I_s (x) [k, k'] for the Kronecker sums
/// A = g (+) k and A' = g' (+) k'. Throws ShapeError unless g, g' are s x s
/// and k, k' are t x t.
bool bracket_split_check(const IntMatrix& g, const IntMatrix& g2, const IntMatrix& k, const IntMatrix& k2);

/// The same identity with every entry of g, g', k, k' an independent
/// variable, compared coefficient by coefficient.
bool bracket_split_symbolic(std::size_t s, std::size_t t);

/// Whether g (x) I_t = I_s (x) k forces g = k = 0 for trace-zero g and k.
/// Computes the kernel of (g, k) -> g (x) I_t - I_s (x) k exactly, expects it
/// to be spanned by (I_s, I_t), then solves the coordinate equations for
/// `samples` random trace-zero g and k. Throws ShapeError for s or t < 2.
bool trivial_intersection_check(std::size_t s, std::size_t t, std::size_t samples, std::uint64_t seed = 1);

IntMatrix random_matrix(std::size_t n, std::mt19937_64& rng, int lo = -5, int hi = 5);
/// Random matrix with the last diagonal entry adjusted to make the trace zero.
IntMatrix random_trace_zero(std::size_t n, std::mt19937_64& rng, int lo = -5, int hi = 5);

struct KroneckerReport {
  std::size_t quadruples = 0;
  std::size_t bracket_failures = 0;
  bool symbolic = false;
  bool intersection = false;

  bool passed() const { return bracket_failures == 0 && symbolic && intersection; }
};

/// Runs the bracket identity on `samples` random quadruples with s and t
/// drawn from [2, max_size], the symbolic check for s = t = 2 and the
/// intersection check for every (s, t) in that range.
KroneckerReport verify_kronecker(std::size_t max_size = 4, std::size_t samples = 200, std::uint64_t seed = 1);

}  // namespace sorklie
