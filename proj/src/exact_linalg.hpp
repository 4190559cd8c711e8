// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sorklie/roots.hpp"

namespace sorklie::detail {

using RationalMatrix = std::vector<std::vector<Rational>>;

// Comparing boost::rational with an integer literal recurses forever under
// C++20 rewritten comparison operators; test the numerator instead.
inline bool is_zero(const Rational& r) { return r.numerator() == 0; }

// Row-reduces in place to reduced row echelon form and returns the pivot
// column of each nonzero row.
std::vector<std::size_t> row_reduce(RationalMatrix& m);

std::size_t rank(RationalMatrix m);

// Solves a x = b for a consistent (possibly overdetermined) system with full
// column rank. Returns nullopt if the system is inconsistent or the solution
// is not unique.
std::optional<std::vector<Rational>> solve_unique(const RationalMatrix& a, const std::vector<Rational>& b);

// Basis of the null space of m, one vector per free column.
RationalMatrix null_space(RationalMatrix m);

// An overdetermined system a x = b with full column rank, factored once so
// that many right-hand sides can be solved cheaply.
class FullRankSystem {
 public:
  // Throws std::invalid_argument if a does not have full column rank.
  explicit FullRankSystem(RationalMatrix a);

  // The unique solution, or nullopt if the system is inconsistent.
  std::optional<std::vector<Rational>> solve(const std::vector<Rational>& b) const;

 private:
  RationalMatrix a_;
  std::vector<std::size_t> rows_;  // independent rows of a
  RationalMatrix inverse_;         // inverse of a restricted to rows_
};

}  // namespace sorklie::detail
