// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sorklie/realforms.hpp"

namespace sorklie {

struct GroupExpr;
using GroupPtr = std::shared_ptr<const GroupExpr>;

struct SimpleLie {
  RealFormDescriptor form;
};

struct Solvable {
  enum class Kind { Generic, Euclidean, InfiniteCyclic };
  Kind kind = Kind::Generic;
  int dim = 0;  // for Euclidean, the n in R^n
};

struct Finite {
  // nullopt: order unknown but at least 3
  std::optional<std::int64_t> order;
};

struct DirectProduct {
  std::vector<GroupPtr> factors;
};

struct FreeProduct {
  GroupPtr left;
  GroupPtr right;
};

enum class ExtensionMode { Split, Central, General };

struct Extension {
  GroupPtr kernel;
  GroupPtr quotient;
  ExtensionMode mode;
};

/// A group containing the inner group as a subgroup of finite index.
struct FiniteIndex {
  GroupPtr inner;
};

struct GroupExpr {
  std::variant<SimpleLie, Solvable, Finite, DirectProduct, FreeProduct, Extension, FiniteIndex> node;
};

bool operator==(const GroupExpr& a, const GroupExpr& b);

namespace group {
GroupPtr simple(RealFormDescriptor d);
GroupPtr solvable();
GroupPtr euclidean(int n);
GroupPtr integers();
/// Throws std::invalid_argument for order < 1.
GroupPtr finite(std::int64_t order);
GroupPtr finite_unknown();
/// Nested direct products are flattened; a single factor is returned as is.
/// Throws std::invalid_argument for an empty list.
GroupPtr direct(std::vector<GroupPtr> factors);
/// G^n as an n-fold direct product; G^0 is the trivial group.
GroupPtr power(GroupPtr g, int n);
GroupPtr free_product(GroupPtr a, GroupPtr b);
GroupPtr extension(GroupPtr kernel, GroupPtr quotient, ExtensionMode mode);
GroupPtr finite_index(GroupPtr inner);
}  // namespace group

std::string to_string(ExtensionMode m);

/// Parses a group expression. Keywords and descriptor names are
/// case-insensitive and whitespace is ignored.
///
///   expr := term (('x' | '*') term)*      left-associative
///   term := atom ('^' INT)?
///   atom := descriptor | 'R^' INT | 'Z' | 'Z/' INT | 'solvable' | 'finite'
///         | '(' expr ')' | 'ext(' expr ',' expr ',' mode ')' | 'fi(' expr ')'
///
/// Throws SyntaxError (1-based offsets) or InvalidRealForm.
GroupPtr parse_group_expr(std::string_view text);

/// Canonical text; parse_group_expr(to_string(e)) == e.
std::string to_string(const GroupExpr& e);

/// Exact free subgroup rank. Throws RuleNotApplicable where the product and
/// extension rules only give bounds or do not apply.
int nu_eval(const GroupExpr& e);

/// Like nu_eval, but a general extension with nu(kernel) = 0 contributes
/// nu(quotient) as an upper bound.
int nu_upper_bound(const GroupExpr& e);

struct FactorReport {
  std::string name;
  NuResult result;
};

struct Evaluation {
  int value;
  bool exact;  // false: value is only an upper bound
  std::vector<FactorReport> factors;
};

/// nu_eval, falling back to nu_upper_bound when nu_eval rejects the
/// expression. Lists the simple factors in the order they appear.
Evaluation evaluate(const GroupExpr& e, bool want_certificates = false);

}  // namespace sorklie
