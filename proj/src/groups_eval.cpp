// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <limits>

#include "sorklie/errors.hpp"
#include "sorklie/groups.hpp"

namespace sorklie {

namespace {

// What is known about |G|; enough to decide the free product hypotheses.
struct Cardinality {
  enum class Kind { Exact, AtLeast3, Infinite, Unknown };
  Kind kind;
  std::int64_t n = 0;

  bool nontrivial() const { return kind == Kind::AtLeast3 || kind == Kind::Infinite || (kind == Kind::Exact && n >= 2); }
  bool trivial() const { return kind == Kind::Exact && n == 1; }
  bool order_two() const { return kind == Kind::Exact && n == 2; }
};

using Kind = Cardinality::Kind;

Cardinality times(Cardinality a, Cardinality b) {
  if (a.kind == Kind::Infinite || b.kind == Kind::Infinite) return {Kind::Infinite};
  if (a.kind == Kind::Unknown || b.kind == Kind::Unknown) return {Kind::Unknown};
  if (a.kind == Kind::Exact && b.kind == Kind::Exact) {
    if (a.n <= std::numeric_limits<std::int64_t>::max() / b.n) return {Kind::Exact, a.n * b.n};
    return {Kind::AtLeast3};
  }
  return {Kind::AtLeast3};
}

Cardinality cardinality(const GroupExpr& e) {
  if (std::holds_alternative<SimpleLie>(e.node) || std::holds_alternative<Solvable>(e.node)) return {Kind::Infinite};
  if (const auto* f = std::get_if<Finite>(&e.node)) {
    if (f->order) return {Kind::Exact, *f->order};
    return {Kind::AtLeast3};
  }
  if (const auto* dp = std::get_if<DirectProduct>(&e.node)) {
    Cardinality c{Kind::Exact, 1};
    for (const auto& g : dp->factors) c = times(c, cardinality(*g));
    return c;
  }
  if (const auto* fp = std::get_if<FreeProduct>(&e.node)) {
    const auto a = cardinality(*fp->left);
    const auto b = cardinality(*fp->right);
    if (a.trivial()) return b;
    if (b.trivial()) return a;
    if (a.nontrivial() && b.nontrivial()) return {Kind::Infinite};
    return {Kind::Unknown};
  }
  if (const auto* ex = std::get_if<Extension>(&e.node))
    return times(cardinality(*ex->kernel), cardinality(*ex->quotient));
  const auto inner = cardinality(*std::get<FiniteIndex>(e.node).inner);
  if (inner.kind == Kind::Infinite) return inner;
  if (inner.kind == Kind::AtLeast3 || (inner.kind == Kind::Exact && inner.n >= 3)) return {Kind::AtLeast3};
  return {Kind::Unknown};
}

int nu(const GroupExpr& e, bool bound) {
  if (const auto* s = std::get_if<SimpleLie>(&e.node)) return nu_simple(s->form).nu;
  if (std::holds_alternative<Solvable>(e.node) || std::holds_alternative<Finite>(e.node)) return 0;
  if (const auto* dp = std::get_if<DirectProduct>(&e.node)) {
    int sum = 0;
    for (const auto& g : dp->factors) sum += nu(*g, bound);
    return sum;
  }
  if (const auto* fp = std::get_if<FreeProduct>(&e.node)) {
    const auto a = cardinality(*fp->left);
    const auto b = cardinality(*fp->right);
    if (a.trivial() || b.trivial())
      throw RuleNotApplicable("free product with a trivial factor: " + to_string(e));
    if (!a.nontrivial() || !b.nontrivial())
      throw RuleNotApplicable("free product factor not known to be nontrivial: " + to_string(e));
    if (a.order_two() && b.order_two())
      throw RuleNotApplicable("free product of two groups of order two: " + to_string(e));
    return std::max({1, nu(*fp->left, bound), nu(*fp->right, bound)});
  }
  if (const auto* ex = std::get_if<Extension>(&e.node)) {
    if (nu(*ex->kernel, true) != 0)
      throw RuleNotApplicable("extension kernel not known to have nu = 0: " + to_string(e));
    if (ex->mode == ExtensionMode::General && !bound)
      throw RuleNotApplicable("general extension gives only an upper bound: " + to_string(e));
    return nu(*ex->quotient, bound);
  }
  return nu(*std::get<FiniteIndex>(e.node).inner, bound);
}

void collect_factors(const GroupExpr& e, bool certificates, std::vector<FactorReport>& out) {
  if (const auto* s = std::get_if<SimpleLie>(&e.node)) {
    out.push_back({s->form.name(), nu_simple(s->form, certificates)});
  } else if (const auto* dp = std::get_if<DirectProduct>(&e.node)) {
    for (const auto& g : dp->factors) collect_factors(*g, certificates, out);
  } else if (const auto* fp = std::get_if<FreeProduct>(&e.node)) {
    collect_factors(*fp->left, certificates, out);
    collect_factors(*fp->right, certificates, out);
  } else if (const auto* ex = std::get_if<Extension>(&e.node)) {
    collect_factors(*ex->kernel, certificates, out);
    collect_factors(*ex->quotient, certificates, out);
  } else if (const auto* fi = std::get_if<FiniteIndex>(&e.node)) {
    collect_factors(*fi->inner, certificates, out);
  }
}

}  // namespace

int nu_eval(const GroupExpr& e) { return nu(e, false); }

int nu_upper_bound(const GroupExpr& e) { return nu(e, true); }

Evaluation evaluate(const GroupExpr& e, bool want_certificates) {
  Evaluation out{0, true, {}};
  try {
    out.value = nu_eval(e);
  } catch (const RuleNotApplicable&) {
    out.value = nu_upper_bound(e);
    out.exact = false;
  }
  collect_factors(e, want_certificates, out.factors);
  return out;
}

}  // namespace sorklie
