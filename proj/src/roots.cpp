// SPDX-License-Identifier: Apache-2.0

#include "sorklie/roots.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>

#include "exact_linalg.hpp"
#include "sorklie/errors.hpp"

namespace sorklie {

namespace {

void require_rank(bool ok, char family, int rank, const char* bound) {
  if (!ok)
    throw InvalidType(std::string("invalid root system type ") + family + std::to_string(rank) +
                      ": rank must satisfy " + bound);
}

void check_dims(const Root& a, const Root& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw DimensionError("ambient dimension mismatch: " + std::to_string(a.ambient_dim()) + " vs " +
                         std::to_string(b.ambient_dim()));
}

// Unit vector scaled by `value` in doubled coordinates.
std::vector<int> basis(std::size_t dim, std::size_t i, int value) {
  std::vector<int> v(dim, 0);
  v[i] = value;
  return v;
}

std::vector<int> pair(std::size_t dim, std::size_t i, int si, std::size_t j, int sj) {
  std::vector<int> v(dim, 0);
  v[i] = 2 * si;
  v[j] = 2 * sj;
  return v;
}

// +-e_i +- e_j for all i<j in the first `span` coordinates.
void add_long_pairs(std::vector<Root>& out, std::size_t dim, std::size_t span) {
  for (std::size_t i = 0; i < span; ++i)
    for (std::size_t j = i + 1; j < span; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) out.emplace_back(pair(dim, i, si, j, sj));
}

// Simple roots e_i - e_{i+1}, i = 0..count-1.
void add_chain(std::vector<Root>& simple, std::size_t dim, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) simple.emplace_back(pair(dim, i, 1, i + 1, -1));
}

std::vector<Root> e8_roots() {
  std::vector<Root> roots;
  add_long_pairs(roots, 8, 8);
  for (unsigned mask = 0; mask < 256; ++mask) {
    if (__builtin_popcount(mask) % 2 != 0) continue;
    std::vector<int> v(8);
    for (unsigned i = 0; i < 8; ++i) v[i] = (mask >> i) & 1u ? -1 : 1;
    roots.emplace_back(std::move(v));
  }
  return roots;
}

// Bourbaki simple roots of E8 in doubled coordinates.
std::vector<Root> e8_simple() {
  std::vector<Root> s;
  s.emplace_back(std::vector<int>{1, -1, -1, -1, -1, -1, -1, 1});
  s.emplace_back(pair(8, 0, 1, 1, 1));
  for (std::size_t i = 0; i < 6; ++i) s.emplace_back(pair(8, i + 1, 1, i, -1));
  return s;
}

RootSystem build_e(int rank) {
  auto all = e8_roots();
  auto simple = e8_simple();
  simple.resize(static_cast<std::size_t>(rank));
  // E7 is the centralizer of e7+e8 in E8, E6 additionally of e6+e8.
  std::vector<Root> constraints;
  if (rank <= 7) constraints.emplace_back(pair(8, 6, 1, 7, 1));
  if (rank <= 6) constraints.emplace_back(pair(8, 5, 1, 7, 1));
  std::vector<Root> roots;
  for (auto& r : all) {
    bool keep = std::all_of(constraints.begin(), constraints.end(),
                            [&](const Root& c) { return doubled_dot(r, c) == 0; });
    if (keep) roots.push_back(std::move(r));
  }
  return RootSystem(RootSystemType::make(Family::E, rank), std::move(roots), std::move(simple));
}

}  // namespace

RootSystemType RootSystemType::make(Family family, int rank) {
  const char f = static_cast<char>(family);
  switch (family) {
    case Family::A:
      require_rank(rank >= 1, f, rank, "r >= 1");
      break;
    case Family::B:
      require_rank(rank >= 2, f, rank, "r >= 2");
      break;
    case Family::C:
      require_rank(rank >= 1, f, rank, "r >= 2 (C1 is accepted as A1)");
      if (rank == 1) return RootSystemType(Family::A, 1);
      break;
    case Family::D:
      require_rank(rank >= 2, f, rank, "r >= 2");
      break;
    case Family::E:
      require_rank(rank >= 6 && rank <= 8, f, rank, "r in {6, 7, 8}");
      break;
    case Family::F:
      require_rank(rank == 4, f, rank, "r = 4");
      break;
    case Family::G:
      require_rank(rank == 2, f, rank, "r = 2");
      break;
    default:
      throw InvalidType("unknown root system family");
  }
  return RootSystemType(family, rank);
}

RootSystemType RootSystemType::parse(std::string_view text) {
  if (text.size() < 2) throw InvalidType("invalid root system type '" + std::string(text) + "'");
  const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text.front())));
  if (letter < 'A' || letter > 'G')
    throw InvalidType("invalid root system family '" + std::string(1, text.front()) + "'");
  int rank = 0;
  const auto digits = text.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
  if (ec != std::errc() || ptr != digits.data() + digits.size())
    throw InvalidType("invalid root system rank in '" + std::string(text) + "'");
  return make(static_cast<Family>(letter), rank);
}

std::optional<RootSystemType> RootSystemType::isomorphic_to() const {
  if (family_ == Family::D && rank_ == 3) return RootSystemType(Family::A, 3);
  return std::nullopt;
}

std::string RootSystemType::name() const { return std::string(1, static_cast<char>(family_)) + std::to_string(rank_); }

bool Root::is_zero() const noexcept {
  return std::all_of(doubled_.begin(), doubled_.end(), [](int x) { return x == 0; });
}

Root Root::operator-() const {
  std::vector<int> v(doubled_.size());
  std::transform(doubled_.begin(), doubled_.end(), v.begin(), std::negate<>());
  return Root(std::move(v));
}

Root operator+(const Root& a, const Root& b) {
  check_dims(a, b);
  std::vector<int> v(a.doubled_.size());
  std::transform(a.doubled_.begin(), a.doubled_.end(), b.doubled_.begin(), v.begin(), std::plus<>());
  return Root(std::move(v));
}

Root operator-(const Root& a, const Root& b) {
  check_dims(a, b);
  std::vector<int> v(a.doubled_.size());
  std::transform(a.doubled_.begin(), a.doubled_.end(), b.doubled_.begin(), v.begin(), std::minus<>());
  return Root(std::move(v));
}

std::strong_ordering operator<=>(const Root& a, const Root& b) {
  return std::lexicographical_compare_three_way(a.doubled_.begin(), a.doubled_.end(), b.doubled_.begin(),
                                                b.doubled_.end());
}

std::size_t RootHash::operator()(const Root& r) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (int x : r.doubled()) {
    h ^= static_cast<std::size_t>(static_cast<unsigned>(x));
    h *= 0x100000001b3ull;
  }
  return h;
}

std::int64_t doubled_dot(const Root& a, const Root& b) {
  check_dims(a, b);
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.ambient_dim(); ++i)
    s += static_cast<std::int64_t>(a.doubled()[i]) * b.doubled()[i];
  return s;
}

Rational inner_product(const Root& a, const Root& b) { return Rational(doubled_dot(a, b), 4); }

RootSystem::RootSystem(RootSystemType type, std::vector<Root> roots, std::vector<Root> simple_roots)
    : type_(type), roots_(std::move(roots)), simple_(std::move(simple_roots)), ambient_dim_(0) {
  std::sort(roots_.begin(), roots_.end());
  roots_.erase(std::unique(roots_.begin(), roots_.end()), roots_.end());
  if (!roots_.empty()) ambient_dim_ = roots_.front().ambient_dim();
  index_.reserve(roots_.size());
  for (std::size_t i = 0; i < roots_.size(); ++i) index_.emplace(roots_[i], i);
}

std::optional<std::size_t> RootSystem::index_of(const Root& r) const {
  auto it = index_.find(r);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

RootSystem build_root_system(RootSystemType type) {
  const auto r = static_cast<std::size_t>(type.rank());
  std::vector<Root> roots;
  std::vector<Root> simple;
  switch (type.family()) {
    case Family::A: {
      const std::size_t dim = r + 1;
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
          if (i != j) roots.emplace_back(pair(dim, i, 1, j, -1));
      add_chain(simple, dim, r);
      break;
    }
    case Family::B:
      add_long_pairs(roots, r, r);
      for (std::size_t i = 0; i < r; ++i) {
        roots.emplace_back(basis(r, i, 2));
        roots.emplace_back(basis(r, i, -2));
      }
      add_chain(simple, r, r - 1);
      simple.emplace_back(basis(r, r - 1, 2));
      break;
    case Family::C:
      add_long_pairs(roots, r, r);
      for (std::size_t i = 0; i < r; ++i) {
        roots.emplace_back(basis(r, i, 4));
        roots.emplace_back(basis(r, i, -4));
      }
      add_chain(simple, r, r - 1);
      simple.emplace_back(basis(r, r - 1, 4));
      break;
    case Family::D:
      add_long_pairs(roots, r, r);
      add_chain(simple, r, r - 1);
      simple.emplace_back(pair(r, r - 2, 1, r - 1, 1));
      break;
    case Family::E:
      return build_e(type.rank());
    case Family::F: {
      add_long_pairs(roots, 4, 4);
      for (std::size_t i = 0; i < 4; ++i) {
        roots.emplace_back(basis(4, i, 2));
        roots.emplace_back(basis(4, i, -2));
      }
      for (unsigned mask = 0; mask < 16; ++mask) {
        std::vector<int> v(4);
        for (unsigned i = 0; i < 4; ++i) v[i] = (mask >> i) & 1u ? -1 : 1;
        roots.emplace_back(std::move(v));
      }
      simple.emplace_back(pair(4, 1, 1, 2, -1));
      simple.emplace_back(pair(4, 2, 1, 3, -1));
      simple.emplace_back(basis(4, 3, 2));
      simple.emplace_back(std::vector<int>{1, -1, -1, -1});
      break;
    }
    case Family::G: {
      for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j)
          if (i != j) roots.emplace_back(pair(3, i, 1, j, -1));
        // long roots +-(2e_i - e_j - e_k)
        std::vector<int> v(3, -2);
        v[i] = 4;
        Root longroot(std::move(v));
        roots.push_back(-longroot);
        roots.push_back(std::move(longroot));
      }
      simple.emplace_back(pair(3, 0, 1, 1, -1));
      simple.emplace_back(std::vector<int>{-4, 2, 2});
      break;
    }
  }
  return RootSystem(type, std::move(roots), std::move(simple));
}

bool is_strongly_orthogonal(const Root& a, const Root& b, const RootSystem& phi) {
  if (!phi.contains(a) || !phi.contains(b)) throw MembershipError("root is not in " + phi.type().name());
  if (doubled_dot(a, b) != 0) return false;
  return !phi.contains(a + b) && !phi.contains(a - b);
}

bool is_closed_subsystem(std::span<const Root> sigma, const RootSystem& phi) {
  for (const auto& r : sigma)
    if (!phi.contains(r)) throw MembershipError("subset element is not in " + phi.type().name());
  std::unordered_map<Root, bool, RootHash> members;
  for (const auto& r : sigma) members.emplace(r, true);
  for (const auto& a : sigma)
    for (const auto& b : sigma) {
      const Root s = a + b;
      if (phi.contains(s) && !members.contains(s)) return false;
    }
  return true;
}

bool is_negation_closed(std::span<const Root> set) {
  std::unordered_map<Root, bool, RootHash> members;
  for (const auto& r : set) members.emplace(r, true);
  return std::all_of(set.begin(), set.end(), [&](const Root& r) { return members.contains(-r); });
}

std::vector<std::int64_t> simple_root_coefficients(const RootSystem& phi, const Root& r) {
  if (!phi.contains(r)) throw MembershipError("vector is not a root of " + phi.type().name());
  const auto simple = phi.simple_roots();
  detail::RationalMatrix a(phi.ambient_dim(), std::vector<Rational>(simple.size()));
  std::vector<Rational> b(phi.ambient_dim());
  for (std::size_t i = 0; i < phi.ambient_dim(); ++i) {
    for (std::size_t j = 0; j < simple.size(); ++j) a[i][j] = simple[j].doubled()[i];
    b[i] = r.doubled()[i];
  }
  const auto x = detail::solve_unique(a, b);
  if (!x) throw MembershipError("root is not in the span of the simple roots");
  std::vector<std::int64_t> coeffs;
  coeffs.reserve(x->size());
  for (const auto& c : *x) {
    if (c.denominator() != 1) throw MembershipError("root has non-integral simple-root coefficients");
    coeffs.push_back(c.numerator());
  }
  return coeffs;
}

std::size_t span_rank(std::span<const Root> vectors) {
  if (vectors.empty()) return 0;
  detail::RationalMatrix m;
  m.reserve(vectors.size());
  for (const auto& v : vectors) m.emplace_back(v.doubled().begin(), v.doubled().end());
  return detail::rank(std::move(m));
}

std::size_t expected_root_count(RootSystemType type) {
  const auto r = static_cast<std::size_t>(type.rank());
  switch (type.family()) {
    case Family::A:
      return r * (r + 1);
    case Family::B:
    case Family::C:
      return 2 * r * r;
    case Family::D:
      return 2 * r * (r - 1);
    case Family::E:
      return r == 6 ? 72 : r == 7 ? 126 : 240;
    case Family::F:
      return 48;
    case Family::G:
      return 12;
  }
  return 0;
}

}  // namespace sorklie
