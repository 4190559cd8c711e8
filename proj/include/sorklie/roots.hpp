// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <boost/rational.hpp>

namespace sorklie {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// Label of an irreducible (or, for D2, formally admitted) root system.
///
/// Rank bounds: A r>=1, B r>=2, C r>=2, D r>=2, E r in {6,7,8}, F4, G2.
/// C1 is accepted and stored as A1. D2 and D3 are constructible but flagged:
/// D2 is reducible (A1 x A1) and D3 coincides with A3.
class RootSystemType {
 public:
  /// Throws InvalidType naming the violated bound.
  static RootSystemType make(Family family, int rank);

  /// Parses labels such as "E8", "d4" or "A12".
  static RootSystemType parse(std::string_view text);

  Family family() const noexcept { return family_; }
  int rank() const noexcept { return rank_; }

  bool is_reducible() const noexcept { return family_ == Family::D && rank_ == 2; }
  /// The conventional label of an isomorphic system, if this one is a
  /// low-rank duplicate (D3 -> A3).
  std::optional<RootSystemType> isomorphic_to() const;

  std::string name() const;

  friend auto operator<=>(const RootSystemType&, const RootSystemType&) = default;

 private:
  RootSystemType(Family family, int rank) : family_(family), rank_(rank) {}

  Family family_;
  int rank_;
};

/// A vector of the ambient lattice stored in doubled coordinates: every entry
/// is twice the true coordinate, so half-integral E-family roots stay integral.
/// Ordering is lexicographic on the doubled coordinates.
class Root {
 public:
  Root() = default;
  explicit Root(std::vector<int> doubled) : doubled_(std::move(doubled)) {}

  std::span<const int> doubled() const noexcept { return doubled_; }
  std::size_t ambient_dim() const noexcept { return doubled_.size(); }
  bool is_zero() const noexcept;

  Root operator-() const;
  friend Root operator+(const Root& a, const Root& b);
  friend Root operator-(const Root& a, const Root& b);

  friend bool operator==(const Root&, const Root&) = default;
  friend std::strong_ordering operator<=>(const Root& a, const Root& b);

 private:
  std::vector<int> doubled_;
};

struct RootHash {
  std::size_t operator()(const Root& r) const noexcept;
};

using Rational = boost::rational<std::int64_t>;

/// Exact Euclidean pairing on true coordinates. Throws DimensionError.
Rational inner_product(const Root& a, const Root& b);

/// Four times the true inner product, i.e. the plain dot product of the
/// doubled coordinates. Throws DimensionError.
std::int64_t doubled_dot(const Root& a, const Root& b);

class RootSystem {
 public:
  RootSystem(RootSystemType type, std::vector<Root> roots, std::vector<Root> simple_roots);

  const RootSystemType& type() const noexcept { return type_; }
  /// Sorted ascending.
  std::span<const Root> roots() const noexcept { return roots_; }
  std::span<const Root> simple_roots() const noexcept { return simple_; }
  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t size() const noexcept { return roots_.size(); }

  bool contains(const Root& r) const { return index_.contains(r); }
  std::optional<std::size_t> index_of(const Root& r) const;

 private:
  RootSystemType type_;
  std::vector<Root> roots_;
  std::vector<Root> simple_;
  std::size_t ambient_dim_;
  std::unordered_map<Root, std::size_t, RootHash> index_;
};

/// Standard constructions: A_r in dimension r+1, B/C/D_r in dimension r,
/// E6/E7/E8 inside dimension 8, F4 in dimension 4, G2 in the plane
/// x+y+z=0 of dimension 3. Simple roots follow the Bourbaki numbering.
RootSystem build_root_system(RootSystemType type);

/// Orthogonal with neither sum nor difference a root. Throws MembershipError
/// if either argument is not a root of phi.
bool is_strongly_orthogonal(const Root& a, const Root& b, const RootSystem& phi);

/// True iff a+b in phi implies a+b in sigma for all a, b in sigma.
/// Throws MembershipError if sigma is not a subset of phi.
bool is_closed_subsystem(std::span<const Root> sigma, const RootSystem& phi);

/// True iff -a is in the set whenever a is.
bool is_negation_closed(std::span<const Root> set);

/// Coefficients of r in the simple roots of phi. Throws MembershipError if r
/// is not a root.
std::vector<std::int64_t> simple_root_coefficients(const RootSystem& phi, const Root& r);

/// Dimension of the real span of the given vectors.
std::size_t span_rank(std::span<const Root> vectors);

/// Classical cardinality |Phi| for the type.
std::size_t expected_root_count(RootSystemType type);

}  // namespace sorklie
