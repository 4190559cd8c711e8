// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "sorklie/errors.hpp"
#include "sorklie/roots.hpp"

using namespace sorklie;

namespace {

std::size_t classical_count(RootSystemType t) {
  const auto r = static_cast<std::size_t>(t.rank());
  switch (t.family()) {
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

std::set<oracle::Vec> as_set(const RootSystem& phi) {
  std::set<oracle::Vec> s;
  for (const auto& r : phi.roots()) s.insert(oracle::to_vec(r));
  return s;
}

}  // namespace

TEST(RootSystemType, ValidatesRankBounds) {
  EXPECT_THROW(RootSystemType::make(Family::A, 0), InvalidType);
  EXPECT_THROW(RootSystemType::make(Family::B, 1), InvalidType);
  EXPECT_THROW(RootSystemType::make(Family::D, 1), InvalidType);
  EXPECT_THROW(RootSystemType::make(Family::E, 5), InvalidType);
  EXPECT_THROW(RootSystemType::make(Family::E, 9), InvalidType);
  EXPECT_THROW(RootSystemType::make(Family::F, 3), InvalidType);
  EXPECT_THROW(RootSystemType::make(Family::G, 3), InvalidType);
  EXPECT_NO_THROW(RootSystemType::make(Family::D, 2));
}

TEST(RootSystemType, LowRankLabels) {
  EXPECT_EQ(RootSystemType::make(Family::C, 1), RootSystemType::make(Family::A, 1));
  EXPECT_TRUE(RootSystemType::make(Family::D, 2).is_reducible());
  EXPECT_FALSE(RootSystemType::make(Family::D, 4).is_reducible());
  const auto d3 = RootSystemType::make(Family::D, 3).isomorphic_to();
  ASSERT_TRUE(d3.has_value());
  EXPECT_EQ(*d3, RootSystemType::make(Family::A, 3));
  EXPECT_FALSE(RootSystemType::make(Family::D, 5).isomorphic_to().has_value());
}

TEST(RootSystemType, Parse) {
  EXPECT_EQ(RootSystemType::parse("E8"), RootSystemType::make(Family::E, 8));
  EXPECT_EQ(RootSystemType::parse("d12"), RootSystemType::make(Family::D, 12));
  EXPECT_EQ(RootSystemType::parse("E8").name(), "E8");
  EXPECT_THROW(RootSystemType::parse("X3"), InvalidType);
  EXPECT_THROW(RootSystemType::parse("A"), InvalidType);
  EXPECT_THROW(RootSystemType::parse("A1x"), InvalidType);
  EXPECT_THROW(RootSystemType::parse("B1"), InvalidType);
}

TEST(Root, ArithmeticAndOrder) {
  const Root a({2, -2, 0});
  const Root b({0, 2, -2});
  EXPECT_EQ(a + b, Root({2, 0, -2}));
  EXPECT_EQ(a - b, Root({2, -4, 2}));
  EXPECT_EQ(-a, Root({-2, 2, 0}));
  EXPECT_LT(b, a);
  EXPECT_EQ(doubled_dot(a, b), -4);
  EXPECT_EQ(inner_product(a, b), Rational(-1));
  EXPECT_THROW(a + Root({1, 1}), DimensionError);
  EXPECT_THROW(doubled_dot(a, Root({1, 1})), DimensionError);
}

TEST(RootSystem, CountsUpToRankTwelve) {
  for (const auto t : oracle::constructible_types(12)) {
    const auto phi = build_root_system(t);
    EXPECT_EQ(phi.size(), classical_count(t)) << t.name();
    EXPECT_EQ(phi.size(), expected_root_count(t)) << t.name();
  }
}

TEST(RootSystem, SimpleReflectionsGenerateTheRoots) {
  for (const auto t : oracle::constructible_types(8)) {
    const auto phi = build_root_system(t);
    std::vector<oracle::Vec> simple;
    for (const auto& s : phi.simple_roots()) simple.push_back(oracle::to_vec(s));
    EXPECT_EQ(simple.size(), static_cast<std::size_t>(t.rank())) << t.name();
    EXPECT_EQ(oracle::reflection_closure(simple), as_set(phi)) << t.name();
  }
}

TEST(RootSystem, AntipodalSymmetry) {
  for (const auto t : oracle::constructible_types(12)) {
    const auto phi = build_root_system(t);
    for (const auto& r : phi.roots()) ASSERT_TRUE(phi.contains(-r)) << t.name();
    EXPECT_TRUE(is_negation_closed(phi.roots())) << t.name();
  }
}

TEST(RootSystem, CrystallographicIntegrality) {
  for (const auto t : oracle::constructible_types(7)) {
    const auto phi = build_root_system(t);
    for (const auto& a : phi.roots())
      for (const auto& b : phi.roots()) {
        const auto num = 2 * doubled_dot(a, b);
        const auto den = doubled_dot(b, b);
        ASSERT_EQ(num % den, 0) << t.name();
        ASSERT_LE(std::abs(num / den), 3) << t.name();
      }
  }
}

TEST(RootSystem, SimpleRootCoefficientsShareASign) {
  for (const auto t : oracle::constructible_types(6)) {
    const auto phi = build_root_system(t);
    std::size_t positive = 0;
    for (const auto& r : phi.roots()) {
      const auto c = simple_root_coefficients(phi, r);
      const bool nonneg = std::all_of(c.begin(), c.end(), [](auto x) { return x >= 0; });
      const bool nonpos = std::all_of(c.begin(), c.end(), [](auto x) { return x <= 0; });
      ASSERT_TRUE(nonneg || nonpos) << t.name();
      positive += nonneg ? 1 : 0;
    }
    EXPECT_EQ(2 * positive, phi.size()) << t.name();
  }
}

TEST(RootSystem, SimpleRootCoefficientsRejectNonRoots) {
  const auto phi = build_root_system(RootSystemType::make(Family::A, 2));
  EXPECT_THROW(simple_root_coefficients(phi, Root({2, 2, -4})), MembershipError);
}

TEST(RootSystem, E8InnerProducts) {
  const auto phi = build_root_system(RootSystemType::make(Family::E, 8));
  ASSERT_EQ(phi.ambient_dim(), 8U);
  for (const auto& a : phi.roots()) {
    ASSERT_EQ(inner_product(a, a), Rational(2));
    for (const auto& b : phi.roots()) {
      const auto d = doubled_dot(a, b);
      ASSERT_TRUE(d == 0 || d == 4 || d == -4 || d == 8 || d == -8);
    }
  }
}

TEST(RootSystem, AmbientDimensions) {
  EXPECT_EQ(build_root_system(RootSystemType::make(Family::A, 4)).ambient_dim(), 5U);
  EXPECT_EQ(build_root_system(RootSystemType::make(Family::B, 4)).ambient_dim(), 4U);
  EXPECT_EQ(build_root_system(RootSystemType::make(Family::E, 6)).ambient_dim(), 8U);
  EXPECT_EQ(build_root_system(RootSystemType::make(Family::F, 4)).ambient_dim(), 4U);
  EXPECT_EQ(build_root_system(RootSystemType::make(Family::G, 2)).ambient_dim(), 3U);
}

TEST(RootSystem, SpanRank) {
  for (const auto t : oracle::constructible_types(8)) {
    const auto phi = build_root_system(t);
    EXPECT_EQ(span_rank(phi.roots()), static_cast<std::size_t>(t.rank())) << t.name();
  }
}

TEST(StrongOrthogonality, Predicate) {
  const auto b2 = build_root_system(RootSystemType::make(Family::B, 2));
  // e1, e2 are orthogonal but e1 + e2 is a root
  EXPECT_FALSE(is_strongly_orthogonal(Root({2, 0}), Root({0, 2}), b2));
  // e1 - e2 and e1 + e2: their sum 2 e1 is not a root of B2
  EXPECT_TRUE(is_strongly_orthogonal(Root({2, -2}), Root({2, 2}), b2));
  EXPECT_THROW(is_strongly_orthogonal(Root({4, 0}), Root({0, 2}), b2), MembershipError);

  const auto c2 = build_root_system(RootSystemType::make(Family::C, 2));
  // in C2, (e1 - e2) + (e1 + e2) = 2 e1 is a long root
  EXPECT_FALSE(is_strongly_orthogonal(Root({2, -2}), Root({2, 2}), c2));
  EXPECT_TRUE(is_strongly_orthogonal(Root({4, 0}), Root({0, 4}), c2));
}

TEST(StrongOrthogonality, AgreesWithOracle) {
  for (const auto t : oracle::constructible_types(5)) {
    const auto phi = build_root_system(t);
    const auto set = as_set(phi);
    for (const auto& a : phi.roots())
      for (const auto& b : phi.roots())
        ASSERT_EQ(is_strongly_orthogonal(a, b, phi),
                  oracle::strongly_orthogonal(oracle::to_vec(a), oracle::to_vec(b), set))
            << t.name();
  }
}

TEST(ClosedSubsystem, Basics) {
  const auto a2 = build_root_system(RootSystemType::make(Family::A, 2));
  const std::vector<Root> a1{Root({2, -2, 0}), Root({-2, 2, 0})};
  EXPECT_TRUE(is_closed_subsystem(a1, a2));
  const std::vector<Root> open{Root({2, -2, 0}), Root({0, 2, -2})};
  EXPECT_FALSE(is_closed_subsystem(open, a2));
  EXPECT_TRUE(is_closed_subsystem(a2.roots(), a2));
  const std::vector<Root> stray{Root({2, 0, 0})};
  EXPECT_THROW(is_closed_subsystem(stray, a2), MembershipError);
  EXPECT_FALSE(is_negation_closed(open));
}
