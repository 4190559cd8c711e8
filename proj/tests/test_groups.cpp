// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>

#include "sorklie/errors.hpp"
#include "sorklie/groups.hpp"

using namespace sorklie;
using RF = RealFormDescriptor;

namespace {

int nu_of(std::string_view text) { return nu_eval(*parse_group_expr(text)); }

GroupPtr random_atom(std::mt19937_64& rng) {
  switch (rng() % 12) {
    case 0:
      return group::simple(RF::su(2));
    case 1:
      return group::simple(RF::sl_real(2));
    case 2:
      return group::simple(RF::so(3, 5));
    case 3:
      return group::simple(RF::sp(2, 1));
    case 4:
      return group::simple(RF::exceptional(Family::E, 6, -26));
    case 5:
      return group::simple(RF::complex_simple(RootSystemType::make(Family::G, 2)));
    case 6:
      return group::integers();
    case 7:
      return group::euclidean(1 + static_cast<int>(rng() % 4));
    case 8:
      return group::finite(1 + static_cast<std::int64_t>(rng() % 6));
    case 9:
      return group::finite_unknown();
    case 10:
      return group::solvable();
    default:
      return group::simple(RF::so_star(10));
  }
}

GroupPtr random_expr(std::mt19937_64& rng, int depth) {
  if (depth == 0 || rng() % 3 == 0) return random_atom(rng);
  switch (rng() % 5) {
    case 0:
      return group::direct({random_expr(rng, depth - 1), random_expr(rng, depth - 1)});
    case 1:
      return group::free_product(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    case 2: {
      const ExtensionMode modes[] = {ExtensionMode::Split, ExtensionMode::Central, ExtensionMode::General};
      return group::extension(random_expr(rng, depth - 1), random_expr(rng, depth - 1), modes[rng() % 3]);
    }
    case 3:
      return group::finite_index(random_expr(rng, depth - 1));
    default:
      return group::power(random_expr(rng, depth - 1), 1 + static_cast<int>(rng() % 3));
  }
}

}  // namespace

TEST(Parse, DirectProductWithPower) {
  const auto e = parse_group_expr("SL(2,R) x SU(2)^3");
  const auto* p = std::get_if<DirectProduct>(&e->node);
  ASSERT_NE(p, nullptr);
  ASSERT_EQ(p->factors.size(), 4U);
  EXPECT_EQ(std::get<SimpleLie>(p->factors[0]->node).form, RF::split(RootSystemType::make(Family::A, 1)));
  for (std::size_t i = 1; i < 4; ++i)
    EXPECT_EQ(std::get<SimpleLie>(p->factors[i]->node).form, RF::compact(RootSystemType::make(Family::A, 1)));
  EXPECT_EQ(to_string(*e), "sl(2,R) x su(2) x su(2) x su(2)");
}

TEST(Parse, FreeProductOfIntegers) {
  const auto e = parse_group_expr("Z * Z");
  const auto* f = std::get_if<FreeProduct>(&e->node);
  ASSERT_NE(f, nullptr);
  for (const auto& side : {f->left, f->right}) {
    const auto* s = std::get_if<Solvable>(&side->node);
    ASSERT_NE(s, nullptr);
    EXPECT_EQ(s->kind, Solvable::Kind::InfiniteCyclic);
  }
}

TEST(Parse, SyntaxErrorOffsets) {
  try {
    parse_group_expr("so(3,5");
    FAIL() << "expected a syntax error";
  } catch (const SyntaxError& e) {
    EXPECT_NE(std::string(e.what()).find("offset 7"), std::string::npos) << e.what();
  }
  try {
    parse_group_expr("Z x # Z");
    FAIL() << "expected a syntax error";
  } catch (const SyntaxError& e) {
    EXPECT_NE(std::string(e.what()).find("offset 5"), std::string::npos) << e.what();
  }
  for (const auto* bad : {"", "x", "Z x", "Z^", "Z/0", "R^0", "ext(Z, Z)", "ext(Z, Z, weird)", "fi(", "(Z", "Z Z",
                          "sl(2,Q)", "su(2)^99999"})
    EXPECT_THROW(parse_group_expr(bad), SyntaxError) << bad;
}

TEST(Parse, InvalidParametersPropagate) {
  EXPECT_THROW(parse_group_expr("so(2,2)"), InvalidRealForm);
  EXPECT_THROW(parse_group_expr("su(1)"), InvalidRealForm);
  EXPECT_THROW(parse_group_expr("E6(-25)"), InvalidRealForm);
  EXPECT_THROW(parse_group_expr("E9(8)"), InvalidRealForm);
  EXPECT_THROW(parse_group_expr("complex(B1)"), InvalidRealForm);
}

TEST(Parse, CaseAndWhitespaceInsensitive) {
  const auto a = parse_group_expr("sl(2,R) x su(2)");
  EXPECT_EQ(*parse_group_expr("  SL ( 2 , r )x\tSu(2) "), *a);
  EXPECT_EQ(*parse_group_expr("sl(2,R)xsu(2)"), *a);
  EXPECT_EQ(*parse_group_expr("z*z"), *parse_group_expr("Z * Z"));
}

TEST(Parse, Atoms) {
  EXPECT_EQ(*parse_group_expr("R^3"), *group::euclidean(3));
  EXPECT_EQ(*parse_group_expr("Z/5"), *group::finite(5));
  EXPECT_EQ(*parse_group_expr("solvable"), *group::solvable());
  EXPECT_EQ(*parse_group_expr("so*(8)"), *group::simple(RF::so_star(8)));
  EXPECT_EQ(*parse_group_expr("sl(3,C)"), *group::simple(RF::sl_complex(3)));
  EXPECT_EQ(*parse_group_expr("sl(2,H)"), *group::simple(RF::sl_quaternion(2)));
  EXPECT_EQ(*parse_group_expr("sp(2,R)"), *group::simple(RF::sp_real(2)));
  EXPECT_EQ(*parse_group_expr("sp(2,1)"), *group::simple(RF::sp(2, 1)));
  EXPECT_EQ(*parse_group_expr("E8(-24)"), *group::simple(RF::exceptional(Family::E, 8, -24)));
  EXPECT_EQ(*parse_group_expr("complex(G2)"), *group::simple(RF::complex_simple(RootSystemType::make(Family::G, 2))));
  EXPECT_EQ(*parse_group_expr("fi(Z)"), *group::finite_index(group::integers()));
  EXPECT_EQ(*parse_group_expr("ext(R^3, sl(2,R), split)"),
            *group::extension(group::euclidean(3), group::simple(RF::sl_real(2)), ExtensionMode::Split));
}

TEST(Parse, LeftAssociativeMixedProducts) {
  const auto e = parse_group_expr("Z * Z x su(2)");
  const auto* p = std::get_if<DirectProduct>(&e->node);
  ASSERT_NE(p, nullptr);
  ASSERT_EQ(p->factors.size(), 2U);
  EXPECT_NE(std::get_if<FreeProduct>(&p->factors[0]->node), nullptr);
  EXPECT_EQ(nu_eval(*e), 2);
}

TEST(Parse, RoundTripOnGeneratedExpressions) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 100; ++i) {
    const auto e = random_expr(rng, 3);
    const auto text = to_string(*e);
    const auto back = parse_group_expr(text);
    EXPECT_EQ(*back, *e) << text;
    EXPECT_EQ(to_string(*back), text);
  }
}

TEST(Nu, SpecExamples) {
  EXPECT_EQ(nu_of("SL(2,R) x SU(2)"), 2);
  EXPECT_EQ(nu_of("Z * Z"), 1);
  EXPECT_THROW(nu_of("Z/2 * Z/2"), RuleNotApplicable);
  EXPECT_EQ(nu_of("ext(R^3, SL(2,R), split)"), 1);
  EXPECT_THROW(nu_of("ext(R^3, SL(2,R), general)"), RuleNotApplicable);
  EXPECT_EQ(nu_upper_bound(*parse_group_expr("ext(R^3, SL(2,R), general)")), 1);
  EXPECT_EQ(nu_upper_bound(*parse_group_expr("ext(solvable, solvable, general)")), 0);
}

TEST(Nu, SimplePowersAreAdditive) {
  for (int k = 0; k <= 5; ++k)
    for (int m = 0; m <= 5; ++m) {
      const auto e = group::direct({group::power(group::simple(RF::su(2)), k),
                                    group::power(group::simple(RF::sl_real(2)), m)});
      EXPECT_EQ(nu_eval(*e), k + m) << k << "," << m;
      if (k > 0 && m > 0) {
        const auto text = "su(2)^" + std::to_string(k) + " x sl(2,R)^" + std::to_string(m);
        EXPECT_EQ(nu_of(text), k + m) << text;
      }
    }
}

TEST(Nu, AdditivityOnGeneratedPairs) {
  std::mt19937_64 rng(23);
  int checked = 0;
  for (int i = 0; i < 400 && checked < 100; ++i) {
    const auto a = random_expr(rng, 2);
    const auto b = random_expr(rng, 2);
    int na = 0;
    int nb = 0;
    try {
      na = nu_eval(*a);
      nb = nu_eval(*b);
    } catch (const RuleNotApplicable&) {
      continue;
    }
    EXPECT_EQ(nu_eval(*group::direct({a, b})), na + nb) << to_string(*a) << " ; " << to_string(*b);
    EXPECT_EQ(nu_eval(*group::power(a, 3)), 3 * na) << to_string(*a);
    ++checked;
  }
  EXPECT_EQ(checked, 100);
}

TEST(Nu, FiniteIndexIsTransparent) {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 200; ++i) {
    const auto e = random_expr(rng, 3);
    const auto fi = group::finite_index(e);
    try {
      const int v = nu_eval(*e);
      EXPECT_EQ(nu_eval(*fi), v) << to_string(*e);
    } catch (const RuleNotApplicable&) {
      EXPECT_THROW(nu_eval(*fi), RuleNotApplicable) << to_string(*e);
    }
    try {
      const int b = nu_upper_bound(*e);
      EXPECT_EQ(nu_upper_bound(*fi), b) << to_string(*e);
    } catch (const RuleNotApplicable&) {
      EXPECT_THROW(nu_upper_bound(*fi), RuleNotApplicable) << to_string(*e);
    }
  }
}

TEST(Nu, FreeProductHypotheses) {
  EXPECT_EQ(nu_of("Z/2 * Z/3"), 1);
  EXPECT_EQ(nu_of("Z/3 * Z/3"), 1);
  EXPECT_EQ(nu_of("Z/2 * Z"), 1);
  EXPECT_EQ(nu_of("(su(2) x su(2)) * Z/2"), 2);
  EXPECT_EQ(nu_of("sl(2,R) * so(3,5)"), 3);
  EXPECT_THROW(nu_of("Z/1 * Z"), RuleNotApplicable);
  EXPECT_THROW(nu_of("Z * Z/1"), RuleNotApplicable);
  EXPECT_THROW(nu_of("Z/2 * (Z/2 x Z/1)"), RuleNotApplicable);
  EXPECT_EQ(nu_of("(Z/2 x Z/2) * Z/2"), 1);
  EXPECT_EQ(nu_of("fi(Z) * Z/2"), 1);
}

TEST(Nu, Extensions) {
  EXPECT_EQ(nu_of("ext(R^3, su(3) x sl(2,R), central)"), 2);
  EXPECT_EQ(nu_of("ext(Z/2, so(3,5), central)"), 3);
  EXPECT_EQ(nu_of("ext(solvable, E8(-24), split)"), 8);
  EXPECT_THROW(nu_of("ext(su(2), sl(2,R), split)"), RuleNotApplicable);
  EXPECT_THROW(nu_of("ext(su(2), sl(2,R), central)"), RuleNotApplicable);
  EXPECT_THROW(nu_upper_bound(*parse_group_expr("ext(su(2), sl(2,R), general)")), RuleNotApplicable);
  EXPECT_EQ(nu_upper_bound(*parse_group_expr("ext(R^2, so(7,1) x su(2), general)")), 4);
}

TEST(Evaluate, ExactAndBound) {
  const auto exact = evaluate(*parse_group_expr("sl(2,R) x so(3,5)"), true);
  EXPECT_TRUE(exact.exact);
  EXPECT_EQ(exact.value, 4);
  ASSERT_EQ(exact.factors.size(), 2U);
  EXPECT_EQ(exact.factors[0].name, "sl(2,R)");
  EXPECT_EQ(exact.factors[1].result.nu, 3);
  EXPECT_EQ(exact.factors[1].result.nu_case, NuCase::SopqException);
  ASSERT_TRUE(exact.factors[1].result.certificate.has_value());
  EXPECT_EQ(exact.factors[1].result.certificate->roots.size(), 3U);

  const auto bound = evaluate(*parse_group_expr("ext(R^3, sl(2,R), general)"));
  EXPECT_FALSE(bound.exact);
  EXPECT_EQ(bound.value, 1);
  EXPECT_FALSE(bound.factors[0].result.certificate.has_value());

  EXPECT_THROW(evaluate(*parse_group_expr("Z/2 * Z/2")), RuleNotApplicable);
}

TEST(Builders, Validation) {
  EXPECT_THROW(group::finite(0), std::invalid_argument);
  EXPECT_THROW(group::euclidean(0), std::invalid_argument);
  EXPECT_EQ(*group::power(group::integers(), 0), *group::finite(1));
  EXPECT_EQ(*group::power(group::integers(), 1), *group::integers());
  EXPECT_EQ(*group::direct({group::integers()}), *group::integers());
  EXPECT_EQ(to_string(ExtensionMode::Central), "central");
}
