// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "sorklie/errors.hpp"
#include "sorklie/sork.hpp"

using namespace sorklie;

namespace {

std::set<oracle::Vec> as_set(const RootSystem& phi) {
  std::set<oracle::Vec> s;
  for (const auto& r : phi.roots()) s.insert(oracle::to_vec(r));
  return s;
}

}  // namespace

TEST(SorkFormula, MatchesPublishedTable) {
  for (const auto t : oracle::constructible_types(30))
    EXPECT_EQ(sork_formula(t), oracle::tabulated_sork(t.family(), t.rank())) << t.name();
}

TEST(SorkExact, MatchesFormulaUpToRankTwelve) {
  for (const auto t : oracle::constructible_types(12)) {
    const auto phi = build_root_system(t);
    const auto result = sork_exact(phi);
    EXPECT_EQ(result.n, static_cast<std::size_t>(oracle::tabulated_sork(t.family(), t.rank()))) << t.name();
    EXPECT_EQ(result.certificate.roots.size(), result.n) << t.name();
    EXPECT_EQ(result.certificate.system_type, t);
  }
}

TEST(SorkExact, MatchesExhaustiveSearchOnFullRootSet) {
  for (const auto t : oracle::constructible_types(4)) {
    if (t.rank() > 4) continue;
    const auto phi = build_root_system(t);
    EXPECT_EQ(sork_exact(phi).n, oracle::brute_force_sork(as_set(phi))) << t.name();
  }
}

TEST(SorkExact, SerialAndParallelCertificatesAgree) {
  for (const auto t : oracle::constructible_types(9)) {
    const auto phi = build_root_system(t);
    EXPECT_EQ(sork_exact(phi, Solver::Serial).certificate, sork_exact(phi, Solver::Parallel).certificate) << t.name();
  }
}

TEST(OrthogonalityGraph, RepresentativesAndEdges) {
  for (const auto t : oracle::constructible_types(5)) {
    const auto phi = build_root_system(t);
    const auto og = strong_orthogonality_graph(phi);
    ASSERT_EQ(og.vertices.size() * 2, phi.size()) << t.name();
    ASSERT_TRUE(std::is_sorted(og.vertices.begin(), og.vertices.end()));
    const auto set = as_set(phi);
    for (std::size_t i = 0; i < og.vertices.size(); ++i) {
      const auto v = oracle::to_vec(og.vertices[i]);
      const auto first = std::find_if(v.begin(), v.end(), [](int x) { return x != 0; });
      ASSERT_GT(*first, 0);
      for (std::size_t j = 0; j < og.vertices.size(); ++j)
        ASSERT_EQ(og.graph.adjacent(i, j), i != j && oracle::strongly_orthogonal(v, oracle::to_vec(og.vertices[j]), set));
    }
  }
}

TEST(Certificate, CanonicalCertificatesVerify) {
  for (const auto t : oracle::constructible_types(12)) {
    const auto phi = build_root_system(t);
    const auto cert = sork_exact(phi).certificate;
    EXPECT_TRUE(verify_certificate(cert)) << t.name();
    EXPECT_TRUE(verify_certificate(cert, phi)) << t.name();
  }
}

TEST(Certificate, SpanFullRankWhenSorkEqualsRank) {
  for (const auto t : oracle::constructible_types(10)) {
    if (oracle::tabulated_sork(t.family(), t.rank()) != t.rank()) continue;
    const auto cert = sork_exact(build_root_system(t)).certificate;
    EXPECT_EQ(span_rank(cert.roots), static_cast<std::size_t>(t.rank())) << t.name();
  }
}

TEST(Certificate, A1nSubsystemIsClosed) {
  for (const auto t : oracle::constructible_types(10)) {
    const auto phi = build_root_system(t);
    const auto cert = sork_exact(phi).certificate;
    const auto sub = a1n_subsystem(cert, phi);
    EXPECT_EQ(sub.size(), 2 * cert.roots.size());
    EXPECT_TRUE(is_closed_subsystem(sub, phi)) << t.name();
    EXPECT_TRUE(is_negation_closed(sub)) << t.name();
  }
}

TEST(Certificate, RandomSubCertificatesVerify) {
  std::mt19937_64 rng(5);
  const auto types = oracle::constructible_types(12);
  for (int trial = 0; trial < 100; ++trial) {
    const auto t = types[rng() % types.size()];
    const auto phi = build_root_system(t);
    auto cert = sork_exact(phi).certificate;
    std::vector<Root> kept;
    for (const auto& r : cert.roots)
      if (rng() % 2) kept.push_back(r);
    cert.roots = kept;
    EXPECT_TRUE(verify_certificate(cert, phi)) << t.name();
    EXPECT_TRUE(is_closed_subsystem(a1n_subsystem(cert, phi), phi)) << t.name();
  }
}

TEST(Certificate, DetectsNonRoot) {
  const auto phi = build_root_system(RootSystemType::make(Family::D, 4));
  auto cert = sork_exact(phi).certificate;
  cert.roots.back() = Root({2, 2, 2, 2});
  const auto check = verify_certificate(cert);
  EXPECT_FALSE(check);
  EXPECT_EQ(check.defect, CertificateDefect::NotARoot);
  EXPECT_THROW(a1n_subsystem(cert, phi), CertificateError);
}

TEST(Certificate, DetectsNonStronglyOrthogonalPair) {
  const auto phi = build_root_system(RootSystemType::make(Family::B, 2));
  // e1 and e2 are orthogonal, but e1 + e2 is a root
  const OrthCertificate cert{phi.type(), {Root({0, 2}), Root({2, 0})}};
  const auto check = verify_certificate(cert);
  EXPECT_FALSE(check);
  EXPECT_EQ(check.defect, CertificateDefect::NotStronglyOrthogonal);
}

TEST(Certificate, DetectsNonCanonicalOrder) {
  const auto phi = build_root_system(RootSystemType::make(Family::E, 8));
  auto cert = sork_exact(phi).certificate;
  std::swap(cert.roots.front(), cert.roots.back());
  const auto check = verify_certificate(cert);
  EXPECT_FALSE(check);
  EXPECT_EQ(check.defect, CertificateDefect::NotCanonical);
}

TEST(Certificate, DetectsWrongSystem) {
  const auto e8 = build_root_system(RootSystemType::make(Family::E, 8));
  const auto d4 = build_root_system(RootSystemType::make(Family::D, 4));
  const auto cert = sork_exact(d4).certificate;
  EXPECT_FALSE(verify_certificate(cert, e8));
}

TEST(Certificate, DefectNames) {
  EXPECT_FALSE(to_string(CertificateDefect::NotARoot).empty());
  EXPECT_NE(to_string(CertificateDefect::NotARoot), to_string(CertificateDefect::NotCanonical));
}
