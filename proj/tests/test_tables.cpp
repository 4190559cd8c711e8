// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <stdexcept>

#include "oracles.hpp"
#include "sorklie/errors.hpp"
#include "sorklie/sork.hpp"
#include "sorklie/tables.hpp"

using namespace sorklie;

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

TEST(Audits, AllTablesPass) {
  for (const auto& report : {table1_audit(), table2_audit(24), table3_audit(24)}) {
    EXPECT_FALSE(report.entries.empty());
    for (const auto& e : report.entries) EXPECT_TRUE(e.pass) << e.row << ": " << e.claim;
    EXPECT_TRUE(report.passed());
  }
}

TEST(Audits, RankCapIsValidated) {
  EXPECT_THROW(table2_audit(3), std::invalid_argument);
  EXPECT_NO_THROW(table2_audit(4));
}

TEST(LowRank, Normalization) {
  const auto a1 = RootSystemType::make(Family::A, 1);
  EXPECT_EQ(normalize_low_rank({Family::B, 1}), std::vector{a1});
  EXPECT_EQ(normalize_low_rank({Family::C, 1}), std::vector{a1});
  EXPECT_EQ(normalize_low_rank({Family::D, 2}), (std::vector{a1, a1}));
  EXPECT_EQ(normalize_low_rank({Family::D, 3}), std::vector{RootSystemType::make(Family::A, 3)});
  EXPECT_EQ(normalize_low_rank({Family::E, 8}), std::vector{RootSystemType::make(Family::E, 8)});
  EXPECT_THROW(normalize_low_rank({Family::D, 1}), InvalidType);
}

TEST(LowRank, SorkOfFactors) {
  EXPECT_EQ(sork_of_factors({{Family::D, 2}}), 2);
  EXPECT_EQ(sork_of_factors({{Family::D, 3}}), 2);
  EXPECT_EQ(sork_of_factors({{Family::B, 1}, {Family::G, 2}}), 3);
  EXPECT_EQ(sork_of_factors({{Family::A, 5}, {Family::E, 7}}), 3 + 7);
}

TEST(Table1, PrintedColumns) {
  // (type, m, n) as printed
  const std::map<std::string, std::pair<int, int>> printed{
      {"G2", {2, 1}}, {"F4", {4, 3}}, {"E6", {4, 4}}, {"E7", {7, 5}}, {"E8", {8, 6}}};
  const auto& rows = exceptional_s_subalgebras();
  ASSERT_EQ(rows.size(), printed.size());
  for (const auto& row : rows) {
    const auto it = printed.find(row.ambient.name());
    ASSERT_NE(it, printed.end()) << row.ambient.name();
    EXPECT_EQ(row.m, it->second.first) << row.ambient.name();
    EXPECT_EQ(row.n, it->second.second) << row.ambient.name();
    EXPECT_EQ(row.m, oracle::tabulated_sork(row.ambient.family(), row.ambient.rank()));
    int largest = 0;
    for (const auto& sub : row.subalgebras) largest = std::max(largest, sork_of_factors(sub));
    EXPECT_EQ(largest, row.n) << row.ambient.name();
  }
}

TEST(Table2, C1xD2AppearsAtRankFour) {
  const auto rows = category3_instances(24);
  const auto it = std::find_if(rows.begin(), rows.end(), [](const SubalgebraRow& r) {
    return r.factors == std::vector<FactorLabel>{{Family::C, 1}, {Family::D, 2}};
  });
  ASSERT_NE(it, rows.end());
  EXPECT_EQ(it->ambient, (FactorLabel{Family::C, 4}));
  EXPECT_EQ(it->encoded_m, 4);
  EXPECT_EQ(it->encoded_n, 3);
  EXPECT_EQ(sork_of_factors(it->factors), 3);
}

TEST(Table2, InstancesRespectRankCap) {
  for (const auto& row : category3_instances(12)) {
    EXPECT_LE(row.ambient.rank, 12);
    EXPECT_EQ(row.category, SubalgebraCategory::CategoryIII);
    EXPECT_EQ(sork_of_factors(row.factors), row.encoded_n) << row.family_id;
    EXPECT_EQ(sork_of_factors({row.ambient}), row.encoded_m) << row.family_id;
  }
}

TEST(Table2, BsBtNeedsCompositeDimension) {
  for (const auto& row : category3_instances(24)) {
    if (row.ambient.family != Family::B || row.factors.size() != 2 || row.factors[0].family != Family::B) continue;
    const int dim = 2 * row.ambient.rank + 1;
    EXPECT_FALSE(is_prime(dim)) << row.ambient.name();
    const auto [s, t] = row.params;
    EXPECT_EQ((2 * s + 1) * (2 * t + 1), dim);
  }
}

TEST(Table2, FamiliesAreListed) {
  const auto ids = category3_families();
  EXPECT_FALSE(ids.empty());
  for (const auto& row : category3_instances(24))
    EXPECT_NE(std::find(ids.begin(), ids.end(), row.family_id), ids.end()) << row.family_id;
}

TEST(Table3, AmbientBound) {
  EXPECT_EQ(ambient_bound(MatrixAlgebra::SO, 6), 2);
  EXPECT_EQ(ambient_bound(MatrixAlgebra::SO, 10), 4);
  EXPECT_EQ(ambient_bound(MatrixAlgebra::SO, 8), 4);
  EXPECT_EQ(ambient_bound(MatrixAlgebra::SO, 7), 3);
  EXPECT_EQ(ambient_bound(MatrixAlgebra::SL, 7), 3);
  EXPECT_EQ(ambient_bound(MatrixAlgebra::SP, 8), 4);
  for (int k = 3; k <= 40; ++k) {
    EXPECT_EQ(ambient_bound(MatrixAlgebra::SL, k), sork_of_factors({matrix_algebra_type(MatrixAlgebra::SL, k)})) << k;
    EXPECT_EQ(ambient_bound(MatrixAlgebra::SO, k), sork_of_factors({matrix_algebra_type(MatrixAlgebra::SO, k)})) << k;
    if (k % 2 == 0)
      EXPECT_EQ(ambient_bound(MatrixAlgebra::SP, k), sork_of_factors({matrix_algebra_type(MatrixAlgebra::SP, k)})) << k;
  }
  EXPECT_THROW(matrix_algebra_type(MatrixAlgebra::SP, 5), InvalidType);
}

TEST(Table3, MinimalDimensions) {
  const std::map<std::string, int> exceptional{{"E6", 27}, {"E7", 56}, {"E8", 248}, {"F4", 26}, {"G2", 7}};
  int seen = 0;
  for (const auto& row : min_dim_rows(12)) {
    const auto& t = row.type;
    const auto it = exceptional.find(t.name());
    if (it != exceptional.end()) {
      EXPECT_EQ(row.min_faithful_dim, it->second) << t.name();
      ++seen;
      continue;
    }
    switch (t.family) {
      case Family::A:
        EXPECT_EQ(row.min_faithful_dim, t.rank + 1) << t.name();
        break;
      case Family::B:
        EXPECT_EQ(row.min_faithful_dim, 2 * t.rank + 1) << t.name();
        break;
      case Family::C:
      case Family::D:
        EXPECT_EQ(row.min_faithful_dim, 2 * t.rank) << t.name();
        break;
      default:
        ADD_FAILURE() << t.name();
    }
  }
  EXPECT_EQ(seen, 5);
}
