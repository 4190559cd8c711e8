// SPDX-License-Identifier: Apache-2.0

#include "sorklie/tables.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>

#include "sorklie/errors.hpp"
#include "sorklie/sork.hpp"

namespace sorklie {

namespace {

constexpr FactorLabel label(Family f, int r) { return FactorLabel{f, r}; }

std::string join(const std::vector<FactorLabel>& factors) {
  std::string s;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) s += " x ";
    s += factors[i].name();
  }
  return s;
}

int odd(int x) { return x % 2 != 0 ? 1 : 0; }

int d_column(int r) { return r % 2 == 0 ? r : r - 1; }

// A category III family: the printed side conditions decide the ambient rank
// for given (s, t); the m and n columns are the printed rules.
struct Family3 {
  std::string id;
  Family ambient;
  std::function<std::optional<int>(int, int)> ambient_rank;
  std::function<std::vector<FactorLabel>(int, int)> factors;
  std::function<int(int)> m_column;
  std::function<int(int, int)> n_column;
};

const std::vector<Family3>& families3() {
  static const std::vector<Family3> rows = [] {
    std::vector<Family3> f;
    f.push_back({"A_r: A_{s-1} x A_{t-1}", Family::A,
                 [](int s, int t) -> std::optional<int> {
                   if (2 <= s && s <= t) return s * t - 1;
                   return std::nullopt;
                 },
                 [](int s, int t) { return std::vector{label(Family::A, s - 1), label(Family::A, t - 1)}; },
                 [](int r) { return (r + 1) / 2; }, [](int s, int t) { return s / 2 + t / 2; }});
    f.push_back({"B_r: B_s x B_t", Family::B,
                 [](int s, int t) -> std::optional<int> {
                   if (1 <= s && s <= t) return ((2 * s + 1) * (2 * t + 1) - 1) / 2;
                   return std::nullopt;
                 },
                 [](int s, int t) { return std::vector{label(Family::B, s), label(Family::B, t)}; },
                 [](int r) { return r; }, [](int s, int t) { return s + t; }});
    f.push_back({"C_r: C_s x B_t", Family::C,
                 [](int s, int t) -> std::optional<int> {
                   if (s >= 1 && t >= 1) return s * (2 * t + 1);
                   return std::nullopt;
                 },
                 [](int s, int t) { return std::vector{label(Family::C, s), label(Family::B, t)}; },
                 [](int r) { return r; }, [](int s, int t) { return s + t; }});
    f.push_back({"C_r: C_s x D_t", Family::C,
                 [](int s, int t) -> std::optional<int> {
                   if (s >= 1 && t >= 3) return s * 2 * t;
                   return std::nullopt;
                 },
                 [](int s, int t) { return std::vector{label(Family::C, s), label(Family::D, t)}; },
                 [](int r) { return r; }, [](int s, int t) { return s + t - odd(t); }});
    f.push_back({"C_r: C_1 x D_2", Family::C,
                 [](int s, int t) -> std::optional<int> {
                   if (s == 1 && t == 2) return 4;
                   return std::nullopt;
                 },
                 [](int, int) { return std::vector{label(Family::C, 1), label(Family::D, 2)}; },
                 [](int) { return 4; }, [](int, int) { return 3; }});
    f.push_back({"D_r: C_s x C_t", Family::D,
                 [](int s, int t) -> std::optional<int> {
                   if (1 <= s && s <= t) return 2 * s * t;
                   return std::nullopt;
                 },
                 [](int s, int t) { return std::vector{label(Family::C, s), label(Family::C, t)}; }, d_column,
                 [](int s, int t) { return s + t; }});
    f.push_back({"D_r: B_s x D_t", Family::D,
                 [](int s, int t) -> std::optional<int> {
                   if (1 <= s && s < t && t != 2) return (2 * s + 1) * t;
                   return std::nullopt;
                 },
                 [](int s, int t) { return std::vector{label(Family::B, s), label(Family::D, t)}; }, d_column,
                 [](int s, int t) { return s + t - odd(t); }});
    f.push_back({"D_r: D_s x B_t", Family::D,
                 [](int s, int t) -> std::optional<int> {
                   if (2 < s && s < t + 1) return s * (2 * t + 1);
                   return std::nullopt;
                 },
                 [](int s, int t) { return std::vector{label(Family::D, s), label(Family::B, t)}; }, d_column,
                 [](int s, int t) { return s + t - odd(s); }});
    f.push_back({"D_r: D_s x D_t", Family::D,
                 [](int s, int t) -> std::optional<int> {
                   if (2 < s && s <= t) return 2 * s * t;
                   return std::nullopt;
                 },
                 [](int s, int t) { return std::vector{label(Family::D, s), label(Family::D, t)}; }, d_column,
                 [](int s, int t) { return s + t - odd(s) - odd(t); }});
    return f;
  }();
  return rows;
}

std::string instance_id(const SubalgebraRow& row) {
  return "T2 " + row.family_id + " [" + row.ambient.name() + ": " + join(row.factors) +
         ", s=" + std::to_string(row.params.first) + ", t=" + std::to_string(row.params.second) + "]";
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void append(AuditReport& report, std::string row, std::string claim, long recomputed, long encoded, bool pass,
            bool flagged = false) {
  report.entries.push_back({std::move(row), std::move(claim), recomputed, encoded, pass, flagged});
}

}  // namespace

std::string FactorLabel::name() const { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }

std::vector<RootSystemType> normalize_low_rank(FactorLabel l) {
  if ((l.family == Family::B || l.family == Family::C) && l.rank == 1)
    return {RootSystemType::make(Family::A, 1)};
  if (l.family == Family::D && l.rank == 2)
    return {RootSystemType::make(Family::A, 1), RootSystemType::make(Family::A, 1)};
  if (l.family == Family::D && l.rank == 3) return {RootSystemType::make(Family::A, 3)};
  return {RootSystemType::make(l.family, l.rank)};
}

int sork_of_factors(const std::vector<FactorLabel>& factors) {
  int total = 0;
  for (const auto& f : factors)
    for (const auto& t : normalize_low_rank(f)) total += sork_formula(t);
  return total;
}

const std::vector<ExceptionalRow>& exceptional_s_subalgebras() {
  using F = Family;
  static const std::vector<ExceptionalRow> rows = {
      {RootSystemType::make(F::G, 2), {{label(F::A, 1)}}, 2, 1},
      {RootSystemType::make(F::F, 4), {{label(F::A, 1)}, {label(F::G, 2), label(F::A, 1)}}, 4, 3},
      {RootSystemType::make(F::E, 6),
       {{label(F::A, 1)}, {label(F::G, 2)}, {label(F::C, 4)}, {label(F::G, 2), label(F::A, 2)}, {label(F::F, 4)}},
       4,
       4},
      {RootSystemType::make(F::E, 7),
       {{label(F::A, 1)},
        {label(F::A, 2)},
        {label(F::G, 2), label(F::C, 3)},
        {label(F::F, 4), label(F::A, 1)},
        {label(F::G, 2), label(F::A, 1)},
        {label(F::A, 1), label(F::A, 1)}},
       7,
       5},
      {RootSystemType::make(F::E, 8),
       {{label(F::A, 1)}, {label(F::G, 2), label(F::F, 4)}, {label(F::A, 2), label(F::A, 1)}, {label(F::B, 2)}},
       8,
       6},
  };
  return rows;
}

std::vector<std::string> category3_families() {
  std::vector<std::string> ids;
  for (const auto& f : families3()) ids.push_back(f.id);
  return ids;
}

std::vector<SubalgebraRow> category3_instances(int rank_cap) {
  std::vector<SubalgebraRow> out;
  for (const auto& fam : families3()) {
    for (int s = 1; s <= rank_cap + 1; ++s)
      for (int t = 1; t <= rank_cap + 1; ++t) {
        const auto r = fam.ambient_rank(s, t);
        if (!r || *r > rank_cap) continue;
        out.push_back({label(fam.ambient, *r), fam.factors(s, t), SubalgebraCategory::CategoryIII, {s, t}, fam.id,
                       fam.m_column(*r), fam.n_column(s, t)});
      }
  }
  return out;
}

std::vector<MinDimRow> min_dim_rows(int rank_cap) {
  using F = Family;
  std::vector<MinDimRow> rows;
  for (int r = 1; r <= rank_cap; ++r) rows.push_back({label(F::A, r), r + 1});
  for (int r = 3; r <= rank_cap; ++r) rows.push_back({label(F::B, r), 2 * r + 1});
  for (int r = 2; r <= rank_cap; ++r) rows.push_back({label(F::C, r), 2 * r});
  for (int r = 4; r <= rank_cap; ++r) rows.push_back({label(F::D, r), 2 * r});
  rows.push_back({label(F::E, 6), 27});
  rows.push_back({label(F::E, 7), 56});
  rows.push_back({label(F::E, 8), 248});
  rows.push_back({label(F::F, 4), 26});
  rows.push_back({label(F::G, 2), 7});
  return rows;
}

int ambient_bound(MatrixAlgebra algebra, int k) {
  if (algebra == MatrixAlgebra::SO && k % 4 == 2) return k / 2 - 1;
  return k / 2;
}

FactorLabel matrix_algebra_type(MatrixAlgebra algebra, int k) {
  switch (algebra) {
    case MatrixAlgebra::SL:
      return label(Family::A, k - 1);
    case MatrixAlgebra::SP:
      if (k % 2 != 0) throw InvalidType("sp_k needs even k");
      return label(Family::C, k / 2);
    case MatrixAlgebra::SO:
      return k % 2 != 0 ? label(Family::B, (k - 1) / 2) : label(Family::D, k / 2);
  }
  throw InvalidType("unknown matrix algebra");
}

std::size_t AuditReport::failures() const {
  return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const auto& e) { return !e.pass; }));
}

AuditReport table1_audit() {
  AuditReport report;
  for (const auto& row : exceptional_s_subalgebras()) {
    const std::string id = "T1 " + row.ambient.name();
    const int m = sork_formula(row.ambient);
    int n = 0;
    std::string argmax;
    for (const auto& sub : row.subalgebras) {
      const int value = sork_of_factors(sub);
      if (value > n) {
        n = value;
        argmax = join(sub);
      }
    }
    append(report, id, "m = sork(ambient)", m, row.m, m == row.m);
    append(report, id, "n = max sork over S-subalgebras (attained by " + argmax + ")", n, row.n, n == row.n);
    append(report, id, "m >= n", m, n, m >= n);
  }
  return report;
}

AuditReport table2_audit(int rank_cap) {
  if (rank_cap < 4) throw std::invalid_argument("table2_audit: rank_cap must be >= 4");
  const auto& fams = families3();
  const auto instances = category3_instances(rank_cap);
  std::vector<AuditReport> parts(fams.size());
  const auto count = static_cast<long long>(fams.size());

#pragma omp parallel for schedule(dynamic, 1)
  for (long long i = 0; i < count; ++i) {
    const auto& fam = fams[static_cast<std::size_t>(i)];
    AuditReport& part = parts[static_cast<std::size_t>(i)];
    long found = 0;
    long unexpected_equalities = 0;
    for (const auto& inst : instances) {
      if (inst.family_id != fam.id) continue;
      ++found;
      const std::string id = instance_id(inst);
      const int m = sork_of_factors({inst.ambient});
      const int n = sork_of_factors(inst.factors);
      append(part, id, "m column = sork(ambient)", m, inst.encoded_m, m == inst.encoded_m);
      append(part, id, "n column = sum of sork(factors)", n, inst.encoded_n, n == inst.encoded_n);
      append(part, id, "m >= n", m, n, m >= n);
      const bool equality_allowed = inst.ambient == label(Family::A, 3) || inst.ambient == label(Family::D, 2);
      if (m == n && !equality_allowed) ++unexpected_equalities;
    }
    const std::string fam_id = "T2 " + fam.id;
    append(part, fam_id, "instances with ambient rank <= " + std::to_string(rank_cap), found, found, true, found == 0);
    append(part, fam_id, "m = n only for ambient A3 or D2", unexpected_equalities, 0, unexpected_equalities == 0);
  }

  AuditReport report;
  for (auto& p : parts)
    for (auto& e : p.entries) report.entries.push_back(std::move(e));

  for (int r = 2; r <= rank_cap; ++r) {
    if (!is_prime(2 * r + 1)) continue;
    const auto n = std::count_if(instances.begin(), instances.end(), [&](const SubalgebraRow& row) {
      return row.ambient == label(Family::B, r);
    });
    append(report, "T2 B_r: B_s x B_t [B" + std::to_string(r) + "]",
           "2r+1 = " + std::to_string(2 * r + 1) + " prime: no category III subalgebra", static_cast<long>(n), 0,
           n == 0);
  }
  return report;
}

AuditReport table3_audit(int rank_cap) {
  AuditReport report;
  for (const auto& row : min_dim_rows(rank_cap)) {
    const bool classical = row.type.family <= Family::D;
    // Classical algebras embed properly only above their standard dimension.
    const int k = classical ? row.min_faithful_dim + 1 : row.min_faithful_dim;
    const int n = sork_of_factors({row.type});
    const std::string id = "T3 " + row.type.name() + " (min dim " + std::to_string(row.min_faithful_dim) + ")";
    for (auto algebra : {MatrixAlgebra::SL, MatrixAlgebra::SP, MatrixAlgebra::SO}) {
      if (algebra == MatrixAlgebra::SP && k % 2 != 0) continue;
      const char* name = algebra == MatrixAlgebra::SL ? "sl_" : algebra == MatrixAlgebra::SP ? "sp_" : "so_";
      const std::string where = std::string(name) + std::to_string(k);
      const int m = ambient_bound(algebra, k);
      const int sork_ambient = sork_of_factors({matrix_algebra_type(algebra, k)});
      append(report, id, "m(" + where + ") = sork(" + matrix_algebra_type(algebra, k).name() + ")", sork_ambient, m,
             sork_ambient == m);
      append(report, id, "m(" + where + ") >= n", m, n, m >= n);
    }
  }
  for (int r = 4; r <= rank_cap; ++r) {
    const std::string id = "T3 so_" + std::to_string(2 * r - 1) + " in so_" + std::to_string(2 * r);
    const int m = sork_of_factors({label(Family::D, r)});
    const int n = sork_of_factors({label(Family::B, r - 1)});
    append(report, id, "m = sork(D" + std::to_string(r) + ")", m, d_column(r), m == d_column(r));
    append(report, id, "n = r - 1", n, r - 1, n == r - 1);
    append(report, id, "m >= n", m, n, m >= n);
  }
  return report;
}

}  // namespace sorklie
