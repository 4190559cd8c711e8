// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "sorklie/roots.hpp"

namespace sorklie {

/// A simple-factor label before low-rank isomorphisms are applied; admits
/// labels such as B1, C1 or D2 that RootSystemType would reject or rename.
struct FactorLabel {
  Family family;
  int rank;

  std::string name() const;
  friend bool operator==(const FactorLabel&, const FactorLabel&) = default;
};

/// Applies B1 = C1 = A1, D2 = A1 x A1 and D3 = A3, returning the irreducible
/// components. Throws InvalidType for labels with no meaning (e.g. D1).
std::vector<RootSystemType> normalize_low_rank(FactorLabel label);

/// Sum of sork_formula over the normalized components of each factor.
int sork_of_factors(const std::vector<FactorLabel>& factors);

enum class SubalgebraCategory { ExceptionalS, CategoryIII, CategoryII };

/// Maximal proper S-subalgebras of an exceptional algebra, with the m and n
/// columns as printed.
struct ExceptionalRow {
  RootSystemType ambient;
  std::vector<std::vector<FactorLabel>> subalgebras;
  int m;
  int n;
};

const std::vector<ExceptionalRow>& exceptional_s_subalgebras();

/// One instance of a category III family at concrete parameters.
struct SubalgebraRow {
  FactorLabel ambient;
  std::vector<FactorLabel> factors;
  SubalgebraCategory category;
  std::pair<int, int> params;
  std::string family_id;
  int encoded_m;
  int encoded_n;
};

/// Every category III instance with ambient rank <= rank_cap, in family
/// order then (s, t) order.
std::vector<SubalgebraRow> category3_instances(int rank_cap);

/// Identifiers of the category III families, in audit order.
std::vector<std::string> category3_families();

struct MinDimRow {
  FactorLabel type;
  int min_faithful_dim;
};

/// Minimal faithful representation dimensions. Classical families are listed
/// for every rank from their restriction (A r>=1, B r>=3, C r>=2, D r>=4) up
/// to rank_cap.
std::vector<MinDimRow> min_dim_rows(int rank_cap);

/// m for the ambient sl_k, sp_k or so_k: floor(k/2), except k/2 - 1 for so_k
/// with k = 2 mod 4.
enum class MatrixAlgebra { SL, SP, SO };
int ambient_bound(MatrixAlgebra algebra, int k);
/// The root system label of sl_k, sp_k or so_k (k >= 2; sp needs k even).
FactorLabel matrix_algebra_type(MatrixAlgebra algebra, int k);

struct AuditEntry {
  std::string row;
  std::string claim;
  long recomputed;
  long encoded;
  bool pass;
  // Informational entries (e.g. a parameter family with no instance below
  // the rank cap) are flagged; they never fail.
  bool flagged = false;
};

struct AuditReport {
  std::vector<AuditEntry> entries;

  std::size_t failures() const;
  bool passed() const { return failures() == 0; }
};

AuditReport table1_audit();
/// Throws std::invalid_argument if rank_cap < 4.
AuditReport table2_audit(int rank_cap = 24);
AuditReport table3_audit(int rank_cap = 24);

}  // namespace sorklie
