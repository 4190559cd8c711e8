// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sorklie/clique.hpp"
#include "sorklie/roots.hpp"

namespace sorklie {

/// An explicit set of pairwise strongly orthogonal roots. Canonical
/// certificates list their roots in ascending lexicographic order of the
/// doubled coordinates.
struct OrthCertificate {
  RootSystemType system_type;
  std::vector<Root> roots;

  friend bool operator==(const OrthCertificate&, const OrthCertificate&) = default;
};

struct SorkResult {
  std::size_t n;
  OrthCertificate certificate;
};

enum class Solver { Serial, Parallel };

/// Strong-orthogonality graph on one representative per antipodal pair
/// {a, -a}. The representative is the member whose first nonzero coordinate
/// is positive; vertices are sorted ascending, so vertex order and coordinate
/// order agree.
struct OrthogonalityGraph {
  std::vector<Root> vertices;
  clique::Graph graph;
};

OrthogonalityGraph strong_orthogonality_graph(const RootSystem& phi);

/// Exact strong orthogonal rank by maximum clique search on the
/// antipodal-reduced graph. The certificate is the lexicographically least
/// maximum set, independent of the solver and thread count.
SorkResult sork_exact(const RootSystem& phi, Solver solver = Solver::Parallel);

/// Closed-form value: A_r -> ceil(r/2), B_r, C_r -> r, D_r -> r (r even) or
/// r-1 (r odd), E6 -> 4, E7 -> 7, E8 -> 8, F4 -> 4, G2 -> 2.
int sork_formula(RootSystemType type);

enum class CertificateDefect { NotARoot, NotStronglyOrthogonal, NotCanonical };

struct CertificateCheck {
  bool valid = true;
  std::optional<CertificateDefect> defect;
  std::string detail;

  explicit operator bool() const noexcept { return valid; }
};

std::string to_string(CertificateDefect d);

/// Checks membership, then pairwise strong orthogonality, then ascending
/// order, and reports the first failing condition.
CertificateCheck verify_certificate(const OrthCertificate& cert);
CertificateCheck verify_certificate(const OrthCertificate& cert, const RootSystem& phi);

/// The certificate's roots together with their negatives, sorted. This set is
/// a closed subsystem of type (A1)^n. Throws CertificateError if the
/// certificate does not verify against phi.
std::vector<Root> a1n_subsystem(const OrthCertificate& cert, const RootSystem& phi);

}  // namespace sorklie
