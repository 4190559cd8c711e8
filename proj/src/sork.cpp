// SPDX-License-Identifier: Apache-2.0

#include "sorklie/sork.hpp"

#include <algorithm>

#include "sorklie/errors.hpp"

namespace sorklie {

namespace {

bool is_representative(const Root& r) {
  for (int x : r.doubled())
    if (x != 0) return x > 0;
  return false;
}

}  // namespace

OrthogonalityGraph strong_orthogonality_graph(const RootSystem& phi) {
  std::vector<Root> reps;
  for (const auto& r : phi.roots())
    if (is_representative(r)) reps.push_back(r);
  // phi.roots() is sorted, so reps is too.
  const std::size_t n = reps.size();
  std::vector<clique::Bitset> rows(n, clique::Bitset(n));
  const auto count = static_cast<long long>(n);

#pragma omp parallel for schedule(static)
  for (long long i = 0; i < count; ++i) {
    const auto u = static_cast<std::size_t>(i);
    for (std::size_t v = 0; v < n; ++v)
      if (u != v && is_strongly_orthogonal(reps[u], reps[v], phi)) rows[u].set(v);
  }
  return {std::move(reps), clique::Graph(std::move(rows))};
}

SorkResult sork_exact(const RootSystem& phi, Solver solver) {
  const auto sog = strong_orthogonality_graph(phi);
  const auto best = solver == Solver::Serial ? clique::max_clique_serial(sog.graph)
                                             : clique::max_clique_parallel(sog.graph);
  OrthCertificate cert{phi.type(), {}};
  for (auto v : best) cert.roots.push_back(sog.vertices[v]);
  return {best.size(), std::move(cert)};
}

int sork_formula(RootSystemType type) {
  const int r = type.rank();
  switch (type.family()) {
    case Family::A:
      return (r + 1) / 2;
    case Family::B:
    case Family::C:
      return r;
    case Family::D:
      return r % 2 == 0 ? r : r - 1;
    case Family::E:
      return r == 6 ? 4 : r;
    case Family::F:
      return 4;
    case Family::G:
      return 2;
  }
  throw InvalidType("unknown root system family");
}

std::string to_string(CertificateDefect d) {
  switch (d) {
    case CertificateDefect::NotARoot:
      return "NotARoot";
    case CertificateDefect::NotStronglyOrthogonal:
      return "NotStronglyOrthogonal";
    case CertificateDefect::NotCanonical:
      return "NotCanonical";
  }
  return "Unknown";
}

CertificateCheck verify_certificate(const OrthCertificate& cert) {
  return verify_certificate(cert, build_root_system(cert.system_type));
}

CertificateCheck verify_certificate(const OrthCertificate& cert, const RootSystem& phi) {
  auto fail = [](CertificateDefect d, std::string detail) {
    return CertificateCheck{false, d, std::move(detail)};
  };
  if (cert.system_type != phi.type())
    return fail(CertificateDefect::NotARoot, "certificate is for " + cert.system_type.name() + ", not " +
                                                 phi.type().name());
  const auto& roots = cert.roots;
  for (std::size_t i = 0; i < roots.size(); ++i)
    if (!phi.contains(roots[i])) return fail(CertificateDefect::NotARoot, "entry " + std::to_string(i));
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      if (!is_strongly_orthogonal(roots[i], roots[j], phi))
        return fail(CertificateDefect::NotStronglyOrthogonal,
                    "entries " + std::to_string(i) + " and " + std::to_string(j));
  for (std::size_t i = 1; i < roots.size(); ++i)
    if (!(roots[i - 1] < roots[i]))
      return fail(CertificateDefect::NotCanonical, "entries " + std::to_string(i - 1) + " and " +
                                                       std::to_string(i) + " out of order");
  return {};
}

std::vector<Root> a1n_subsystem(const OrthCertificate& cert, const RootSystem& phi) {
  const auto check = verify_certificate(cert, phi);
  if (!check) throw CertificateError("invalid certificate: " + to_string(*check.defect) + " (" + check.detail + ")");
  std::vector<Root> out;
  out.reserve(2 * cert.roots.size());
  for (const auto& r : cert.roots) {
    out.push_back(r);
    out.push_back(-r);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace sorklie
