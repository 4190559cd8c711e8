// SPDX-License-Identifier: Apache-2.0

#include "sorklie/serialize.hpp"

#include "sorklie/errors.hpp"

namespace sorklie {

namespace {

Json coords(const Root& r) { return Json(std::vector<int>(r.doubled().begin(), r.doubled().end())); }

}  // namespace

Json to_json(const RootSystem& phi) {
  Json rows = Json::array();
  for (const auto& r : phi.roots()) rows.push_back(coords(r));
  return {{"type", phi.type().name()}, {"ambient_dim", phi.ambient_dim()}, {"doubled_coords", std::move(rows)}};
}

Json to_json(const OrthCertificate& cert) {
  Json rows = Json::array();
  for (const auto& r : cert.roots) rows.push_back(coords(r));
  return {{"system_type", cert.system_type.name()}, {"n", cert.roots.size()}, {"roots", std::move(rows)}};
}

OrthCertificate certificate_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("system_type") || !doc.contains("roots"))
    throw CertificateError("certificate needs system_type and roots");
  const auto& type = doc.at("system_type");
  const auto& roots = doc.at("roots");
  if (!type.is_string() || !roots.is_array()) throw CertificateError("certificate fields have the wrong types");
  OrthCertificate cert{RootSystemType::parse(type.get<std::string>()), {}};
  for (const auto& row : roots) {
    if (!row.is_array()) throw CertificateError("each root must be an array of integers");
    std::vector<int> v;
    for (const auto& x : row) {
      if (!x.is_number_integer()) throw CertificateError("each root must be an array of integers");
      v.push_back(x.get<int>());
    }
    cert.roots.emplace_back(std::move(v));
  }
  if (doc.contains("n")) {
    const auto& n = doc.at("n");
    if (!n.is_number_unsigned() || n.get<std::size_t>() != cert.roots.size())
      throw CertificateError("n does not match the number of roots");
  }
  return cert;
}

Json to_json(const FactorReport& factor) {
  Json j{{"name", factor.name},
         {"nu", factor.result.nu},
         {"case", to_string(factor.result.nu_case)},
         {"sork_of_complexification", factor.result.sork_of_complexification}};
  if (factor.result.certificate) j["certificate"] = to_json(*factor.result.certificate);
  return j;
}

Json to_json(const Evaluation& evaluation) {
  Json factors = Json::array();
  for (const auto& f : evaluation.factors) factors.push_back(to_json(f));
  return {{"nu", evaluation.value}, {"exact", evaluation.exact}, {"factors", std::move(factors)}};
}

Json to_json(const AuditReport& report) {
  Json entries = Json::array();
  for (const auto& e : report.entries)
    entries.push_back({{"row", e.row},
                       {"claim", e.claim},
                       {"recomputed", e.recomputed},
                       {"encoded", e.encoded},
                       {"pass", e.pass},
                       {"flagged", e.flagged}});
  return {{"passed", report.passed()}, {"failures", report.failures()}, {"entries", std::move(entries)}};
}

}  // namespace sorklie
