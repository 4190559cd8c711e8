// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <json.hpp>

#include "sorklie/groups.hpp"
#include "sorklie/roots.hpp"
#include "sorklie/sork.hpp"
#include "sorklie/tables.hpp"

namespace sorklie {

using Json = nlohmann::ordered_json;

/// {type, ambient_dim, doubled_coords}
Json to_json(const RootSystem& phi);

/// {system_type, n, roots}
Json to_json(const OrthCertificate& cert);

/// Reads a certificate document. Throws CertificateError for a malformed
/// document (including an n that disagrees with the root count) and
/// InvalidType for an unknown system type.
OrthCertificate certificate_from_json(const Json& doc);

/// {name, nu, case, sork_of_complexification, certificate?}
Json to_json(const FactorReport& factor);

/// {nu, exact, factors}
Json to_json(const Evaluation& evaluation);

/// {passed, failures, entries: [{row, claim, recomputed, encoded, pass, flagged}]}
Json to_json(const AuditReport& report);

}  // namespace sorklie
