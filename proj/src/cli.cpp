// SPDX-License-Identifier: Apache-2.0

#include "sorklie/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "sorklie/clique.hpp"
#include "sorklie/errors.hpp"
#include "sorklie/groups.hpp"
#include "sorklie/matrixcheck.hpp"
#include "sorklie/serialize.hpp"
#include "sorklie/sork.hpp"
#include "sorklie/tables.hpp"

namespace sorklie::cli {

namespace {

struct Options {
  int threads = 0;
  bool json = false;

  std::string expr;
  bool certificate = false;

  std::string type;
  bool dump_roots = false;
  std::string solver = "parallel";

  std::string path;

  int rank_cap = 24;

  std::size_t max_size = 4;
  std::size_t samples = 200;
  std::uint64_t seed = 1;
};

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

int cmd_nu(const Options& o, std::ostream& out) {
  const auto e = parse_group_expr(o.expr);
  const auto ev = evaluate(*e, o.certificate);
  if (o.json) {
    print_json(out, to_json(ev));
    return kOk;
  }
  if (ev.exact)
    out << "nu = " << ev.value << '\n';
  else
    out << "nu ≤ " << ev.value << " (upper bound)\n";
  if (o.certificate) {
    Json factors = Json::array();
    for (const auto& f : ev.factors) factors.push_back(to_json(f));
    print_json(out, factors);
  }
  return kOk;
}

int cmd_sork(const Options& o, std::ostream& out) {
  const auto phi = build_root_system(RootSystemType::parse(o.type));
  const auto result = sork_exact(phi, o.solver == "serial" ? Solver::Serial : Solver::Parallel);
  if (o.json) {
    Json j{{"type", phi.type().name()}, {"n", result.n}, {"formula", sork_formula(phi.type())}};
    if (o.certificate) j["certificate"] = to_json(result.certificate);
    if (o.dump_roots) j["root_system"] = to_json(phi);
    print_json(out, j);
    return kOk;
  }
  if (o.certificate) {
    print_json(out, to_json(result.certificate));
  } else {
    out << "sork(" << phi.type().name() << ") = " << result.n << '\n';
  }
  if (o.dump_roots) print_json(out, to_json(phi));
  return kOk;
}

int cmd_certify(const Options& o, std::ostream& out, std::istream& in) {
  Json doc;
  try {
    if (o.path == "-") {
      doc = Json::parse(in);
    } else {
      std::ifstream file(o.path);
      if (!file) throw Error("cannot open " + o.path);
      doc = Json::parse(file);
    }
  } catch (const Json::parse_error& e) {
    throw CertificateError(std::string("malformed JSON: ") + e.what());
  }
  if (doc.is_object() && doc.contains("certificate") && !doc.contains("roots")) doc = doc.at("certificate");
  const auto cert = certificate_from_json(doc);
  const auto check = verify_certificate(cert);
  if (o.json) {
    Json j{{"valid", check.valid}, {"system_type", cert.system_type.name()}, {"n", cert.roots.size()}};
    if (check.defect) j["defect"] = to_string(*check.defect);
    if (!check.detail.empty()) j["detail"] = check.detail;
    print_json(out, j);
  } else if (check) {
    out << "valid: " << cert.roots.size() << " strongly orthogonal roots in " << cert.system_type.name() << '\n';
  } else {
    out << "invalid: " << to_string(*check.defect) << ": " << check.detail << '\n';
  }
  return check ? kOk : kCheckFailed;
}

int cmd_verify_tables(const Options& o, std::ostream& out) {
  const std::vector<std::pair<std::string, AuditReport>> reports{
      {"table1", table1_audit()}, {"table2", table2_audit(o.rank_cap)}, {"table3", table3_audit(o.rank_cap)}};
  bool passed = true;
  for (const auto& [name, r] : reports) passed = passed && r.passed();
  if (o.json) {
    Json j{{"rank_cap", o.rank_cap}, {"passed", passed}};
    for (const auto& [name, r] : reports) j[name] = to_json(r);
    print_json(out, j);
  } else {
    for (const auto& [name, r] : reports) {
      out << name << ": " << r.entries.size() << " checks, " << r.failures() << " failures\n";
      for (const auto& e : r.entries) {
        if (!e.pass)
          out << "  FAIL " << e.row << ": " << e.claim << " (recomputed " << e.recomputed << ", encoded " << e.encoded
              << ")\n";
        else if (e.flagged)
          out << "  note " << e.row << ": " << e.claim << " (" << e.recomputed << ")\n";
      }
    }
    out << (passed ? "all tables pass" : "table audit FAILED") << '\n';
  }
  return passed ? kOk : kCheckFailed;
}

int cmd_verify_kronecker(const Options& o, std::ostream& out) {
  const auto r = verify_kronecker(o.max_size, o.samples, o.seed);
  if (o.json) {
    print_json(out, Json{{"quadruples", r.quadruples},
                         {"bracket_failures", r.bracket_failures},
                         {"symbolic", r.symbolic},
                         {"intersection", r.intersection},
                         {"passed", r.passed()}});
  } else {
    out << "bracket identity: " << r.quadruples - r.bracket_failures << "/" << r.quadruples << " random quadruples\n"
        << "symbolic 2x2: " << (r.symbolic ? "ok" : "FAILED") << '\n'
        << "trivial intersection: " << (r.intersection ? "ok" : "FAILED") << '\n';
  }
  return r.passed() ? kOk : kCheckFailed;
}

int cmd_dump_roots(const Options& o, std::ostream& out) {
  print_json(out, to_json(build_root_system(RootSystemType::parse(o.type))));
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  Options o;
  CLI::App app{"Free subgroup rank and strong orthogonal rank of Lie groups", "sorklie"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();
  app.add_option("--threads", o.threads, "OpenMP threads (0 = runtime default)")->check(CLI::NonNegativeNumber);

  auto* nu = app.add_subcommand("nu", "free subgroup rank of a group expression");
  nu->add_option("expr", o.expr, "group expression, e.g. \"so(7,1) x Z\"")->required();
  nu->add_flag("--certificate", o.certificate, "print per-factor strongly orthogonal sets");
  nu->add_flag("--json", o.json, "JSON output");

  auto* sork = app.add_subcommand("sork", "strong orthogonal rank of a root system");
  sork->add_option("type", o.type, "root system type, e.g. E8")->required();
  sork->add_flag("--certificate", o.certificate, "emit the certificate as JSON");
  sork->add_flag("--dump-roots", o.dump_roots, "also emit the root system as JSON");
  sork->add_option("--solver", o.solver, "clique solver")->check(CLI::IsMember({"serial", "parallel"}));
  sork->add_flag("--json", o.json, "JSON output");

  auto* certify = app.add_subcommand("certify", "verify a certificate JSON document");
  certify->add_option("file", o.path, "certificate file, or - for stdin")->required();
  certify->add_flag("--json", o.json, "JSON output");

  auto* tables = app.add_subcommand("verify-tables", "audit the subalgebra tables");
  tables->add_option("--rank-cap", o.rank_cap, "largest ambient rank for parameter families")
      ->check(CLI::Range(4, 200));
  tables->add_flag("--json", o.json, "JSON output");

  auto* kron = app.add_subcommand("verify-kronecker", "check the Kronecker sum bracket identity");
  kron->add_option("--max-size", o.max_size, "largest block size s, t")->check(CLI::Range(2, 8));
  kron->add_option("--samples", o.samples, "random quadruples")->check(CLI::Range(1, 1000000));
  kron->add_option("--seed", o.seed, "random seed");
  kron->add_flag("--json", o.json, "JSON output");

  auto* dump = app.add_subcommand("dump-roots", "print a root system as JSON");
  dump->add_option("type", o.type, "root system type, e.g. F4")->required();
  dump->add_flag("--json", o.json, "JSON output (the default)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "sorklie: " << e.what() << "\n\n";
    const auto subs = app.get_subcommands();
    err << (subs.empty() ? app.help() : subs.front()->help());
    return kUsageError;
  }

  if (o.threads > 0) clique::set_num_threads(o.threads);

  try {
    if (nu->parsed()) return cmd_nu(o, out);
    if (sork->parsed()) return cmd_sork(o, out);
    if (certify->parsed()) return cmd_certify(o, out, in);
    if (tables->parsed()) return cmd_verify_tables(o, out);
    if (kron->parsed()) return cmd_verify_kronecker(o, out);
    return cmd_dump_roots(o, out);
  } catch (const std::exception& e) {
    err << "sorklie: error: " << e.what() << '\n';
    return kComputationError;
  }
}

}  // namespace sorklie::cli
