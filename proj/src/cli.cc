/*
 * Copyright 2026 The QCSA Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "qcsa/cli.h"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qcsa/codes.h"
#include "qcsa/errors.h"
#include "qcsa/io.h"
#include "qcsa/nsum_box.h"
#include "qcsa/scheme.h"

namespace qcsa::cli {
namespace {

using std::size_t;

struct RunConfig {
  uint32_t p = 0;
  size_t servers = 0;
  size_t desired = 0;
  std::vector<int64_t> alpha, beta, u, f;
  uint64_t seed = kDefaultSeed;
  size_t trials = 1000;
  std::string out;
  std::string format = "json";
  std::string path;
  std::string server_range = "2:64";
  std::string desired_range;
};

void AddParamOptions(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--p", cfg.p, "Prime field size q")->required();
  cmd->add_option("--N", cfg.servers, "Number of servers")->required();
  cmd->add_option("--L", cfg.desired, "Desired symbols per instance")
      ->required();
  cmd->add_option("--alpha", cfg.alpha, "Evaluation points (N values)")
      ->delimiter(',');
  cmd->add_option("--beta", cfg.beta, "Row multipliers u of Qu (N values)")
      ->delimiter(',');
  cmd->add_option("--u", cfg.u, "Alias of --beta")->delimiter(',');
  cmd->add_option("--f", cfg.f, "Poles (L values)")->delimiter(',');
}

void AddOutputOptions(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--out", cfg.out, "Output file (default: stdout or $" +
                                        std::string(kOutDirEnv) + ")");
  cmd->add_option("--format", cfg.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
}

FieldVector ToElements(const PrimeField& field,
                       const std::vector<int64_t>& values, const char* what) {
  FieldVector out;
  for (int64_t v : values) {
    if (v < 0 || v >= static_cast<int64_t>(field.modulus())) {
      throw InvalidParameters(std::string(what) + " value " +
                              std::to_string(v) + " outside [0, p)");
    }
    out.push_back(field.Element(v));
  }
  return out;
}

CsaParams BuildCsa(const RunConfig& cfg) {
  PrimeField field(cfg.p);
  CsaParams defaults = CsaParams::Default(field, cfg.servers, cfg.desired);
  FieldVector alpha = cfg.alpha.empty() ? defaults.alpha()
                                        : ToElements(field, cfg.alpha, "alpha");
  FieldVector poles =
      cfg.f.empty() ? defaults.poles() : ToElements(field, cfg.f, "f");
  return CsaParams::Create(field, cfg.servers, cfg.desired, std::move(alpha),
                           std::move(poles));
}

FieldVector Multipliers(const RunConfig& cfg, const PrimeField& field) {
  if (!cfg.beta.empty() && !cfg.u.empty() && cfg.beta != cfg.u) {
    throw InvalidParameters("--beta and --u disagree");
  }
  const auto& given = cfg.u.empty() ? cfg.beta : cfg.u;
  if (given.empty()) return FieldVector(cfg.servers, field.One());
  return ToElements(field, given, "u");
}

// Writes to --out, else $QCSA_OUT_DIR/<default_name>, else `out`.
void Emit(const RunConfig& cfg, const std::string& default_name,
          const std::string& content, std::ostream& out) {
  std::filesystem::path target;
  if (!cfg.out.empty()) {
    target = cfg.out;
  } else if (const char* dir = std::getenv(kOutDirEnv); dir && *dir) {
    target = std::filesystem::path(dir) / default_name;
  } else {
    out << content;
    return;
  }
  if (target.has_parent_path()) {
    std::filesystem::create_directories(target.parent_path());
  }
  std::ofstream file(target, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + target.string());
  file << content;
}

std::string Decimal(const Fraction& f) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", f.ToDouble());
  return buf;
}

std::pair<size_t, size_t> ParseRange(const std::string& text, size_t lo,
                                     size_t hi) {
  try {
    auto colon = text.find(':');
    if (colon == std::string::npos) {
      size_t v = std::stoul(text);
      return {v, v};
    }
    std::string a = text.substr(0, colon), b = text.substr(colon + 1);
    return {a.empty() ? lo : std::stoul(a), b.empty() ? hi : std::stoul(b)};
  } catch (const std::logic_error&) {
    throw InvalidParameters("bad range '" + text + "', expected a:b");
  }
}

int Construct(const RunConfig& cfg, std::ostream& out) {
  if (cfg.format != "json") {
    throw InvalidParameters("construct only writes json");
  }
  CsaParams csa = BuildCsa(cfg);
  QcsaParams params = QcsaParams::Create(csa, Multipliers(cfg, csa.field()));
  QcsaConstruction c = ConstructQcsa(params);
  Emit(cfg, "construct.json", io::Dump(io::ToJson(c)) + "\n", out);
  return kOk;
}

int Verify(const RunConfig& cfg, std::ostream& out) {
  std::ifstream file(cfg.path);
  if (!file) throw FormatError("cannot open " + cfg.path);
  io::json doc;
  try {
    doc = io::json::parse(file);
  } catch (const io::json::exception& e) {
    throw FormatError(e.what());
  }
  VerifyReport report;
  if (doc.is_object() && doc.contains("Qu")) {
    report = VerifyConstruction(io::ConstructionFromJson(doc));
  } else {
    report = VerifyBox(io::BoxFromJson(doc));
  }
  size_t passed = 0;
  for (const auto& c : report.checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) out << "  (" << c.detail << ")";
    out << "\n";
    passed += c.pass;
  }
  out << "verify: " << passed << "/" << report.checks.size()
      << " checks passed\n";
  return report.AllPass() ? kOk : kFailure;
}

int Simulate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  CsaParams csa = BuildCsa(cfg);
  FieldVector u = Multipliers(cfg, csa.field());
  if (u.size() != csa.servers()) {
    throw InvalidParameters("expected " + std::to_string(csa.servers()) +
                            " multipliers");
  }
  CsaParams reduced = csa.Reduced();
  u.resize(reduced.servers(), csa.field().One());
  QcsaParams params = QcsaParams::Create(reduced, u);
  QcsaConstruction c = ConstructQcsa(params);
  RateReport costs = MakeRateReport(csa.servers(), csa.desired());

  std::vector<RoundTrip> trials = parallel::RunTrials(c, cfg.seed, cfg.trials);

  std::ostringstream stream;
  if (cfg.format == "csv") {
    stream << "trial,seed,pass,y,expected\n";
  }
  size_t passed = 0;
  for (size_t t = 0; t < trials.size(); ++t) {
    const RoundTrip& rt = trials[t];
    passed += rt.pass;
    if (cfg.format == "csv") {
      auto join = [](const FieldVector& v) {
        std::string s;
        for (size_t i = 0; i < v.size(); ++i) {
          s += (i ? " " : "") + std::to_string(v[i].value());
        }
        return s;
      };
      stream << t << "," << rt.seed << "," << (rt.pass ? 1 : 0) << ","
             << join(rt.y) << "," << join(rt.expected) << "\n";
    } else {
      stream << io::Dump(io::TrialToJson(rt, t, params, costs)) << "\n";
    }
  }
  Emit(cfg, "simulate." + cfg.format, stream.str(), out);

  err << "simulate: " << passed << "/" << trials.size()
      << " trials passed (p=" << cfg.p << ", N=" << csa.servers()
      << ", L=" << csa.desired() << ", N'=" << costs.reduced_servers
      << ", L'=" << costs.reduced_desired << ", seed=" << cfg.seed
      << "); per trial " << costs.quantum_qudits << " qudits for "
      << costs.quantum_desired_symbols << " desired symbols, classical "
      << costs.classical_dits << " dits for "
      << costs.classical_desired_symbols << "\n";
  return passed == trials.size() ? kOk : kFailure;
}

int Rates(const RunConfig& cfg, std::ostream& out) {
  auto [n_lo, n_hi] = ParseRange(cfg.server_range, 2, 64);
  size_t l_lo = 1, l_hi = SIZE_MAX;
  if (!cfg.desired_range.empty()) {
    std::tie(l_lo, l_hi) = ParseRange(cfg.desired_range, 1, SIZE_MAX);
  }
  if (n_lo < 2 || n_hi < n_lo) throw InvalidParameters("empty N range");
  std::vector<RateReport> rows;
  for (size_t n = n_lo; n <= n_hi; ++n) {
    for (size_t l = std::max<size_t>(l_lo, 1); l < n && l <= l_hi; ++l) {
      rows.push_back(MakeRateReport(n, l));
    }
  }
  std::ostringstream s;
  if (cfg.format == "csv") {
    s << "N,L,N',L',R_C,R_Q,dits_per_symbol,qudits_per_symbol,"
         "R_C_decimal,R_Q_decimal\n";
    for (const auto& r : rows) {
      s << r.servers << "," << r.desired << "," << r.reduced_servers << ","
        << r.reduced_desired << "," << r.classical_rate.ToString() << ","
        << r.quantum_rate.ToString() << "," << r.dits_per_symbol.ToString()
        << "," << r.qudits_per_symbol.ToString() << ","
        << Decimal(r.classical_rate) << "," << Decimal(r.quantum_rate) << "\n";
    }
  } else {
    io::json table = io::json::array();
    for (const auto& r : rows) table.push_back(io::ToJson(r));
    s << io::Dump(table) << "\n";
  }
  Emit(cfg, "rates." + cfg.format, s.str(), out);
  return kOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Quantum cross-subspace alignment toolkit"};
  app.require_subcommand(1);

  auto* construct =
      app.add_subcommand("construct", "Build Qu, Qv, G, H, pi and M_Q");
  AddParamOptions(construct, cfg);
  AddOutputOptions(construct, cfg);

  auto* verify =
      app.add_subcommand("verify", "Re-check every invariant of a bundle");
  verify->add_option("path", cfg.path, "Construction or box JSON")
      ->required();

  auto* simulate =
      app.add_subcommand("simulate", "Run seeded over-the-air decode trials");
  AddParamOptions(simulate, cfg);
  AddOutputOptions(simulate, cfg);
  simulate->add_option("--seed", cfg.seed, "Base seed");
  simulate->add_option("--trials", cfg.trials, "Number of trials");

  auto* rates = app.add_subcommand("rates", "Classical vs quantum rate table");
  rates->add_option("--N", cfg.server_range, "Server range a:b");
  rates->add_option("--L", cfg.desired_range, "Desired-symbol range a:b");
  AddOutputOptions(rates, cfg);

  std::vector<std::string> argv_storage;
  argv_storage.push_back("qcsa");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadParams;
  }

  try {
    if (*construct) return Construct(cfg, out);
    if (*verify) return Verify(cfg, out);
    if (*simulate) return Simulate(cfg, out, err);
    if (*rates) return Rates(cfg, out);
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
    return kBadFile;
  } catch (const InvalidParameters& e) {
    err << "invalid parameters: " << e.what() << "\n";
    return kBadParams;
  } catch (const FieldMismatch& e) {
    err << "invalid parameters: " << e.what() << "\n";
    return kBadParams;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kFailure;
  }
  return kFailure;
}

}  // namespace qcsa::cli
