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

#include "qcsa/io.h"

#include <string>
#include <vector>

#include "qcsa/errors.h"

namespace qcsa::io {
namespace {

using std::size_t;

const json& Require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw FormatError(std::string("missing key '") + key + "'");
  }
  return j.at(key);
}

uint64_t RequireUint(const json& j, const char* key) {
  const json& v = Require(j, key);
  if (!v.is_number_unsigned()) {
    throw FormatError(std::string("'") + key +
                      "' must be a nonnegative integer");
  }
  return v.get<uint64_t>();
}

PrimeField FieldFromJson(const json& j) {
  uint64_t p = RequireUint(j, "p");
  if (p > PrimeField::kMaxModulus || !IsPrime(p)) {
    throw FormatError("p = " + std::to_string(p) + " is not a supported prime");
  }
  return PrimeField(static_cast<uint32_t>(p));
}

FieldVector VectorFromJson(const PrimeField& field, const json& arr,
                           const char* what) {
  if (!arr.is_array()) throw FormatError(std::string(what) + " is not an array");
  FieldVector out;
  for (const auto& e : arr) {
    if (!e.is_number_unsigned() || e.get<uint64_t>() >= field.modulus()) {
      throw FormatError(std::string(what) +
                        " holds a value that is not a canonical residue");
    }
    out.emplace_back(field, static_cast<uint32_t>(e.get<uint64_t>()));
  }
  return out;
}

void CheckSameField(const PrimeField& expected, const FieldMatrix& m,
                    const char* what) {
  if (m.field() != expected) {
    throw FormatError(std::string(what) + " uses a different modulus");
  }
}

}  // namespace

json ToJson(const FieldMatrix& m) {
  return json{{"p", m.field().modulus()},
              {"rows", m.rows()},
              {"cols", m.cols()},
              {"data", std::vector<uint32_t>(m.data().begin(), m.data().end())}};
}

json ToJson(const Permutation& pi) {
  return json{{"n", pi.size()}, {"image", pi.OneBased()}};
}

json ToJson(const FieldVector& v) { return json(Values(v)); }

json ToJson(const QcsaParams& params) {
  return json{{"p", params.field().modulus()},
              {"N", params.servers()},
              {"L", params.desired()},
              {"alpha", ToJson(params.alpha())},
              {"beta", ToJson(params.beta())},
              {"f", ToJson(params.poles())}};
}

json ToJson(const NSumBox& box) {
  return json{{"params", box.params ? ToJson(*box.params) : json(nullptr)},
              {"M", ToJson(box.m)},
              {"G", ToJson(box.g)},
              {"H", ToJson(box.h)},
              {"pi", box.pi ? ToJson(*box.pi) : json(nullptr)}};
}

json ToJson(const QcsaConstruction& c) {
  return json{{"params", ToJson(c.params)},
              {"v", ToJson(c.v)},
              {"Qu", ToJson(c.qu)},
              {"Qv", ToJson(c.qv)},
              {"G", ToJson(c.box.g)},
              {"H", ToJson(c.box.h)},
              {"pi", c.box.pi ? ToJson(*c.box.pi) : json(nullptr)},
              {"M_Q", ToJson(c.box.m)}};
}

json ToJson(const RateReport& r) {
  return json{{"N", r.servers},
              {"L", r.desired},
              {"N'", r.reduced_servers},
              {"L'", r.reduced_desired},
              {"R_C", r.classical_rate.ToString()},
              {"R_Q", r.quantum_rate.ToString()},
              {"R_C_decimal", r.classical_rate.ToDouble()},
              {"R_Q_decimal", r.quantum_rate.ToDouble()},
              {"dits_per_symbol", r.dits_per_symbol.ToString()},
              {"qudits_per_symbol", r.qudits_per_symbol.ToString()}};
}

FieldMatrix MatrixFromJson(const json& j) {
  PrimeField field = FieldFromJson(j);
  const size_t rows = RequireUint(j, "rows");
  const size_t cols = RequireUint(j, "cols");
  FieldVector data = VectorFromJson(field, Require(j, "data"), "data");
  if (data.size() != rows * cols) {
    throw FormatError("matrix data has " + std::to_string(data.size()) +
                      " entries, expected " + std::to_string(rows * cols));
  }
  FieldMatrix m(field, rows, cols);
  for (size_t i = 0; i < data.size(); ++i) m.set(i / cols, i % cols, data[i]);
  return m;
}

Permutation PermutationFromJson(const json& j) {
  const size_t n = RequireUint(j, "n");
  const json& image = Require(j, "image");
  if (!image.is_array() || image.size() != n) {
    throw FormatError("permutation image must be an array of length n");
  }
  std::vector<size_t> one_based;
  for (const auto& e : image) {
    if (!e.is_number_unsigned()) throw FormatError("bad permutation entry");
    one_based.push_back(e.get<size_t>());
  }
  try {
    return Permutation::FromOneBased(one_based);
  } catch (const InvalidParameters& e) {
    throw FormatError(e.what());
  }
}

QcsaParams ParamsFromJson(const json& j) {
  PrimeField field = FieldFromJson(j);
  const size_t n = RequireUint(j, "N");
  const size_t l = RequireUint(j, "L");
  try {
    return QcsaParams::Create(field, n, l,
                              VectorFromJson(field, Require(j, "alpha"), "alpha"),
                              VectorFromJson(field, Require(j, "beta"), "beta"),
                              VectorFromJson(field, Require(j, "f"), "f"));
  } catch (const InvalidParameters& e) {
    throw FormatError(std::string("invalid params: ") + e.what());
  }
}

NSumBox BoxFromJson(const json& j) {
  FieldMatrix m = MatrixFromJson(Require(j, j.contains("M") ? "M" : "M_Q"));
  FieldMatrix g = MatrixFromJson(Require(j, "G"));
  FieldMatrix h = MatrixFromJson(Require(j, "H"));
  CheckSameField(m.field(), g, "G");
  CheckSameField(m.field(), h, "H");
  const size_t n = m.rows();
  if (n == 0 || m.cols() != 2 * n || g.rows() != 2 * n || g.cols() != n ||
      h.rows() != 2 * n || h.cols() != n) {
    throw FormatError("box matrices must be M: N x 2N, G and H: 2N x N");
  }
  std::optional<QcsaParams> params;
  if (j.contains("params") && !j.at("params").is_null()) {
    params = ParamsFromJson(j.at("params"));
    CheckSameField(params->field(), m, "M");
  }
  std::optional<Permutation> pi;
  if (j.contains("pi") && !j.at("pi").is_null()) {
    pi = PermutationFromJson(j.at("pi"));
  }
  return NSumBox{m.field(), m.rows(), std::move(m), std::move(g),
                 std::move(h), std::move(pi), std::move(params)};
}

QcsaConstruction ConstructionFromJson(const json& j) {
  QcsaParams params = ParamsFromJson(Require(j, "params"));
  FieldVector v = VectorFromJson(params.field(), Require(j, "v"), "v");
  FieldMatrix qu = MatrixFromJson(Require(j, "Qu"));
  FieldMatrix qv = MatrixFromJson(Require(j, "Qv"));
  CheckSameField(params.field(), qu, "Qu");
  CheckSameField(params.field(), qv, "Qv");
  NSumBox box = BoxFromJson(j);
  return QcsaConstruction{std::move(params), std::move(v), std::move(qu),
                          std::move(qv), std::move(box)};
}

json TrialToJson(const RoundTrip& rt, size_t trial, const QcsaParams& params,
                 const RateReport& costs) {
  return json{{"trial", trial},
              {"seed", rt.seed},
              {"params", ToJson(params)},
              {"y", ToJson(rt.y)},
              {"expected", ToJson(rt.expected)},
              {"pass", rt.pass},
              {"costs",
               {{"qudits", costs.quantum_qudits},
                {"desired_symbols", costs.quantum_desired_symbols},
                {"classical_dits", costs.classical_dits},
                {"classical_desired_symbols",
                 costs.classical_desired_symbols}}}};
}

std::string Dump(const json& j) { return j.dump(); }

}  // namespace qcsa::io
