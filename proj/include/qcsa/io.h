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

#ifndef QCSA_IO_H_
#define QCSA_IO_H_

// JSON exchange formats. Field elements are plain integers in [0, p); the
// modulus travels in the enclosing object as "p".
//
//   matrix        {p, rows, cols, data: [row-major]}
//   permutation   {n, image: [1-based one-line notation]}
//   params        {p, N, L, alpha, beta, f}
//   box           {params | null, M, G, H, pi | null}
//   construction  {params, v, Qu, Qv, G, H, pi, M_Q}
//
// Readers throw FormatError on anything malformed, including parameter
// bundles that violate their invariants.

#include <string>

#include "json.hpp"
#include "qcsa/codes.h"
#include "qcsa/matrix.h"
#include "qcsa/nsum_box.h"
#include "qcsa/scheme.h"

namespace qcsa::io {

using nlohmann::json;

json ToJson(const FieldMatrix& m);
json ToJson(const Permutation& pi);
json ToJson(const QcsaParams& params);
json ToJson(const NSumBox& box);
json ToJson(const QcsaConstruction& c);
json ToJson(const FieldVector& v);
json ToJson(const RateReport& r);

FieldMatrix MatrixFromJson(const json& j);
Permutation PermutationFromJson(const json& j);
QcsaParams ParamsFromJson(const json& j);
NSumBox BoxFromJson(const json& j);
// Takes the stored matrices verbatim; nothing is recomputed.
QcsaConstruction ConstructionFromJson(const json& j);

// One simulate report line.
json TrialToJson(const RoundTrip& rt, std::size_t trial,
                 const QcsaParams& params, const RateReport& costs);

// Fixed formatting used by every writer so output is byte-stable.
std::string Dump(const json& j);

}  // namespace qcsa::io

#endif  // QCSA_IO_H_
