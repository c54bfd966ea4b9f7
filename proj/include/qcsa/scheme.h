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

#ifndef QCSA_SCHEME_H_
#define QCSA_SCHEME_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qcsa/codes.h"
#include "qcsa/nsum_box.h"

namespace qcsa {

// One instance of a CSA scheme: answers A = CSA(alpha, f) [delta; nu].
struct SchemeInstance {
  int index = 1;
  FieldVector desired;       // delta, length L
  FieldVector interference;  // nu, length N - L
  FieldVector answers;       // A, length N (entry n from server n)

  FieldVector Stacked() const;
};

SchemeInstance MakeInstance(const CsaParams& params, int index,
                            FieldVector desired, FieldVector interference);

// Two instances with symbols drawn uniformly from GF(q) by Rng(seed), in the
// order delta(1), nu(1), delta(2), nu(2).
std::pair<SchemeInstance, SchemeInstance> MakeInstances(
    const CsaParams& params, uint64_t seed);

// [delta; nu] = CSA^{-1} A.
FieldVector ClassicalDecode(std::span<const FieldElement> answers,
                            const CsaParams& params);

// Inputs server n (0-based) applies to the box: (u_n A_n(1), v_n A_n(2)).
std::pair<FieldElement, FieldElement> ServerInputs(
    std::size_t n, std::span<const FieldElement> first,
    std::span<const FieldElement> second, std::span<const FieldElement> u,
    std::span<const FieldElement> v);

// x = [Diag(u) A(1); Diag(v) A(2)].
FieldVector ServerScale(std::span<const FieldElement> first,
                        std::span<const FieldElement> second,
                        std::span<const FieldElement> u,
                        std::span<const FieldElement> v);

// The box output the receiver should see: delta(1), the last floor(N/2) - L
// entries of nu(1), delta(2), the last ceil(N/2) - L entries of nu(2).
FieldVector ExpectedOutput(const SchemeInstance& first,
                           const SchemeInstance& second);

// Exact nonnegative rational, kept in lowest terms.
struct Fraction {
  int64_t num = 0;
  int64_t den = 1;

  static Fraction Make(int64_t num, int64_t den);
  double ToDouble() const { return static_cast<double>(num) / den; }
  // "3/4", or "1" when the denominator is one.
  std::string ToString() const;

  friend bool operator==(const Fraction&, const Fraction&) = default;
};

Fraction Min(const Fraction& a, const Fraction& b);

struct ServerCount {
  std::size_t servers;
  std::size_t desired;

  friend bool operator==(const ServerCount&, const ServerCount&) = default;
};

// For 2L > N: N' = 2N - 2L, L' = N - L (interference dimension preserved).
// Otherwise unchanged. Throws InvalidParameters unless 1 <= L < N.
ServerCount ReduceServers(std::size_t servers, std::size_t desired);

struct RateReport {
  std::size_t servers;          // N
  std::size_t desired;          // L
  std::size_t reduced_servers;  // N'
  std::size_t reduced_desired;  // L'
  Fraction classical_rate;      // L / N
  Fraction quantum_rate;        // min(1, 2L / N)
  Fraction dits_per_symbol;     // N / L
  Fraction qudits_per_symbol;   // N' / (2 L')
  // Download counters for two CSA instances.
  std::size_t classical_dits;             // 2N
  std::size_t classical_desired_symbols;  // 2L
  std::size_t quantum_qudits;             // N'
  std::size_t quantum_desired_symbols;    // 2L'

  bool reduced() const { return reduced_servers != servers; }
};

RateReport MakeRateReport(std::size_t servers, std::size_t desired);

struct RoundTrip {
  uint64_t seed = 0;
  SchemeInstance first;
  SchemeInstance second;
  FieldVector x;         // box input, length 2N
  FieldVector y;         // box output, length N
  FieldVector expected;  // ExpectedOutput(first, second)
  // Desired symbols read off y, and the classical decoder's answer.
  FieldVector recovered_first;
  FieldVector recovered_second;
  FieldVector classical_first;
  FieldVector classical_second;
  bool pass = false;
};

// Server scaling, one box use and readout for the given instances.
RoundTrip RunRoundTrip(const QcsaConstruction& c, SchemeInstance first,
                       SchemeInstance second, uint64_t seed = 0);
// Same with instances drawn from MakeInstances(seed).
RoundTrip RunRoundTrip(const QcsaConstruction& c, uint64_t seed);
// Builds the construction from params first.
RoundTrip QcsaRoundTrip(const QcsaParams& params, uint64_t seed);

// Trial t uses seed DeriveSeed(seed, t). Results are in trial order.
namespace serial {
std::vector<RoundTrip> RunTrials(const QcsaConstruction& c, uint64_t seed,
                                 std::size_t trials);
}  // namespace serial
namespace parallel {
std::vector<RoundTrip> RunTrials(const QcsaConstruction& c, uint64_t seed,
                                 std::size_t trials);
}  // namespace parallel

}  // namespace qcsa

#endif  // QCSA_SCHEME_H_
