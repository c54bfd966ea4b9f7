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

#include "qcsa/scheme.h"

#include <algorithm>
#include <exception>
#include <numeric>
#include <string>

#include "qcsa/errors.h"
#include "qcsa/random.h"

namespace qcsa {
namespace {

using std::size_t;
using std::to_string;

FieldVector Slice(const FieldVector& v, size_t first, size_t count) {
  return FieldVector(v.begin() + first, v.begin() + first + count);
}

void Append(FieldVector& out, const FieldVector& tail) {
  out.insert(out.end(), tail.begin(), tail.end());
}

}  // namespace

FieldVector SchemeInstance::Stacked() const {
  FieldVector x = desired;
  Append(x, interference);
  return x;
}

SchemeInstance MakeInstance(const CsaParams& params, int index,
                            FieldVector desired, FieldVector interference) {
  if (desired.size() != params.desired() ||
      interference.size() != params.interference()) {
    throw DimensionMismatch("instance needs " + to_string(params.desired()) +
                            " desired and " +
                            to_string(params.interference()) +
                            " interference symbols");
  }
  SchemeInstance inst{index, std::move(desired), std::move(interference), {}};
  inst.answers = MatVec(CsaMatrix(params), inst.Stacked());
  return inst;
}

std::pair<SchemeInstance, SchemeInstance> MakeInstances(
    const CsaParams& params, uint64_t seed) {
  Rng rng(seed);
  auto draw = [&](size_t count) {
    FieldVector v;
    for (size_t i = 0; i < count; ++i) v.push_back(rng.Uniform(params.field()));
    return v;
  };
  FieldVector d1 = draw(params.desired());
  FieldVector n1 = draw(params.interference());
  FieldVector d2 = draw(params.desired());
  FieldVector n2 = draw(params.interference());
  return {MakeInstance(params, 1, std::move(d1), std::move(n1)),
          MakeInstance(params, 2, std::move(d2), std::move(n2))};
}

FieldVector ClassicalDecode(std::span<const FieldElement> answers,
                            const CsaParams& params) {
  if (answers.size() != params.servers()) {
    throw DimensionMismatch("expected " + to_string(params.servers()) +
                            " answers, got " + to_string(answers.size()));
  }
  return MatVec(Inverse(CsaMatrix(params)), answers);
}

std::pair<FieldElement, FieldElement> ServerInputs(
    size_t n, std::span<const FieldElement> first,
    std::span<const FieldElement> second, std::span<const FieldElement> u,
    std::span<const FieldElement> v) {
  return {u[n] * first[n], v[n] * second[n]};
}

FieldVector ServerScale(std::span<const FieldElement> first,
                        std::span<const FieldElement> second,
                        std::span<const FieldElement> u,
                        std::span<const FieldElement> v) {
  const size_t n = first.size();
  if (second.size() != n || u.size() != n || v.size() != n) {
    throw DimensionMismatch("server scaling needs four vectors of length " +
                            to_string(n));
  }
  if (n == 0) return {};
  FieldVector x(2 * n, first.front().field().Zero());
  for (size_t i = 0; i < n; ++i) {
    auto [a, b] = ServerInputs(i, first, second, u, v);
    x[i] = a;
    x[n + i] = b;
  }
  return x;
}

FieldVector ExpectedOutput(const SchemeInstance& first,
                           const SchemeInstance& second) {
  const size_t l = first.desired.size();
  const size_t n = l + first.interference.size();
  const size_t tail1 = FloorHalf(n) - l;
  const size_t tail2 = CeilHalf(n) - l;
  FieldVector y = first.desired;
  Append(y, Slice(first.interference, first.interference.size() - tail1, tail1));
  Append(y, second.desired);
  Append(y,
         Slice(second.interference, second.interference.size() - tail2, tail2));
  return y;
}

Fraction Fraction::Make(int64_t num, int64_t den) {
  if (den <= 0 || num < 0) throw InvalidParameters("bad fraction");
  int64_t g = std::gcd(num, den);
  return Fraction{num / g, den / g};
}

std::string Fraction::ToString() const {
  if (den == 1) return to_string(num);
  return to_string(num) + "/" + to_string(den);
}

Fraction Min(const Fraction& a, const Fraction& b) {
  return a.num * b.den <= b.num * a.den ? a : b;
}

ServerCount ReduceServers(size_t servers, size_t desired) {
  if (desired < 1 || desired >= servers) {
    throw InvalidParameters("need 1 <= L < N, got N = " + to_string(servers) +
                            ", L = " + to_string(desired));
  }
  if (2 * desired <= servers) return {servers, desired};
  return {2 * servers - 2 * desired, servers - desired};
}

RateReport MakeRateReport(size_t servers, size_t desired) {
  const ServerCount reduced = ReduceServers(servers, desired);
  const auto n = static_cast<int64_t>(servers);
  const auto l = static_cast<int64_t>(desired);
  const auto n2 = static_cast<int64_t>(reduced.servers);
  const auto l2 = static_cast<int64_t>(reduced.desired);
  RateReport r{};
  r.servers = servers;
  r.desired = desired;
  r.reduced_servers = reduced.servers;
  r.reduced_desired = reduced.desired;
  r.classical_rate = Fraction::Make(l, n);
  r.quantum_rate = Fraction::Make(2 * l2, n2);
  r.dits_per_symbol = Fraction::Make(n, l);
  r.qudits_per_symbol = Fraction::Make(n2, 2 * l2);
  r.classical_dits = 2 * servers;
  r.classical_desired_symbols = 2 * desired;
  r.quantum_qudits = reduced.servers;
  r.quantum_desired_symbols = 2 * reduced.desired;
  return r;
}

RoundTrip RunRoundTrip(const QcsaConstruction& c, SchemeInstance first,
                       SchemeInstance second, uint64_t seed) {
  const CsaParams& csa = c.params.csa();
  const size_t n = csa.servers();
  const size_t l = csa.desired();
  RoundTrip rt;
  rt.seed = seed;
  rt.x = ServerScale(first.answers, second.answers, c.params.beta(), c.v);
  rt.y = Transmit(c.box, rt.x);
  rt.expected = ExpectedOutput(first, second);
  rt.recovered_first = Slice(rt.y, 0, l);
  rt.recovered_second = Slice(rt.y, FloorHalf(n), l);
  rt.classical_first = Slice(ClassicalDecode(first.answers, csa), 0, l);
  rt.classical_second = Slice(ClassicalDecode(second.answers, csa), 0, l);
  rt.pass = rt.y == rt.expected && rt.recovered_first == rt.classical_first &&
            rt.recovered_second == rt.classical_second &&
            rt.recovered_first == first.desired &&
            rt.recovered_second == second.desired;
  rt.first = std::move(first);
  rt.second = std::move(second);
  return rt;
}

RoundTrip RunRoundTrip(const QcsaConstruction& c, uint64_t seed) {
  auto [first, second] = MakeInstances(c.params.csa(), seed);
  return RunRoundTrip(c, std::move(first), std::move(second), seed);
}

RoundTrip QcsaRoundTrip(const QcsaParams& params, uint64_t seed) {
  return RunRoundTrip(ConstructQcsa(params), seed);
}

namespace serial {

std::vector<RoundTrip> RunTrials(const QcsaConstruction& c, uint64_t seed,
                                 size_t trials) {
  std::vector<RoundTrip> out;
  out.reserve(trials);
  for (size_t t = 0; t < trials; ++t) {
    out.push_back(RunRoundTrip(c, DeriveSeed(seed, t)));
  }
  return out;
}

}  // namespace serial

namespace parallel {

std::vector<RoundTrip> RunTrials(const QcsaConstruction& c, uint64_t seed,
                                 size_t trials) {
  std::vector<RoundTrip> out(trials);
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 16)
  for (size_t t = 0; t < trials; ++t) {
    try {
      out[t] = RunRoundTrip(c, DeriveSeed(seed, t));
    } catch (...) {
#pragma omp critical(qcsa_trial_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace parallel
}  // namespace qcsa
