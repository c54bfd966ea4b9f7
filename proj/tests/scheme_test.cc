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

#include <gtest/gtest.h>

#include "qcsa/errors.h"
#include "qcsa/kernels.h"

namespace qcsa {
namespace {

FieldVector Elems(const PrimeField& f, std::initializer_list<int64_t> vs) {
  FieldVector out;
  for (int64_t v : vs) out.push_back(f(v));
  return out;
}

QcsaParams SmallParams() {
  PrimeField f(5);
  return QcsaParams::Create(f, 2, 1, Elems(f, {1, 2}), Elems(f, {1, 1}),
                            Elems(f, {3}));
}

TEST(SchemeInstanceTest, SmallCase) {
  PrimeField f(5);
  QcsaParams q = SmallParams();
  SchemeInstance a = MakeInstance(q.csa(), 1, Elems(f, {2}), Elems(f, {3}));
  SchemeInstance b = MakeInstance(q.csa(), 2, Elems(f, {4}), Elems(f, {0}));
  EXPECT_EQ(a.answers, Elems(f, {4, 0}));
  EXPECT_EQ(b.answers, Elems(f, {2, 4}));
  EXPECT_EQ(ClassicalDecode(a.answers, q.csa()), Elems(f, {2, 3}));
  EXPECT_EQ(a.Stacked(), Elems(f, {2, 3}));
  EXPECT_THROW(MakeInstance(q.csa(), 1, Elems(f, {1, 2}), Elems(f, {3})),
               DimensionMismatch);
}

TEST(RoundTripTest, SmallCase) {
  PrimeField f(5);
  QcsaParams q = SmallParams();
  QcsaConstruction c = ConstructQcsa(q);
  RoundTrip rt =
      RunRoundTrip(c, MakeInstance(q.csa(), 1, Elems(f, {2}), Elems(f, {3})),
                   MakeInstance(q.csa(), 2, Elems(f, {4}), Elems(f, {0})));
  EXPECT_EQ(rt.x, Elems(f, {4, 0, 3, 4}));
  EXPECT_EQ(rt.y, Elems(f, {2, 4}));
  EXPECT_EQ(rt.expected, Elems(f, {2, 4}));
  EXPECT_EQ(rt.recovered_first, Elems(f, {2}));
  EXPECT_EQ(rt.recovered_second, Elems(f, {4}));
  EXPECT_TRUE(rt.pass);
}

TEST(RoundTripTest, ZeroSymbols) {
  PrimeField f(5);
  QcsaParams q = SmallParams();
  QcsaConstruction c = ConstructQcsa(q);
  RoundTrip zero =
      RunRoundTrip(c, MakeInstance(q.csa(), 1, Elems(f, {0}), Elems(f, {0})),
                   MakeInstance(q.csa(), 2, Elems(f, {0}), Elems(f, {0})));
  EXPECT_EQ(zero.y, Elems(f, {0, 0}));
  // Interference alone never reaches the output.
  RoundTrip noise =
      RunRoundTrip(c, MakeInstance(q.csa(), 1, Elems(f, {0}), Elems(f, {1})),
                   MakeInstance(q.csa(), 2, Elems(f, {0}), Elems(f, {2})));
  EXPECT_EQ(noise.y, Elems(f, {0, 0}));
}

TEST(RoundTripTest, ManySeedsRecoverDesiredSymbols) {
  Rng rng(61);
  for (uint32_t p : {17u, 101u}) {
    PrimeField f(p);
    for (std::size_t n = 2; n <= 10; ++n) {
      for (std::size_t l = 1; 2 * l <= n; ++l) {
        QcsaConstruction c = ConstructQcsa(QcsaParams::Random(f, n, l, rng));
        for (uint64_t seed = 0; seed < 20; ++seed) {
          RoundTrip rt = RunRoundTrip(c, seed);
          ASSERT_TRUE(rt.pass) << "p=" << p << " N=" << n << " L=" << l;
          ASSERT_EQ(rt.y, rt.expected);
          EXPECT_EQ(rt.recovered_first, rt.first.desired);
          EXPECT_EQ(rt.recovered_second, rt.second.desired);
          EXPECT_EQ(rt.classical_first, rt.first.desired);
          EXPECT_EQ(rt.classical_second, rt.second.desired);
          EXPECT_EQ(ClassicalDecode(rt.first.answers, c.params.csa()),
                    rt.first.Stacked());
        }
      }
    }
  }
}

TEST(RoundTripTest, ServerInputsAreLocal) {
  Rng rng(62);
  PrimeField f(31);
  QcsaConstruction c = ConstructQcsa(QcsaParams::Random(f, 7, 3, rng));
  RoundTrip rt = RunRoundTrip(c, 9);
  for (std::size_t n = 0; n < 7; ++n) {
    // Server n only sees its own two answers.
    FieldVector first(7, f.Zero()), second(7, f.Zero());
    first[n] = rt.first.answers[n];
    second[n] = rt.second.answers[n];
    auto [a, b] = ServerInputs(n, first, second, c.params.beta(), c.v);
    EXPECT_EQ(a, rt.x[n]);
    EXPECT_EQ(b, rt.x[7 + n]);
  }
}

TEST(RoundTripTest, InstancesAreReplayable) {
  PrimeField f(13);
  CsaParams p = CsaParams::Default(f, 6, 2);
  auto [a1, b1] = MakeInstances(p, 5);
  auto [a2, b2] = MakeInstances(p, 5);
  EXPECT_EQ(a1.answers, a2.answers);
  EXPECT_EQ(b1.answers, b2.answers);
  EXPECT_EQ(a1.index, 1);
  EXPECT_EQ(b1.index, 2);
}

TEST(FractionTest, Basics) {
  EXPECT_EQ(Fraction::Make(2, 4), (Fraction{1, 2}));
  EXPECT_EQ(Fraction::Make(4, 4).ToString(), "1");
  EXPECT_EQ(Fraction::Make(6, 8).ToString(), "3/4");
  EXPECT_EQ(Min(Fraction::Make(1, 1), Fraction::Make(3, 2)), (Fraction{1, 1}));
  EXPECT_DOUBLE_EQ(Fraction::Make(1, 4).ToDouble(), 0.25);
}

TEST(RatesTest, Examples) {
  RateReport a = MakeRateReport(4, 1);
  EXPECT_EQ(a.classical_rate, Fraction::Make(1, 4));
  EXPECT_EQ(a.quantum_rate, Fraction::Make(1, 2));
  EXPECT_FALSE(a.reduced());

  RateReport b = MakeRateReport(4, 2);
  EXPECT_EQ(b.classical_rate, Fraction::Make(1, 2));
  EXPECT_EQ(b.quantum_rate, Fraction::Make(1, 1));
  EXPECT_EQ(b.quantum_qudits, 4u);
  EXPECT_EQ(b.quantum_desired_symbols, 4u);

  RateReport c = MakeRateReport(4, 3);
  EXPECT_EQ(c.classical_rate, Fraction::Make(3, 4));
  EXPECT_EQ(c.quantum_rate, Fraction::Make(1, 1));
  EXPECT_EQ(c.reduced_servers, 2u);
  EXPECT_EQ(c.reduced_desired, 1u);
  EXPECT_EQ(c.quantum_qudits, 2u);
  EXPECT_EQ(c.quantum_desired_symbols, 2u);
  EXPECT_TRUE(c.reduced());

  RateReport d = MakeRateReport(10, 7);
  EXPECT_EQ(d.reduced_servers, 6u);
  EXPECT_EQ(d.reduced_desired, 3u);
  EXPECT_EQ(d.classical_rate, Fraction::Make(7, 10));
  EXPECT_EQ(d.dits_per_symbol, Fraction::Make(10, 7));
  EXPECT_EQ(d.qudits_per_symbol, Fraction::Make(1, 1));

  EXPECT_THROW(MakeRateReport(4, 4), InvalidParameters);
  EXPECT_THROW(MakeRateReport(4, 0), InvalidParameters);
}

TEST(RatesTest, QuantumRateIdentity) {
  for (std::size_t n = 2; n <= 64; ++n) {
    for (std::size_t l = 1; l < n; ++l) {
      RateReport r = MakeRateReport(n, l);
      Fraction expected = Min(Fraction::Make(1, 1),
                              Fraction::Make(2 * static_cast<int64_t>(l), n));
      ASSERT_EQ(r.quantum_rate, expected) << n << "," << l;
      ASSERT_EQ(Fraction::Make(2 * static_cast<int64_t>(r.reduced_desired),
                               r.reduced_servers),
                expected);
      ASSERT_EQ(r.reduced_servers - r.reduced_desired, n - l);
      ASSERT_LE(2 * r.reduced_desired, r.reduced_servers);
      ASSERT_EQ(r.classical_rate, Fraction::Make(l, n));
      // The quantum scheme never downloads more per desired symbol.
      ASSERT_LE(r.qudits_per_symbol.ToDouble(), r.dits_per_symbol.ToDouble());
    }
  }
}

TEST(TrialsTest, SerialAndParallelAgree) {
  Rng rng(63);
  PrimeField f(101);
  QcsaConstruction c = ConstructQcsa(QcsaParams::Random(f, 6, 2, rng));
  int saved = kernels::MaxThreads();
  kernels::SetNumThreads(4);
  auto a = serial::RunTrials(c, 77, 200);
  auto b = parallel::RunTrials(c, 77, 200);
  kernels::SetNumThreads(saved);
  ASSERT_EQ(a.size(), 200u);
  ASSERT_EQ(b.size(), 200u);
  for (std::size_t t = 0; t < a.size(); ++t) {
    EXPECT_EQ(a[t].seed, DeriveSeed(77, t));
    EXPECT_EQ(a[t].seed, b[t].seed);
    EXPECT_EQ(a[t].y, b[t].y);
    EXPECT_TRUE(b[t].pass);
  }
  EXPECT_TRUE(parallel::RunTrials(c, 1, 0).empty());
}

}  // namespace
}  // namespace qcsa
