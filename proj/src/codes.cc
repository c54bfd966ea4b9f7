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

#include "qcsa/codes.h"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "qcsa/errors.h"

namespace qcsa {
namespace {

using std::size_t;
using std::to_string;

void CheckInField(const PrimeField& field, std::span<const FieldElement> xs,
                  const char* what) {
  for (const auto& x : xs) {
    if (x.field() != field) {
      throw FieldMismatch(std::string(what) + " element outside GF(" +
                          to_string(field.modulus()) + ")");
    }
  }
}

void CheckNonzero(std::span<const FieldElement> xs, const char* what) {
  for (size_t i = 0; i < xs.size(); ++i) {
    if (xs[i].IsZero()) {
      throw InvalidParameters(std::string(what) + "_" + to_string(i + 1) +
                              " is zero");
    }
  }
}

}  // namespace

void ValidateGrs(const GrsSpec& spec) {
  const size_t n = spec.alpha.size();
  if (spec.u.size() != n) {
    throw InvalidParameters("GRS: " + to_string(n) + " points but " +
                            to_string(spec.u.size()) + " multipliers");
  }
  if (spec.k > n) {
    throw InvalidParameters("GRS: k = " + to_string(spec.k) + " > n = " +
                            to_string(n));
  }
  if (n > spec.field.modulus()) {
    throw InvalidParameters("GRS: n exceeds field size");
  }
  CheckInField(spec.field, spec.alpha, "alpha");
  CheckInField(spec.field, spec.u, "u");
  CheckNonzero(spec.u, "u");
  std::unordered_set<uint32_t> seen;
  for (const auto& a : spec.alpha) {
    if (!seen.insert(a.value()).second) {
      throw InvalidParameters("GRS: repeated evaluation point " +
                              to_string(a.value()));
    }
  }
}

FieldMatrix GrsGenerator(const GrsSpec& spec) {
  ValidateGrs(spec);
  const size_t n = spec.alpha.size();
  FieldMatrix g(spec.field, n, spec.k);
  for (size_t i = 0; i < n; ++i) {
    FieldElement entry = spec.u[i];
    for (size_t j = 0; j < spec.k; ++j) {
      g.set(i, j, entry);
      entry *= spec.alpha[i];
    }
  }
  return g;
}

FieldVector DualMultipliers(std::span<const FieldElement> alpha,
                            std::span<const FieldElement> u) {
  if (alpha.empty()) throw InvalidParameters("no evaluation points");
  // Validation only; k is irrelevant here.
  ValidateGrs(GrsSpec{alpha.front().field(), 0,
                      FieldVector(alpha.begin(), alpha.end()),
                      FieldVector(u.begin(), u.end())});
  FieldVector v;
  v.reserve(alpha.size());
  for (size_t j = 0; j < alpha.size(); ++j) {
    FieldElement denom = u[j];
    for (size_t i = 0; i < alpha.size(); ++i) {
      if (i != j) denom *= alpha[j] - alpha[i];
    }
    v.push_back(denom.Inverse());
  }
  return v;
}

CsaParams CsaParams::Create(const PrimeField& field, size_t servers,
                            size_t desired, FieldVector alpha,
                            FieldVector poles) {
  if (desired < 1 || desired >= servers) {
    throw InvalidParameters("CSA needs 1 <= L < N, got N = " +
                            to_string(servers) + ", L = " + to_string(desired));
  }
  if (alpha.size() != servers) {
    throw InvalidParameters("expected " + to_string(servers) +
                            " alpha values, got " + to_string(alpha.size()));
  }
  if (poles.size() != desired) {
    throw InvalidParameters("expected " + to_string(desired) +
                            " f values, got " + to_string(poles.size()));
  }
  if (servers + desired > field.modulus()) {
    throw InvalidParameters("q = " + to_string(field.modulus()) +
                            " < N + L = " + to_string(servers + desired));
  }
  CheckInField(field, alpha, "alpha");
  CheckInField(field, poles, "f");
  std::unordered_set<uint32_t> seen;
  for (const auto& a : alpha) {
    if (!seen.insert(a.value()).second) {
      throw InvalidParameters("alpha/f collision at value " +
                              to_string(a.value()));
    }
  }
  for (const auto& f : poles) {
    if (!seen.insert(f.value()).second) {
      throw InvalidParameters("alpha/f collision at value " +
                              to_string(f.value()));
    }
  }
  return CsaParams(field, servers, desired, std::move(alpha), std::move(poles));
}

CsaParams CsaParams::Default(const PrimeField& field, size_t servers,
                             size_t desired) {
  if (servers + desired > field.modulus()) {
    throw InvalidParameters("q = " + to_string(field.modulus()) +
                            " < N + L = " + to_string(servers + desired));
  }
  FieldVector alpha, poles;
  for (size_t n = 0; n < servers; ++n) {
    alpha.push_back(field.Element(static_cast<int64_t>(n)));
  }
  for (size_t l = 0; l < desired; ++l) {
    poles.push_back(field.Element(static_cast<int64_t>(servers + l)));
  }
  return Create(field, servers, desired, std::move(alpha), std::move(poles));
}

CsaParams CsaParams::Random(const PrimeField& field, size_t servers,
                            size_t desired, Rng& rng) {
  const size_t need = servers + desired;
  if (need > field.modulus()) {
    throw InvalidParameters("q = " + to_string(field.modulus()) +
                            " < N + L = " + to_string(need));
  }
  // Rejection sampling keeps memory independent of q.
  std::unordered_set<uint64_t> seen;
  std::vector<uint32_t> drawn;
  while (drawn.size() < need) {
    uint64_t x = rng.Below(field.modulus());
    if (seen.insert(x).second) drawn.push_back(static_cast<uint32_t>(x));
  }
  FieldVector alpha, poles;
  for (size_t i = 0; i < servers; ++i) alpha.emplace_back(field, drawn[i]);
  for (size_t i = servers; i < need; ++i) poles.emplace_back(field, drawn[i]);
  return Create(field, servers, desired, std::move(alpha), std::move(poles));
}

CsaParams CsaParams::Reduced() const {
  if (!NeedsReduction()) return *this;
  const size_t n2 = 2 * servers_ - 2 * desired_;
  const size_t l2 = servers_ - desired_;
  return Create(field_, n2, l2, FieldVector(alpha_.begin(), alpha_.begin() + n2),
                FieldVector(poles_.begin(), poles_.begin() + l2));
}

QcsaParams QcsaParams::Create(const CsaParams& csa, FieldVector beta) {
  if (2 * csa.desired() > csa.servers()) {
    throw InvalidParameters("QCSA needs L <= N/2, got N = " +
                            to_string(csa.servers()) +
                            ", L = " + to_string(csa.desired()));
  }
  if (beta.size() != csa.servers()) {
    throw InvalidParameters("expected " + to_string(csa.servers()) +
                            " beta values, got " + to_string(beta.size()));
  }
  CheckInField(csa.field(), beta, "beta");
  CheckNonzero(beta, "beta");
  return QcsaParams(csa, std::move(beta));
}

QcsaParams QcsaParams::Create(const PrimeField& field, size_t servers,
                              size_t desired, FieldVector alpha,
                              FieldVector beta, FieldVector poles) {
  return Create(CsaParams::Create(field, servers, desired, std::move(alpha),
                                  std::move(poles)),
                std::move(beta));
}

QcsaParams QcsaParams::Default(const PrimeField& field, size_t servers,
                               size_t desired) {
  return Create(CsaParams::Default(field, servers, desired),
                FieldVector(servers, field.One()));
}

QcsaParams QcsaParams::Random(const PrimeField& field, size_t servers,
                              size_t desired, Rng& rng) {
  if (2 * desired > servers) {
    throw InvalidParameters("QCSA needs L <= N/2");
  }
  CsaParams csa = CsaParams::Random(field, servers, desired, rng);
  FieldVector beta;
  for (size_t i = 0; i < servers; ++i) beta.push_back(rng.Nonzero(field));
  return Create(csa, std::move(beta));
}

namespace {

FieldMatrix ScaledCsa(const CsaParams& p, std::span<const FieldElement> beta) {
  const size_t n = p.servers();
  const size_t l = p.desired();
  FieldMatrix m(p.field(), n, n);
  for (size_t r = 0; r < n; ++r) {
    const FieldElement& a = p.alpha()[r];
    for (size_t j = 0; j < l; ++j) {
      m.set(r, j, beta[r] * (p.poles()[j] - a).Inverse());
    }
    FieldElement power = beta[r];
    for (size_t j = l; j < n; ++j) {
      m.set(r, j, power);
      power *= a;
    }
  }
  return m;
}

}  // namespace

FieldMatrix CsaMatrix(const CsaParams& params) {
  FieldVector ones(params.servers(), params.field().One());
  return ScaledCsa(params, ones);
}

FieldMatrix CsaMatrix(const PrimeField& field, size_t servers, size_t desired,
                      FieldVector alpha, FieldVector poles) {
  return CsaMatrix(CsaParams::Create(field, servers, desired, std::move(alpha),
                                     std::move(poles)));
}

FieldMatrix QcsaMatrix(const QcsaParams& params) {
  return ScaledCsa(params.csa(), params.beta());
}

namespace {

void CheckQcsaShape(const FieldMatrix& q, const QcsaParams& params) {
  if (q.rows() != params.servers() || q.cols() != params.servers()) {
    throw DimensionMismatch("QCSA matrix must be " +
                            to_string(params.servers()) + "x" +
                            to_string(params.servers()));
  }
}

}  // namespace

FieldMatrix QcsaGrsBlock(const FieldMatrix& q, const QcsaParams& params,
                         size_t width) {
  CheckQcsaShape(q, params);
  const size_t n = params.servers();
  if (width != FloorHalf(n) && width != CeilHalf(n)) {
    throw InvalidParameters("GRS block width " + to_string(width) +
                            " is neither floor(N/2) nor ceil(N/2)");
  }
  return q.ColumnRange(params.desired(), width);
}

FieldMatrix QcsaCauchyBlock(const FieldMatrix& q, const QcsaParams& params) {
  CheckQcsaShape(q, params);
  return q.ColumnRange(0, params.desired());
}

FieldMatrix QcsaTrailingBlock(const FieldMatrix& q, const QcsaParams& params) {
  CheckQcsaShape(q, params);
  const size_t n = params.servers();
  const size_t first = params.desired() + CeilHalf(n);
  return q.ColumnRange(first, n - first);
}

}  // namespace qcsa
