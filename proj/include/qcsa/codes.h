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

#ifndef QCSA_CODES_H_
#define QCSA_CODES_H_

#include <cstddef>
#include <span>

#include "qcsa/field.h"
#include "qcsa/matrix.h"
#include "qcsa/random.h"

namespace qcsa {

// Generalized Reed-Solomon generator: n = alpha.size() rows, k columns,
// entry (i, j) = u_i * alpha_i^j (0-based j).
struct GrsSpec {
  PrimeField field;
  std::size_t k;
  FieldVector alpha;
  FieldVector u;
};

// Throws InvalidParameters on duplicate alpha, zero u, k > n, or length
// mismatch.
void ValidateGrs(const GrsSpec& spec);
FieldMatrix GrsGenerator(const GrsSpec& spec);

// Multipliers v of the dual GRS code:
//   v_j = (u_j * prod_{i != j} (alpha_j - alpha_i))^{-1}.
FieldVector DualMultipliers(std::span<const FieldElement> alpha,
                            std::span<const FieldElement> u);

inline std::size_t FloorHalf(std::size_t n) { return n / 2; }
inline std::size_t CeilHalf(std::size_t n) { return n - n / 2; }

// Classical cross-subspace alignment parameters: N servers, L desired
// symbols, N distinct evaluation points alpha and L poles f, all N + L
// distinct. Requires 1 <= L < N.
class CsaParams {
 public:
  static CsaParams Create(const PrimeField& field, std::size_t servers,
                          std::size_t desired, FieldVector alpha,
                          FieldVector poles);
  // alpha_n = n - 1, f_l = N + l - 1 (1-based n, l).
  static CsaParams Default(const PrimeField& field, std::size_t servers,
                           std::size_t desired);
  // N + L distinct points drawn uniformly without replacement.
  static CsaParams Random(const PrimeField& field, std::size_t servers,
                          std::size_t desired, Rng& rng);

  const PrimeField& field() const { return field_; }
  std::size_t servers() const { return servers_; }
  std::size_t desired() const { return desired_; }
  std::size_t interference() const { return servers_ - desired_; }
  const FieldVector& alpha() const { return alpha_; }
  const FieldVector& poles() const { return poles_; }

  // True when 2L > N, i.e. some servers are redundant on the quantum path.
  bool NeedsReduction() const { return 2 * desired_ > servers_; }
  // N' = 2N - 2L servers with L' = N - L, keeping the first N' points and
  // first L' poles. Identity when no reduction is needed.
  CsaParams Reduced() const;

  friend bool operator==(const CsaParams&, const CsaParams&) = default;

 private:
  CsaParams(const PrimeField& field, std::size_t servers, std::size_t desired,
            FieldVector alpha, FieldVector poles)
      : field_(field),
        servers_(servers),
        desired_(desired),
        alpha_(std::move(alpha)),
        poles_(std::move(poles)) {}

  PrimeField field_;
  std::size_t servers_;
  std::size_t desired_;
  FieldVector alpha_;
  FieldVector poles_;
};

// CSA parameters plus nonzero row multipliers beta, with L <= N/2.
class QcsaParams {
 public:
  static QcsaParams Create(const CsaParams& csa, FieldVector beta);
  static QcsaParams Create(const PrimeField& field, std::size_t servers,
                           std::size_t desired, FieldVector alpha,
                           FieldVector beta, FieldVector poles);
  // Default CSA points with beta = all ones.
  static QcsaParams Default(const PrimeField& field, std::size_t servers,
                            std::size_t desired);
  // Random points and random nonzero beta.
  static QcsaParams Random(const PrimeField& field, std::size_t servers,
                           std::size_t desired, Rng& rng);

  const CsaParams& csa() const { return csa_; }
  const PrimeField& field() const { return csa_.field(); }
  std::size_t servers() const { return csa_.servers(); }
  std::size_t desired() const { return csa_.desired(); }
  const FieldVector& alpha() const { return csa_.alpha(); }
  const FieldVector& poles() const { return csa_.poles(); }
  const FieldVector& beta() const { return beta_; }

  QcsaParams WithBeta(FieldVector beta) const { return Create(csa_, beta); }

  friend bool operator==(const QcsaParams&, const QcsaParams&) = default;

 private:
  QcsaParams(CsaParams csa, FieldVector beta)
      : csa_(std::move(csa)), beta_(std::move(beta)) {}

  CsaParams csa_;
  FieldVector beta_;
};

// Row n: [1/(f_1 - a_n), ..., 1/(f_L - a_n), 1, a_n, ..., a_n^(N-L-1)].
FieldMatrix CsaMatrix(const CsaParams& params);
FieldMatrix CsaMatrix(const PrimeField& field, std::size_t servers,
                      std::size_t desired, FieldVector alpha,
                      FieldVector poles);

// Diag(beta) * CsaMatrix. Columns: L Cauchy columns, then N - L Vandermonde
// columns whose first ceil(N/2) form GRS_{N, ceil(N/2)}(alpha, beta).
FieldMatrix QcsaMatrix(const QcsaParams& params);

// Columns L .. L + width - 1 (0-based) of a QCSA matrix: the embedded GRS
// generator. width must be floor(N/2) or ceil(N/2).
FieldMatrix QcsaGrsBlock(const FieldMatrix& q, const QcsaParams& params,
                         std::size_t width);
// The L Cauchy columns.
FieldMatrix QcsaCauchyBlock(const FieldMatrix& q, const QcsaParams& params);
// The floor(N/2) - L columns after the ceil(N/2)-wide GRS block.
FieldMatrix QcsaTrailingBlock(const FieldMatrix& q, const QcsaParams& params);

}  // namespace qcsa

#endif  // QCSA_CODES_H_
