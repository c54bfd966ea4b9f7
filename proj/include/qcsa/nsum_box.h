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

#ifndef QCSA_NSUM_BOX_H_
#define QCSA_NSUM_BOX_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qcsa/codes.h"
#include "qcsa/field.h"
#include "qcsa/matrix.h"

namespace qcsa {

// An N-sum box viewed as the MIMO MAC y = M x over GF(q), with the (G, H)
// pair that certifies feasibility: G is 2N x N strongly self-orthogonal,
// [G H] is invertible and M = (0_N I_N) [G H]^{-1}. Server n drives inputs
// x_n and x_{N+n}; one use costs N qudits.
struct NSumBox {
  PrimeField field;
  std::size_t size;  // N
  FieldMatrix m;     // N x 2N
  FieldMatrix g;     // 2N x N
  FieldMatrix h;     // 2N x N
  // Present when built from QCSA matrices.
  std::optional<Permutation> pi;
  std::optional<QcsaParams> params;

  std::size_t QuditCost() const { return size; }
};

// J = [[0, -I_N], [I_N, 0]].
FieldMatrix SymplecticJ(const PrimeField& field, std::size_t n);

// rank(G) = N and G^T J G = 0. Throws DimensionMismatch unless G is 2N x N.
bool IsSso(const FieldMatrix& g);

// M = (0_N I_N) [G H]^{-1}. Throws NotSso or SingularGh.
NSumBox ChannelFromGh(const FieldMatrix& g, const FieldMatrix& h);

// The column permutation taking Block-Diag(Qu, Qv) to [G H]:
//   (L+1..L+ceil, N+L+1..N+L+floor, 1..L, L+ceil+1..N,
//    N+1..N+L, N+L+floor+1..2N)       (1-based, ceil/floor of N/2).
// Requires 1 <= L <= N/2.
Permutation QcsaPermutation(std::size_t servers, std::size_t desired);

// The N x 2N row selector of the QCSA channel: rows e_i for
// i in [1:L], [L+ceil+1:N], [N+1:N+L], [N+L+floor+1:2N] in that order.
// Throws InvalidParameters when L > N/2.
FieldMatrix SelectorMatrix(const PrimeField& field, std::size_t servers,
                           std::size_t desired);

// Builds the feasible box for Qu = QCSA(alpha, u, f), Qv = QCSA(alpha, v, f)
// where params.beta() is u and v are the dual multipliers of (alpha, u).
// M = Selector * Block-Diag(Qu, Qv)^{-1}.
//
// Throws InvalidParameters if Qu does not match params, DualityViolation if
// Qv was not built from the dual multipliers.
NSumBox BuildQcsaBox(const FieldMatrix& qu, const FieldMatrix& qv,
                     const QcsaParams& params);

// Everything the construct command emits.
struct QcsaConstruction {
  QcsaParams params;  // beta = u
  FieldVector v;
  FieldMatrix qu;
  FieldMatrix qv;
  NSumBox box;
};

QcsaConstruction ConstructQcsa(const QcsaParams& params);

// y = M x. Throws DimensionMismatch / FieldMismatch.
FieldVector Transmit(const NSumBox& box, std::span<const FieldElement> x);

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<Check> checks;
  bool AllPass() const;
  const Check* Find(const std::string& name) const;
};

// Feasibility checks valid for any box: sso_rank, sso_isotropic,
// gh_full_rank, channel_annihilates_g, channel_inverts_h.
VerifyReport VerifyBox(const NSumBox& box);

// VerifyBox plus the QCSA construction identities: qu_matches_params,
// dual_multipliers, qv_matches_dual, grs_duality, permutation_matches,
// gh_equals_permuted_blockdiag, selector_identity, selector_from_permutation.
VerifyReport VerifyConstruction(const QcsaConstruction& c);

}  // namespace qcsa

#endif  // QCSA_NSUM_BOX_H_
