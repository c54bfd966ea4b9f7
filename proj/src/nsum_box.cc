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

#include "qcsa/nsum_box.h"

#include <functional>
#include <string>

#include "qcsa/errors.h"

namespace qcsa {
namespace {

using std::size_t;
using std::to_string;

void CheckSsoShape(const FieldMatrix& g) {
  if (g.rows() != 2 * g.cols()) {
    throw DimensionMismatch("SSO candidate must be 2N x N, got " +
                            to_string(g.rows()) + "x" + to_string(g.cols()));
  }
}

void CheckQcsaShape(size_t servers, size_t desired) {
  if (desired < 1 || 2 * desired > servers) {
    throw InvalidParameters("QCSA channel needs 1 <= L <= N/2, got N = " +
                            to_string(servers) + ", L = " + to_string(desired));
  }
}

// (0_N I_N) X: the bottom N rows of a 2N x 2N matrix.
FieldMatrix BottomHalf(const FieldMatrix& x) {
  return x.RowRange(x.rows() / 2, x.rows() / 2);
}

// [a; 0] (a on top of n zero rows) or [0; a].
FieldMatrix Stack(const FieldMatrix& a, size_t n, bool on_top) {
  FieldMatrix zeros(a.field(), n, a.cols());
  return on_top ? VStack(a, zeros) : VStack(zeros, a);
}

}  // namespace

FieldMatrix SymplecticJ(const PrimeField& field, size_t n) {
  FieldMatrix j(field, 2 * n, 2 * n);
  const FieldElement minus_one = -field.One();
  for (size_t i = 0; i < n; ++i) {
    j.set(i, n + i, minus_one);
    j.set(n + i, i, field.One());
  }
  return j;
}

bool IsSso(const FieldMatrix& g) {
  CheckSsoShape(g);
  if (Rank(g) != g.cols()) return false;
  return (g.Transpose() * SymplecticJ(g.field(), g.cols()) * g).IsZero();
}

NSumBox ChannelFromGh(const FieldMatrix& g, const FieldMatrix& h) {
  CheckSsoShape(g);
  if (h.rows() != g.rows() || h.cols() != g.cols()) {
    throw DimensionMismatch("H must have the shape of G");
  }
  if (!IsSso(g)) throw NotSso("G is not strongly self-orthogonal");
  FieldMatrix gh = HStack(g, h);
  FieldMatrix inv(g.field(), 0, 0);
  try {
    inv = Inverse(gh);
  } catch (const SingularMatrix&) {
    throw SingularGh("[G H] has rank " + to_string(Rank(gh)) + " < " +
                     to_string(gh.rows()));
  }
  return NSumBox{g.field(), g.cols(), BottomHalf(inv), g, h, std::nullopt,
                 std::nullopt};
}

Permutation QcsaPermutation(size_t servers, size_t desired) {
  CheckQcsaShape(servers, desired);
  const size_t n = servers, l = desired;
  const size_t ceil = CeilHalf(n), floor = FloorHalf(n);
  std::vector<size_t> image;
  auto run = [&image](size_t first, size_t last) {  // 1-based, inclusive
    for (size_t i = first; i <= last; ++i) image.push_back(i);
  };
  run(l + 1, l + ceil);
  run(n + l + 1, n + l + floor);
  run(1, l);
  run(l + ceil + 1, n);
  run(n + 1, n + l);
  run(n + l + floor + 1, 2 * n);
  return Permutation::FromOneBased(image);
}

FieldMatrix SelectorMatrix(const PrimeField& field, size_t servers,
                           size_t desired) {
  CheckQcsaShape(servers, desired);
  const size_t n = servers, l = desired;
  const size_t ceil = CeilHalf(n), floor = FloorHalf(n);
  FieldMatrix s(field, n, 2 * n);
  size_t row = 0;
  // Block rows: I_L, I_{floor-L}, I_L, I_{ceil-L}, each placed at its
  // column offset.
  const size_t offsets[4] = {0, l + ceil, n, n + l + floor};
  const size_t widths[4] = {l, floor - l, l, ceil - l};
  for (int b = 0; b < 4; ++b) {
    for (size_t i = 0; i < widths[b]; ++i) s.set(row++, offsets[b] + i, 1);
  }
  return s;
}

NSumBox BuildQcsaBox(const FieldMatrix& qu, const FieldMatrix& qv,
                     const QcsaParams& params) {
  const size_t n = params.servers();
  const size_t l = params.desired();
  const PrimeField& field = params.field();
  if (qu.rows() != n || qu.cols() != n || qv.rows() != n || qv.cols() != n) {
    throw DimensionMismatch("Qu and Qv must be " + to_string(n) + "x" +
                            to_string(n));
  }
  if (qu != QcsaMatrix(params)) {
    throw InvalidParameters("Qu is not the QCSA matrix of the given params");
  }
  const FieldVector v = DualMultipliers(params.alpha(), params.beta());
  const QcsaParams params_v = params.WithBeta(v);

  const FieldMatrix upper = QcsaGrsBlock(qu, params, CeilHalf(n));
  const FieldMatrix lower = QcsaGrsBlock(qv, params_v, FloorHalf(n));
  if (!(upper.Transpose() * lower).IsZero()) {
    throw DualityViolation(
        "GRS blocks of Qu and Qv are not mutually orthogonal");
  }
  if (qv != QcsaMatrix(params_v)) {
    throw DualityViolation("Qv was not built from the dual multipliers");
  }

  FieldMatrix g = BlockDiag({upper, lower});

  // Remaining columns of Block-Diag(Qu, Qv), in permutation order.
  FieldMatrix h = Stack(QcsaCauchyBlock(qu, params), n, true);
  h = HStack(h, Stack(QcsaTrailingBlock(qu, params), n, true));
  h = HStack(h, Stack(QcsaCauchyBlock(qv, params_v), n, false));
  if (n % 2 == 1) {
    // The last GRS_{ceil} column of Qv, left out of G.
    h = HStack(h, Stack(qv.ColumnRange(l + FloorHalf(n), 1), n, false));
  }
  h = HStack(h, Stack(QcsaTrailingBlock(qv, params_v), n, false));

  FieldMatrix m = SelectorMatrix(field, n, l) * Inverse(BlockDiag({qu, qv}));
  return NSumBox{field, n, std::move(m), std::move(g), std::move(h),
                 QcsaPermutation(n, l), params};
}

QcsaConstruction ConstructQcsa(const QcsaParams& params) {
  FieldVector v = DualMultipliers(params.alpha(), params.beta());
  FieldMatrix qu = QcsaMatrix(params);
  FieldMatrix qv = QcsaMatrix(params.WithBeta(v));
  NSumBox box = BuildQcsaBox(qu, qv, params);
  return QcsaConstruction{params, std::move(v), std::move(qu), std::move(qv),
                          std::move(box)};
}

FieldVector Transmit(const NSumBox& box, std::span<const FieldElement> x) {
  if (x.size() != 2 * box.size) {
    throw DimensionMismatch("box input must have length " +
                            to_string(2 * box.size) + ", got " +
                            to_string(x.size()));
  }
  return MatVec(box.m, x);
}

bool VerifyReport::AllPass() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

const Check* VerifyReport::Find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

namespace {

// Runs one named predicate; any library error counts as a failure.
void Run(VerifyReport& report, std::string name,
         const std::function<bool(std::string&)>& predicate) {
  Check c{std::move(name), false, ""};
  try {
    c.pass = predicate(c.detail);
  } catch (const Error& e) {
    c.pass = false;
    c.detail = e.what();
  }
  report.checks.push_back(std::move(c));
}

}  // namespace

VerifyReport VerifyBox(const NSumBox& box) {
  VerifyReport report;
  const size_t n = box.size;
  Run(report, "sso_rank", [&](std::string& d) {
    CheckSsoShape(box.g);
    size_t r = Rank(box.g);
    d = "rank(G) = " + to_string(r) + ", N = " + to_string(n);
    return box.g.cols() == n && r == n;
  });
  Run(report, "sso_isotropic", [&](std::string& d) {
    CheckSsoShape(box.g);
    bool ok = (box.g.Transpose() * SymplecticJ(box.field, n) * box.g).IsZero();
    if (!ok) d = "G^T J G != 0";
    return ok;
  });
  Run(report, "gh_full_rank", [&](std::string& d) {
    size_t r = Rank(HStack(box.g, box.h));
    d = "rank[G H] = " + to_string(r);
    return r == 2 * n;
  });
  Run(report, "channel_annihilates_g", [&](std::string& d) {
    bool ok = (box.m * box.g).IsZero();
    if (!ok) d = "M G != 0";
    return ok;
  });
  Run(report, "channel_inverts_h", [&](std::string& d) {
    bool ok = box.m * box.h == FieldMatrix::Identity(box.field, n);
    if (!ok) d = "M H != I";
    return ok;
  });
  return report;
}

VerifyReport VerifyConstruction(const QcsaConstruction& c) {
  VerifyReport report = VerifyBox(c.box);
  const QcsaParams& params = c.params;
  const size_t n = params.servers();
  const size_t l = params.desired();
  const PrimeField& field = params.field();

  Run(report, "qu_matches_params",
      [&](std::string&) { return c.qu == QcsaMatrix(params); });
  Run(report, "dual_multipliers", [&](std::string&) {
    return c.v == DualMultipliers(params.alpha(), params.beta());
  });
  Run(report, "qv_matches_dual", [&](std::string&) {
    return c.qv == QcsaMatrix(params.WithBeta(c.v));
  });
  Run(report, "grs_duality", [&](std::string&) {
    FieldMatrix upper = QcsaGrsBlock(c.qu, params, CeilHalf(n));
    FieldMatrix lower = QcsaGrsBlock(c.qv, params, FloorHalf(n));
    return (upper.Transpose() * lower).IsZero();
  });
  Run(report, "permutation_matches", [&](std::string& d) {
    if (!c.box.pi) {
      d = "no permutation recorded";
      return false;
    }
    return *c.box.pi == QcsaPermutation(n, l);
  });
  Run(report, "gh_equals_permuted_blockdiag", [&](std::string& d) {
    if (!c.box.pi) {
      d = "no permutation recorded";
      return false;
    }
    return HStack(c.box.g, c.box.h) ==
           BlockDiag({c.qu, c.qv}) * PermutationMatrix(field, *c.box.pi);
  });
  Run(report, "selector_identity", [&](std::string& d) {
    bool ok = c.box.m * BlockDiag({c.qu, c.qv}) == SelectorMatrix(field, n, l);
    if (!ok) d = "M_Q Block-Diag(Qu, Qv) != selector";
    return ok;
  });
  Run(report, "selector_from_permutation", [&](std::string& d) {
    if (!c.box.pi) {
      d = "no permutation recorded";
      return false;
    }
    FieldMatrix p_inv =
        PermutationMatrix(field, InvertPermutation(*c.box.pi));
    return BottomHalf(p_inv) == SelectorMatrix(field, n, l);
  });
  return report;
}

}  // namespace qcsa
