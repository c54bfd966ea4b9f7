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

#ifndef QCSA_TESTS_ORACLES_H_
#define QCSA_TESTS_ORACLES_H_

// Brute-force reference computations on plain integer matrices. Nothing here
// touches the library's kernels, so tests can pit the two against each other.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "qcsa/matrix.h"

namespace qcsa::oracle {

using Mat = std::vector<std::vector<int64_t>>;

inline int64_t Mod(int64_t v, int64_t p) { return ((v % p) + p) % p; }

// Fermat inverse, independent of the library's extended Euclid.
inline int64_t InvFermat(int64_t a, int64_t p) {
  int64_t result = 1, base = Mod(a, p), e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

inline Mat ToMat(const FieldMatrix& m) {
  Mat out(m.rows(), std::vector<int64_t>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m.value(r, c);
  }
  return out;
}

inline Mat Multiply(const Mat& a, const Mat& b, int64_t p) {
  const std::size_t m = a.size(), k = b.size();
  const std::size_t n = k == 0 ? 0 : b[0].size();
  Mat c(m, std::vector<int64_t>(n, 0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      int64_t s = 0;
      for (std::size_t t = 0; t < k; ++t) s = (s + a[i][t] * b[t][j]) % p;
      c[i][j] = s;
    }
  }
  return c;
}

inline int64_t Det(const Mat& a, int64_t p) {
  if (a.size() == 1) return Mod(a[0][0], p);
  if (a.size() == 2) return Mod(a[0][0] * a[1][1] - a[0][1] * a[1][0], p);
  // Laplace expansion along the first row.
  int64_t det = 0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    Mat minor;
    for (std::size_t r = 1; r < a.size(); ++r) {
      std::vector<int64_t> row;
      for (std::size_t c = 0; c < a.size(); ++c) {
        if (c != j) row.push_back(a[r][c]);
      }
      minor.push_back(row);
    }
    int64_t term = a[0][j] * Det(minor, p) % p;
    det = Mod(det + (j % 2 == 0 ? term : -term), p);
  }
  return det;
}

// Adjugate / determinant inverse for small square matrices.
inline std::optional<Mat> AdjugateInverse(const Mat& a, int64_t p) {
  const std::size_t n = a.size();
  int64_t det = Det(a, p);
  if (det == 0) return std::nullopt;
  int64_t inv_det = InvFermat(det, p);
  if (n == 1) return Mat{{inv_det}};
  Mat inv(n, std::vector<int64_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Mat minor;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == i) continue;
        std::vector<int64_t> row;
        for (std::size_t c = 0; c < n; ++c) {
          if (c != j) row.push_back(a[r][c]);
        }
        minor.push_back(row);
      }
      int64_t cof = Det(minor, p);
      if ((i + j) % 2 == 1) cof = Mod(-cof, p);
      inv[j][i] = cof * inv_det % p;  // transpose of the cofactor matrix
    }
  }
  return inv;
}

// Rank by counting the row space: |rowspace| = p^rank. Tiny inputs only.
inline std::size_t RankByEnumeration(const Mat& a, int64_t p) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<int64_t> coeff(rows, 0);
  std::size_t count = 0;
  std::vector<std::vector<int64_t>> seen;
  while (true) {
    std::vector<int64_t> v(cols, 0);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        v[c] = (v[c] + coeff[r] * a[r][c]) % p;
      }
    }
    bool dup = false;
    for (const auto& s : seen) dup = dup || s == v;
    if (!dup) seen.push_back(v);
    std::size_t r = 0;
    while (r < rows && ++coeff[r] == p) coeff[r++] = 0;
    if (r == rows) break;
  }
  count = seen.size();
  std::size_t rank = 0;
  for (std::size_t s = 1; s < count; s *= static_cast<std::size_t>(p)) ++rank;
  return rank;
}

// Column j of the result is column pi(j) of a (0-based image).
inline Mat GatherColumns(const Mat& a, const std::vector<std::size_t>& image) {
  Mat out(a.size(), std::vector<int64_t>(image.size()));
  for (std::size_t r = 0; r < a.size(); ++r) {
    for (std::size_t j = 0; j < image.size(); ++j) out[r][j] = a[r][image[j]];
  }
  return out;
}

// v_j = (u_j prod_{i != j}(alpha_j - alpha_i))^{-1} evaluated directly.
inline std::vector<int64_t> DualMultipliers(const std::vector<int64_t>& alpha,
                                            const std::vector<int64_t>& u,
                                            int64_t p) {
  std::vector<int64_t> v;
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    int64_t d = Mod(u[j], p);
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      if (i != j) d = d * Mod(alpha[j] - alpha[i], p) % p;
    }
    v.push_back(InvFermat(d, p));
  }
  return v;
}

inline bool IsZero(const Mat& a) {
  for (const auto& row : a) {
    for (int64_t v : row) {
      if (v != 0) return false;
    }
  }
  return true;
}

inline Mat Transpose(const Mat& a) {
  if (a.empty()) return {};
  Mat t(a[0].size(), std::vector<int64_t>(a.size()));
  for (std::size_t r = 0; r < a.size(); ++r) {
    for (std::size_t c = 0; c < a[0].size(); ++c) t[c][r] = a[r][c];
  }
  return t;
}

}  // namespace qcsa::oracle

#endif  // QCSA_TESTS_ORACLES_H_
