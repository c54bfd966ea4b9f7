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

#include "qcsa/kernels.h"

#include <algorithm>
#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qcsa/field.h"

namespace qcsa::kernels {
namespace {

using std::size_t;

// c_row += a_ik * b_row, all mod p. acc holds residues < p.
inline void AxpyRow(uint32_t a_ik, const uint32_t* b_row, uint64_t* acc,
                    size_t n, uint32_t p) {
  for (size_t j = 0; j < n; ++j) {
    acc[j] = (acc[j] + static_cast<uint64_t>(a_ik) * b_row[j]) % p;
  }
}

inline void MatMulRow(std::span<const uint32_t> a, std::span<const uint32_t> b,
                      std::span<uint32_t> c, size_t i, size_t k, size_t n,
                      uint32_t p, std::vector<uint64_t>& acc) {
  std::fill(acc.begin(), acc.end(), 0);
  const uint32_t* a_row = a.data() + i * k;
  for (size_t t = 0; t < k; ++t) {
    if (a_row[t] != 0) AxpyRow(a_row[t], b.data() + t * n, acc.data(), n, p);
  }
  for (size_t j = 0; j < n; ++j) c[i * n + j] = static_cast<uint32_t>(acc[j]);
}

// row_r -= factor * row_src over columns [from, cols).
inline void EliminateRow(uint32_t* row_r, const uint32_t* row_src,
                         uint32_t factor, size_t from, size_t cols,
                         uint32_t p) {
  for (size_t j = from; j < cols; ++j) {
    row_r[j] = modp::Sub(row_r[j], modp::Mul(factor, row_src[j], p), p);
  }
}

// Finds the pivot for `col` at or below `row`, swaps it into place, and scales
// the pivot row to a leading one. Returns false if the column is zero below
// `row`.
bool PreparePivot(std::span<uint32_t> data, size_t rows, size_t cols,
                  size_t row, size_t col, uint32_t p) {
  size_t pivot = row;
  while (pivot < rows && data[pivot * cols + col] == 0) ++pivot;
  if (pivot == rows) return false;
  if (pivot != row) {
    std::swap_ranges(data.begin() + pivot * cols,
                     data.begin() + (pivot + 1) * cols,
                     data.begin() + row * cols);
  }
  uint32_t* prow = data.data() + row * cols;
  uint32_t inv = modp::Inv(prow[col], p);
  for (size_t j = col; j < cols; ++j) prow[j] = modp::Mul(prow[j], inv, p);
  return true;
}

}  // namespace

namespace serial {

void MatMul(std::span<const uint32_t> a, std::span<const uint32_t> b,
            std::span<uint32_t> c, size_t m, size_t k, size_t n, uint32_t p) {
  std::vector<uint64_t> acc(n);
  for (size_t i = 0; i < m; ++i) MatMulRow(a, b, c, i, k, n, p, acc);
}

RrefResult Rref(std::span<uint32_t> data, size_t rows, size_t cols,
                size_t pivot_limit, uint32_t p) {
  RrefResult result;
  size_t row = 0;
  for (size_t col = 0; col < std::min(pivot_limit, cols) && row < rows;
       ++col) {
    if (!PreparePivot(data, rows, cols, row, col, p)) continue;
    const uint32_t* prow = data.data() + row * cols;
    for (size_t r = 0; r < rows; ++r) {
      uint32_t* rr = data.data() + r * cols;
      if (r != row && rr[col] != 0) EliminateRow(rr, prow, rr[col], col, cols, p);
    }
    result.pivot_cols.push_back(col);
    ++row;
  }
  result.rank = row;
  return result;
}

}  // namespace serial

namespace parallel {

void MatMul(std::span<const uint32_t> a, std::span<const uint32_t> b,
            std::span<uint32_t> c, size_t m, size_t k, size_t n, uint32_t p) {
  const bool big = m * k * n >= kParallelThreshold * 16;
#pragma omp parallel if (big)
  {
    std::vector<uint64_t> acc(n);
#pragma omp for schedule(static)
    for (size_t i = 0; i < m; ++i) MatMulRow(a, b, c, i, k, n, p, acc);
  }
}

RrefResult Rref(std::span<uint32_t> data, size_t rows, size_t cols,
                size_t pivot_limit, uint32_t p) {
  RrefResult result;
  const bool big = rows * cols >= kParallelThreshold;
  size_t row = 0;
  for (size_t col = 0; col < std::min(pivot_limit, cols) && row < rows;
       ++col) {
    if (!PreparePivot(data, rows, cols, row, col, p)) continue;
    const uint32_t* prow = data.data() + row * cols;
    uint32_t* base = data.data();
    const size_t pivot_row = row;
#pragma omp parallel for schedule(static) if (big)
    for (size_t r = 0; r < rows; ++r) {
      uint32_t* rr = base + r * cols;
      if (r != pivot_row && rr[col] != 0) {
        EliminateRow(rr, prow, rr[col], col, cols, p);
      }
    }
    result.pivot_cols.push_back(col);
    ++row;
  }
  result.rank = row;
  return result;
}

}  // namespace parallel

bool HaveOpenMp() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

int MaxThreads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void SetNumThreads(int n) {
#ifdef _OPENMP
  omp_set_num_threads(n);
#else
  (void)n;
#endif
}

}  // namespace qcsa::kernels
