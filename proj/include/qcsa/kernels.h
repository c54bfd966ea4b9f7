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

#ifndef QCSA_KERNELS_H_
#define QCSA_KERNELS_H_

// Dense GF(p) kernels on raw row-major residue buffers.
//
// Every kernel comes in two flavours with identical results: `serial` is the
// plain reference loop nest kept for testing, `parallel` splits the
// independent row loop across OpenMP threads once the problem is large enough
// to amortize a parallel region. FieldMatrix dispatches to `parallel`.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace qcsa::kernels {

// Outcome of a Gauss-Jordan sweep.
struct RrefResult {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

// Below this many entries the parallel kernels run on the calling thread.
inline constexpr std::size_t kParallelThreshold = 64 * 64;

namespace serial {

// c (m x n) = a (m x k) * b (k x n) mod p.
void MatMul(std::span<const uint32_t> a, std::span<const uint32_t> b,
            std::span<uint32_t> c, std::size_t m, std::size_t k,
            std::size_t n, uint32_t p);

// In-place reduced row echelon form. Pivots are searched only in the first
// `pivot_limit` columns; within a column the first nonzero row at or below
// the current row is chosen.
RrefResult Rref(std::span<uint32_t> data, std::size_t rows, std::size_t cols,
                std::size_t pivot_limit, uint32_t p);

}  // namespace serial

namespace parallel {

void MatMul(std::span<const uint32_t> a, std::span<const uint32_t> b,
            std::span<uint32_t> c, std::size_t m, std::size_t k,
            std::size_t n, uint32_t p);

RrefResult Rref(std::span<uint32_t> data, std::size_t rows, std::size_t cols,
                std::size_t pivot_limit, uint32_t p);

}  // namespace parallel

// True when the library was compiled with OpenMP.
bool HaveOpenMp();
int MaxThreads();
void SetNumThreads(int n);

}  // namespace qcsa::kernels

#endif  // QCSA_KERNELS_H_
