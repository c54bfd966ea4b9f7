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

#ifndef QCSA_MATRIX_H_
#define QCSA_MATRIX_H_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <vector>

#include "qcsa/field.h"

namespace qcsa {

using FieldVector = std::vector<FieldElement>;

// Dense row-major matrix over GF(p). Zero-row and zero-column matrices are
// valid values.
class FieldMatrix {
 public:
  // rows x cols zero matrix.
  FieldMatrix(const PrimeField& field, std::size_t rows, std::size_t cols);

  // Entries are reduced into the field. Throws DimensionMismatch if
  // values.size() != rows * cols.
  FieldMatrix(const PrimeField& field, std::size_t rows, std::size_t cols,
              std::span<const int64_t> values);

  // Row-wise literal, e.g. FromRows(f, {{3, 1}, {1, 1}}).
  static FieldMatrix FromRows(
      const PrimeField& field,
      std::initializer_list<std::initializer_list<int64_t>> rows);
  static FieldMatrix Identity(const PrimeField& field, std::size_t n);
  // Column vector.
  static FieldMatrix Column(const PrimeField& field,
                            std::span<const FieldElement> entries);
  static FieldMatrix Diagonal(const PrimeField& field,
                              std::span<const FieldElement> diag);

  const PrimeField& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  FieldElement at(std::size_t r, std::size_t c) const;
  uint32_t value(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  void set(std::size_t r, std::size_t c, const FieldElement& v);
  void set(std::size_t r, std::size_t c, int64_t v);

  std::span<const uint32_t> data() const { return data_; }
  std::span<uint32_t> mutable_data() { return data_; }

  FieldMatrix Transpose() const;
  FieldMatrix Negate() const;
  // Columns [first, first + count).
  FieldMatrix ColumnRange(std::size_t first, std::size_t count) const;
  FieldMatrix RowRange(std::size_t first, std::size_t count) const;
  // Gathers the listed (0-based) columns in order.
  FieldMatrix SelectColumns(std::span<const std::size_t> cols) const;
  FieldVector ColumnVector(std::size_t c) const;
  bool IsZero() const;

  friend bool operator==(const FieldMatrix&, const FieldMatrix&) = default;

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<uint32_t> data_;
};

std::ostream& operator<<(std::ostream& os, const FieldMatrix& m);

// One-line permutation of [n]. Stored 0-based; the external form is 1-based.
class Permutation {
 public:
  static Permutation Identity(std::size_t n);
  // image[j] = pi(j + 1), each in [1, n]. Throws InvalidParameters unless
  // the image is a bijection.
  static Permutation FromOneBased(std::span<const std::size_t> image);
  static Permutation FromZeroBased(std::vector<std::size_t> image);

  std::size_t size() const { return image_.size(); }
  // 0-based image of 0-based j.
  std::size_t operator[](std::size_t j) const { return image_[j]; }
  std::vector<std::size_t> OneBased() const;
  const std::vector<std::size_t>& ZeroBased() const { return image_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<std::size_t> image)
      : image_(std::move(image)) {}
  std::vector<std::size_t> image_;
};

FieldMatrix MatMul(const FieldMatrix& a, const FieldMatrix& b);
FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b);
FieldMatrix operator+(const FieldMatrix& a, const FieldMatrix& b);
FieldVector MatVec(const FieldMatrix& a, std::span<const FieldElement> x);

// Gauss-Jordan with first-nonzero pivoting. Throws SingularMatrix.
FieldMatrix Inverse(const FieldMatrix& a);
std::size_t Rank(const FieldMatrix& a);

FieldMatrix BlockDiag(std::span<const FieldMatrix> blocks);
FieldMatrix BlockDiag(std::initializer_list<FieldMatrix> blocks);
// [a b]; row counts must agree.
FieldMatrix HStack(const FieldMatrix& a, const FieldMatrix& b);
// [a; b]; column counts must agree.
FieldMatrix VStack(const FieldMatrix& a, const FieldMatrix& b);

// P = [e_pi(1) ... e_pi(n)], so A * P has column j equal to column pi(j)
// of A.
FieldMatrix PermutationMatrix(const PrimeField& field, const Permutation& pi);
Permutation InvertPermutation(const Permutation& pi);

}  // namespace qcsa

#endif  // QCSA_MATRIX_H_
