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

#include "qcsa/matrix.h"

#include <algorithm>
#include <string>

#include "qcsa/errors.h"
#include "qcsa/kernels.h"

namespace qcsa {
namespace {

std::string Shape(const FieldMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void CheckField(const PrimeField& a, const PrimeField& b) {
  if (a != b) {
    throw FieldMismatch("GF(" + std::to_string(a.modulus()) + ") vs GF(" +
                        std::to_string(b.modulus()) + ")");
  }
}

}  // namespace

FieldMatrix::FieldMatrix(const PrimeField& field, std::size_t rows,
                         std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

FieldMatrix::FieldMatrix(const PrimeField& field, std::size_t rows,
                         std::size_t cols, std::span<const int64_t> values)
    : FieldMatrix(field, rows, cols) {
  if (values.size() != rows * cols) {
    throw DimensionMismatch("expected " + std::to_string(rows * cols) +
                            " entries, got " + std::to_string(values.size()));
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    data_[i] = modp::Reduce(values[i], field.modulus());
  }
}

FieldMatrix FieldMatrix::FromRows(
    const PrimeField& field,
    std::initializer_list<std::initializer_list<int64_t>> rows) {
  std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
  std::vector<int64_t> flat;
  for (const auto& row : rows) {
    if (row.size() != cols) throw DimensionMismatch("ragged row literal");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return FieldMatrix(field, rows.size(), cols, flat);
}

FieldMatrix FieldMatrix::Identity(const PrimeField& field, std::size_t n) {
  FieldMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
  return m;
}

FieldMatrix FieldMatrix::Column(const PrimeField& field,
                                std::span<const FieldElement> entries) {
  FieldMatrix m(field, entries.size(), 1);
  for (std::size_t i = 0; i < entries.size(); ++i) m.set(i, 0, entries[i]);
  return m;
}

FieldMatrix FieldMatrix::Diagonal(const PrimeField& field,
                                  std::span<const FieldElement> diag) {
  FieldMatrix m(field, diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m.set(i, i, diag[i]);
  return m;
}

FieldElement FieldMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) {
    throw DimensionMismatch("index (" + std::to_string(r) + "," +
                            std::to_string(c) + ") outside " + Shape(*this));
  }
  return FieldElement(field_, data_[r * cols_ + c]);
}

void FieldMatrix::set(std::size_t r, std::size_t c, const FieldElement& v) {
  CheckField(field_, v.field());
  if (r >= rows_ || c >= cols_) {
    throw DimensionMismatch("index outside " + Shape(*this));
  }
  data_[r * cols_ + c] = v.value();
}

void FieldMatrix::set(std::size_t r, std::size_t c, int64_t v) {
  set(r, c, field_.Element(v));
}

FieldMatrix FieldMatrix::Transpose() const {
  FieldMatrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      t.data_[c * rows_ + r] = data_[r * cols_ + c];
    }
  }
  return t;
}

FieldMatrix FieldMatrix::Negate() const {
  FieldMatrix n(field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) {
    n.data_[i] = modp::Neg(data_[i], field_.modulus());
  }
  return n;
}

FieldMatrix FieldMatrix::ColumnRange(std::size_t first,
                                     std::size_t count) const {
  if (first + count > cols_) {
    throw DimensionMismatch("column range [" + std::to_string(first) + ", " +
                            std::to_string(first + count) + ") outside " +
                            Shape(*this));
  }
  FieldMatrix out(field_, rows_, count);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < count; ++c) {
      out.data_[r * count + c] = data_[r * cols_ + first + c];
    }
  }
  return out;
}

FieldMatrix FieldMatrix::RowRange(std::size_t first, std::size_t count) const {
  if (first + count > rows_) {
    throw DimensionMismatch("row range outside " + Shape(*this));
  }
  FieldMatrix out(field_, count, cols_);
  std::copy(data_.begin() + first * cols_,
            data_.begin() + (first + count) * cols_, out.data_.begin());
  return out;
}

FieldMatrix FieldMatrix::SelectColumns(
    std::span<const std::size_t> cols) const {
  FieldMatrix out(field_, rows_, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j] >= cols_) {
      throw DimensionMismatch("column " + std::to_string(cols[j]) +
                              " outside " + Shape(*this));
    }
    for (std::size_t r = 0; r < rows_; ++r) {
      out.data_[r * cols.size() + j] = data_[r * cols_ + cols[j]];
    }
  }
  return out;
}

FieldVector FieldMatrix::ColumnVector(std::size_t c) const {
  FieldVector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back(at(r, c));
  return v;
}

bool FieldMatrix::IsZero() const {
  for (uint32_t v : data_) {
    if (v != 0) return false;
  }
  return true;
}

std::ostream& operator<<(std::ostream& os, const FieldMatrix& m) {
  os << "GF(" << m.field().modulus() << ")[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) {
      os << (c ? "," : "") << m.value(r, c);
    }
    os << "]";
  }
  return os << "]";
}

Permutation Permutation::Identity(std::size_t n) {
  std::vector<std::size_t> image(n);
  for (std::size_t i = 0; i < n; ++i) image[i] = i;
  return Permutation(std::move(image));
}

Permutation Permutation::FromZeroBased(std::vector<std::size_t> image) {
  std::vector<bool> seen(image.size(), false);
  for (std::size_t v : image) {
    if (v >= image.size() || seen[v]) {
      throw InvalidParameters("permutation image is not a bijection on [" +
                              std::to_string(image.size()) + "]");
    }
    seen[v] = true;
  }
  return Permutation(std::move(image));
}

Permutation Permutation::FromOneBased(std::span<const std::size_t> image) {
  std::vector<std::size_t> zero_based;
  zero_based.reserve(image.size());
  for (std::size_t v : image) {
    if (v == 0) throw InvalidParameters("one-based permutation contains 0");
    zero_based.push_back(v - 1);
  }
  return FromZeroBased(std::move(zero_based));
}

std::vector<std::size_t> Permutation::OneBased() const {
  std::vector<std::size_t> out(image_);
  for (auto& v : out) ++v;
  return out;
}

FieldMatrix MatMul(const FieldMatrix& a, const FieldMatrix& b) {
  CheckField(a.field(), b.field());
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("cannot multiply " + Shape(a) + " by " + Shape(b));
  }
  FieldMatrix c(a.field(), a.rows(), b.cols());
  kernels::parallel::MatMul(a.data(), b.data(), c.mutable_data(), a.rows(),
                            a.cols(), b.cols(), a.field().modulus());
  return c;
}

FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b) {
  return MatMul(a, b);
}

FieldMatrix operator+(const FieldMatrix& a, const FieldMatrix& b) {
  CheckField(a.field(), b.field());
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("cannot add " + Shape(a) + " and " + Shape(b));
  }
  FieldMatrix c(a.field(), a.rows(), a.cols());
  const uint32_t p = a.field().modulus();
  auto out = c.mutable_data();
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = modp::Add(a.data()[i], b.data()[i], p);
  }
  return c;
}

FieldVector MatVec(const FieldMatrix& a, std::span<const FieldElement> x) {
  if (x.size() != a.cols()) {
    throw DimensionMismatch("vector of length " + std::to_string(x.size()) +
                            " against " + Shape(a));
  }
  for (const auto& e : x) CheckField(a.field(), e.field());
  FieldMatrix y = MatMul(a, FieldMatrix::Column(a.field(), x));
  return y.ColumnVector(0);
}

FieldMatrix Inverse(const FieldMatrix& a) {
  if (a.rows() != a.cols()) {
    throw DimensionMismatch("inverse of non-square " + Shape(a));
  }
  const std::size_t n = a.rows();
  const std::size_t w = 2 * n;
  FieldMatrix aug(a.field(), n, w);
  auto buf = aug.mutable_data();
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) buf[r * w + c] = a.value(r, c);
    buf[r * w + n + r] = 1;
  }
  auto rref = kernels::parallel::Rref(buf, n, w, n, a.field().modulus());
  if (rref.rank < n) {
    throw SingularMatrix("matrix " + Shape(a) + " has rank " +
                         std::to_string(rref.rank));
  }
  return aug.ColumnRange(n, n);
}

std::size_t Rank(const FieldMatrix& a) {
  std::vector<uint32_t> buf(a.data().begin(), a.data().end());
  return kernels::parallel::Rref(buf, a.rows(), a.cols(), a.cols(),
                                 a.field().modulus())
      .rank;
}

FieldMatrix BlockDiag(std::span<const FieldMatrix> blocks) {
  if (blocks.empty()) throw DimensionMismatch("block_diag of no blocks");
  const PrimeField& field = blocks.front().field();
  std::size_t rows = 0, cols = 0;
  for (const auto& b : blocks) {
    CheckField(field, b.field());
    rows += b.rows();
    cols += b.cols();
  }
  FieldMatrix out(field, rows, cols);
  auto buf = out.mutable_data();
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r) {
      for (std::size_t c = 0; c < b.cols(); ++c) {
        buf[(r0 + r) * cols + c0 + c] = b.value(r, c);
      }
    }
    r0 += b.rows();
    c0 += b.cols();
  }
  return out;
}

FieldMatrix BlockDiag(std::initializer_list<FieldMatrix> blocks) {
  return BlockDiag(std::span<const FieldMatrix>(blocks.begin(), blocks.size()));
}

FieldMatrix HStack(const FieldMatrix& a, const FieldMatrix& b) {
  CheckField(a.field(), b.field());
  if (a.rows() != b.rows()) {
    throw DimensionMismatch("cannot stack " + Shape(a) + " beside " +
                            Shape(b));
  }
  FieldMatrix out(a.field(), a.rows(), a.cols() + b.cols());
  auto buf = out.mutable_data();
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      buf[r * out.cols() + c] = a.value(r, c);
    }
    for (std::size_t c = 0; c < b.cols(); ++c) {
      buf[r * out.cols() + a.cols() + c] = b.value(r, c);
    }
  }
  return out;
}

FieldMatrix VStack(const FieldMatrix& a, const FieldMatrix& b) {
  CheckField(a.field(), b.field());
  if (a.cols() != b.cols()) {
    throw DimensionMismatch("cannot stack " + Shape(a) + " above " + Shape(b));
  }
  FieldMatrix out(a.field(), a.rows() + b.rows(), a.cols());
  auto buf = out.mutable_data();
  std::copy(a.data().begin(), a.data().end(), buf.begin());
  std::copy(b.data().begin(), b.data().end(), buf.begin() + a.data().size());
  return out;
}

FieldMatrix PermutationMatrix(const PrimeField& field, const Permutation& pi) {
  const std::size_t n = pi.size();
  FieldMatrix p(field, n, n);
  for (std::size_t j = 0; j < n; ++j) p.mutable_data()[pi[j] * n + j] = 1;
  return p;
}

Permutation InvertPermutation(const Permutation& pi) {
  std::vector<std::size_t> inv(pi.size());
  for (std::size_t j = 0; j < pi.size(); ++j) inv[pi[j]] = j;
  return Permutation::FromZeroBased(std::move(inv));
}

}  // namespace qcsa
