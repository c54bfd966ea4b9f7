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

#ifndef QCSA_FIELD_H_
#define QCSA_FIELD_H_

#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

namespace qcsa {

// Raw modular arithmetic on canonical residues. All inputs must already lie
// in [0, p) and p must be below 2^31, so a sum never overflows 32 bits.
namespace modp {

inline uint32_t Add(uint32_t a, uint32_t b, uint32_t p) {
  uint32_t s = a + b;
  return s >= p ? s - p : s;
}

inline uint32_t Sub(uint32_t a, uint32_t b, uint32_t p) {
  return a >= b ? a - b : a + (p - b);
}

inline uint32_t Neg(uint32_t a, uint32_t p) { return a == 0 ? 0 : p - a; }

inline uint32_t Mul(uint32_t a, uint32_t b, uint32_t p) {
  return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % p);
}

// Extended Euclid. Caller guarantees a != 0.
uint32_t Inv(uint32_t a, uint32_t p);

uint32_t Pow(uint32_t a, uint64_t e, uint32_t p);

uint32_t Reduce(int64_t v, uint32_t p);

}  // namespace modp

bool IsPrime(uint64_t n);

// Smallest prime >= n.
uint32_t NextPrime(uint32_t n);

class FieldElement;

// The prime field GF(p), 2 <= p <= 2^31 - 1.
class PrimeField {
 public:
  static constexpr uint32_t kMaxModulus = 0x7fffffffu;

  // Throws InvalidParameters if p is not a supported prime.
  explicit PrimeField(uint32_t p);

  uint32_t modulus() const { return p_; }

  // Reduces an arbitrary integer into the field.
  FieldElement Element(int64_t v) const;
  FieldElement operator()(int64_t v) const;
  FieldElement Zero() const;
  FieldElement One() const;

  std::vector<FieldElement> Elements(std::span<const int64_t> values) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  uint32_t p_;
};

// An element of GF(p), always held in canonical form.
class FieldElement {
 public:
  FieldElement(const PrimeField& field, uint32_t canonical_value);

  uint32_t value() const { return value_; }
  const PrimeField& field() const { return field_; }
  bool IsZero() const { return value_ == 0; }

  FieldElement operator+(const FieldElement& rhs) const;
  FieldElement operator-(const FieldElement& rhs) const;
  FieldElement operator*(const FieldElement& rhs) const;
  FieldElement operator/(const FieldElement& rhs) const;
  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& rhs);
  FieldElement& operator-=(const FieldElement& rhs);
  FieldElement& operator*=(const FieldElement& rhs);

  // Throws DivisionByZero on zero.
  FieldElement Inverse() const;
  // 0^0 is 1.
  FieldElement Pow(uint64_t e) const;

  friend bool operator==(const FieldElement&, const FieldElement&) = default;

 private:
  void CheckSameField(const FieldElement& rhs) const;

  PrimeField field_;
  uint32_t value_;
};

inline FieldElement Inv(const FieldElement& a) { return a.Inverse(); }
inline FieldElement Pow(const FieldElement& a, uint64_t e) { return a.Pow(e); }

std::ostream& operator<<(std::ostream& os, const FieldElement& a);

// Plain integer values of a span of elements.
std::vector<uint32_t> Values(std::span<const FieldElement> elements);

}  // namespace qcsa

#endif  // QCSA_FIELD_H_
