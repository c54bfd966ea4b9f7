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

#include "qcsa/field.h"

#include <string>

#include "qcsa/errors.h"

namespace qcsa {
namespace modp {

uint32_t Inv(uint32_t a, uint32_t p) {
  int64_t t = 0, new_t = 1;
  int64_t r = p, new_r = a;
  while (new_r != 0) {
    int64_t q = r / new_r;
    int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p;
  return static_cast<uint32_t>(t);
}

uint32_t Pow(uint32_t a, uint64_t e, uint32_t p) {
  uint32_t result = 1 % p;
  uint32_t base = a;
  while (e > 0) {
    if (e & 1) result = Mul(result, base, p);
    base = Mul(base, base, p);
    e >>= 1;
  }
  return result;
}

uint32_t Reduce(int64_t v, uint32_t p) {
  int64_t r = v % static_cast<int64_t>(p);
  if (r < 0) r += p;
  return static_cast<uint32_t>(r);
}

}  // namespace modp

bool IsPrime(uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

uint32_t NextPrime(uint32_t n) {
  uint64_t c = n < 2 ? 2 : n;
  while (!IsPrime(c)) ++c;
  if (c > PrimeField::kMaxModulus) {
    throw InvalidParameters("no supported prime >= " + std::to_string(n));
  }
  return static_cast<uint32_t>(c);
}

PrimeField::PrimeField(uint32_t p) : p_(p) {
  if (p > kMaxModulus) {
    throw InvalidParameters("modulus " + std::to_string(p) +
                            " exceeds 2^31-1");
  }
  if (!IsPrime(p)) {
    throw InvalidParameters("modulus " + std::to_string(p) + " is not prime");
  }
}

FieldElement PrimeField::Element(int64_t v) const {
  return FieldElement(*this, modp::Reduce(v, p_));
}

FieldElement PrimeField::operator()(int64_t v) const { return Element(v); }
FieldElement PrimeField::Zero() const { return FieldElement(*this, 0); }
FieldElement PrimeField::One() const { return FieldElement(*this, 1); }

std::vector<FieldElement> PrimeField::Elements(
    std::span<const int64_t> values) const {
  std::vector<FieldElement> out;
  out.reserve(values.size());
  for (int64_t v : values) out.push_back(Element(v));
  return out;
}

FieldElement::FieldElement(const PrimeField& field, uint32_t canonical_value)
    : field_(field), value_(canonical_value) {
  if (value_ >= field_.modulus()) {
    throw InvalidParameters("value " + std::to_string(value_) +
                            " is not reduced mod " +
                            std::to_string(field_.modulus()));
  }
}

void FieldElement::CheckSameField(const FieldElement& rhs) const {
  if (field_ != rhs.field_) {
    throw FieldMismatch("GF(" + std::to_string(field_.modulus()) +
                        ") vs GF(" + std::to_string(rhs.field_.modulus()) +
                        ")");
  }
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
  CheckSameField(rhs);
  return FieldElement(field_, modp::Add(value_, rhs.value_, field_.modulus()));
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const {
  CheckSameField(rhs);
  return FieldElement(field_, modp::Sub(value_, rhs.value_, field_.modulus()));
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
  CheckSameField(rhs);
  return FieldElement(field_, modp::Mul(value_, rhs.value_, field_.modulus()));
}

FieldElement FieldElement::operator/(const FieldElement& rhs) const {
  CheckSameField(rhs);
  return *this * rhs.Inverse();
}

FieldElement FieldElement::operator-() const {
  return FieldElement(field_, modp::Neg(value_, field_.modulus()));
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
  return *this = *this + rhs;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
  return *this = *this - rhs;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
  return *this = *this * rhs;
}

FieldElement FieldElement::Inverse() const {
  if (value_ == 0) {
    throw DivisionByZero("inverse of zero in GF(" +
                         std::to_string(field_.modulus()) + ")");
  }
  return FieldElement(field_, modp::Inv(value_, field_.modulus()));
}

FieldElement FieldElement::Pow(uint64_t e) const {
  return FieldElement(field_, modp::Pow(value_, e, field_.modulus()));
}

std::ostream& operator<<(std::ostream& os, const FieldElement& a) {
  return os << a.value();
}

std::vector<uint32_t> Values(std::span<const FieldElement> elements) {
  std::vector<uint32_t> out;
  out.reserve(elements.size());
  for (const auto& e : elements) out.push_back(e.value());
  return out;
}

}  // namespace qcsa
