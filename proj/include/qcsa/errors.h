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

#ifndef QCSA_ERRORS_H_
#define QCSA_ERRORS_H_

#include <stdexcept>
#include <string>

namespace qcsa {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands live in different prime fields.
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

// Operand shapes are incompatible (matrix product, vector length, ...).
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

// A parameter bundle violates its distinctness / range invariants.
class InvalidParameters : public Error {
 public:
  using Error::Error;
};

// G is not strongly self-orthogonal.
class NotSso : public Error {
 public:
  using Error::Error;
};

// [G H] is not of full rank 2N.
class SingularGh : public Error {
 public:
  using Error::Error;
};

// A supplied (Qu, Qv) pair does not satisfy the GRS duality relation.
class DualityViolation : public Error {
 public:
  using Error::Error;
};

// A serialized document is malformed.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace qcsa

#endif  // QCSA_ERRORS_H_
