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

#ifndef QCSA_RANDOM_H_
#define QCSA_RANDOM_H_

#include <cstdint>
#include <random>

#include "qcsa/field.h"

namespace qcsa {

// Seedable generator for replayable trials. The engine is std::mt19937_64,
// whose output sequence is fixed by the standard; bounded draws use rejection
// sampling rather than std::uniform_int_distribution so results are
// identical across standard library implementations.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  // Uniform in [0, bound). bound must be nonzero.
  uint64_t Below(uint64_t bound) {
    const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  FieldElement Uniform(const PrimeField& f) {
    return FieldElement(f, static_cast<uint32_t>(Below(f.modulus())));
  }

  FieldElement Nonzero(const PrimeField& f) {
    return FieldElement(f, static_cast<uint32_t>(1 + Below(f.modulus() - 1)));
  }

 private:
  std::mt19937_64 engine_;
};

// splitmix64 finalizer over (seed, stream): independent per-trial seeds.
inline uint64_t DeriveSeed(uint64_t seed, uint64_t stream) {
  uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace qcsa

#endif  // QCSA_RANDOM_H_
