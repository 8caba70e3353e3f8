/*
 * Copyright 2026 The otplab Authors.
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

#ifndef OTPLAB_RNG_H_
#define OTPLAB_RNG_H_

#include <cstdint>
#include <random>
#include <span>

#include "otplab/rational.h"

namespace otplab {

// Caller-owned generator state. The engine is std::mt19937_64, whose output
// sequence is fixed by the standard, and all derived draws below use only
// raw 64-bit words, so a given seed reproduces the same draws on every
// platform.
class SeedState {
 public:
  explicit SeedState(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t NextWord() { return engine_(); }

  Bit NextBit() { return static_cast<Bit>(engine_() >> 63); }

  // Uniform in [0, bound) by rejection; bound must be nonzero.
  std::uint64_t Below(std::uint64_t bound);

  // Uniform in [0, bound) for arbitrary-precision bounds.
  Integer Below(const Integer& bound);

  // Index i drawn with probability weights[i]; weights must be nonnegative
  // and sum to exactly 1. Zero-weight indices are never returned.
  std::size_t Categorical(std::span<const Rational> weights);

 private:
  std::mt19937_64 engine_;
};

}  // namespace otplab

#endif  // OTPLAB_RNG_H_
