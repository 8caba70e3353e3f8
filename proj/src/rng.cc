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

#include "otplab/rng.h"

#include <limits>
#include <vector>

#include <boost/integer/common_factor_rt.hpp>

#include "otplab/errors.h"

namespace otplab {

std::uint64_t SeedState::Below(std::uint64_t bound) {
  if (bound == 0) throw DomainError("empty range");
  // Largest multiple of bound that fits; reject words at or above it.
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      (std::numeric_limits<std::uint64_t>::max() % bound + 1) % bound;
  std::uint64_t word;
  do {
    word = engine_();
  } while (word > limit);
  return word % bound;
}

Integer SeedState::Below(const Integer& bound) {
  if (bound <= 0) throw DomainError("empty range");
  if (bound <= std::numeric_limits<std::uint64_t>::max()) {
    return Integer(Below(bound.convert_to<std::uint64_t>()));
  }
  const unsigned bits = msb(bound) + 1;
  const unsigned words = (bits + 63) / 64;
  const unsigned excess = words * 64 - bits;
  for (;;) {
    Integer candidate = 0;
    for (unsigned i = 0; i < words; ++i) {
      candidate <<= 64;
      candidate |= engine_();
    }
    candidate >>= excess;
    if (candidate < bound) return candidate;
  }
}

std::size_t SeedState::Categorical(std::span<const Rational> weights) {
  if (weights.empty()) throw DomainError("no outcomes");
  Integer common = 1;
  Rational total = 0;
  for (const Rational& w : weights) {
    if (w < 0) throw DomainError("negative weight");
    common = boost::integer::lcm(common, denominator(w));
    total += w;
  }
  if (total != 1) throw DomainError("weights do not sum to 1");
  const Integer draw = Below(common);
  Integer cumulative = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    cumulative += numerator(weights[i]) * (common / denominator(weights[i]));
    if (draw < cumulative) return i;
  }
  return weights.size() - 1;  // unreachable when the weights sum to 1
}

}  // namespace otplab
