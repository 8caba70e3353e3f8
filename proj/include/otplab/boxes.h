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

// Hidden-variable box specifications and their exact correlation tables.
//
// A box is a bipartite device with Alice input x in [0, m), Bob input y in
// [0, n) and binary outputs a, b. The one-time-pad (OTP) box hands Alice the
// key a = g(x) ^ lambda and Bob the ciphertext b = f(x, y) ^ lambda; the
// noisy variant uses two correlated keys lambda1 (Alice) and lambda2 (Bob).

#ifndef OTPLAB_BOXES_H_
#define OTPLAB_BOXES_H_

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "otplab/rational.h"
#include "otplab/rng.h"

namespace otplab {

class Scenario {
 public:
  // Throws ConstructionError unless m >= 1 and n >= 1.
  Scenario(std::size_t m, std::size_t n);

  std::size_t m() const { return m_; }
  std::size_t n() const { return n_; }
  std::size_t pairs() const { return m_ * n_; }

  friend bool operator==(const Scenario&, const Scenario&) = default;

 private:
  std::size_t m_;
  std::size_t n_;
};

// Distribution of the single OTP key: P(lambda = 0) = p0.
class KeyDist {
 public:
  // Throws DomainError unless 0 <= p0 <= 1.
  explicit KeyDist(Rational p0);

  static KeyDist Uniform() { return KeyDist(Half()); }

  const Rational& p0() const { return p0_; }
  Rational p(Bit lambda) const { return lambda == 0 ? p0_ : Rational(1 - p0_); }
  // Bias r = 2 p0 - 1.
  Rational bias() const { return 2 * p0_ - 1; }
  bool is_uniform() const { return p0_ == Half(); }

  friend bool operator==(const KeyDist&, const KeyDist&) = default;

 private:
  Rational p0_;
};

// Joint distribution p(lambda1, lambda2) of the noisy-box keys.
class JointKeyDist {
 public:
  // Entries ordered (0,0), (0,1), (1,0), (1,1). Throws ConstructionError on
  // negative entries or a sum different from 1.
  explicit JointKeyDist(std::array<Rational, 4> p);

  // p(l1, l2) = 1/2 [q delta(l1, l2) + (1 - q) delta(l1 ^ 1, l2)].
  // Throws DomainError unless 0 <= q <= 1.
  static JointKeyDist Correlated(const Rational& q);

  const Rational& p(Bit lambda1, Bit lambda2) const {
    return p_[lambda1 * 2 + lambda2];
  }
  const std::array<Rational, 4>& entries() const { return p_; }

  Rational marginal_alice(Bit lambda1) const { return p(lambda1, 0) + p(lambda1, 1); }
  Rational marginal_bob(Bit lambda2) const { return p(0, lambda2) + p(1, lambda2); }

  // Bob's key marginal is exactly uniform; the condition under which the
  // noisy box is no-signaling for every f.
  bool ns_admissible() const { return marginal_bob(0) == Half(); }

  friend bool operator==(const JointKeyDist&, const JointKeyDist&) = default;

 private:
  std::array<Rational, 4> p_;
};

// Total output maps shared by both box kinds: g over Alice inputs, f over
// (x, y) pairs stored row-major (x * n + y).
class OutputMaps {
 public:
  // Throws ConstructionError if g has length != m, f has length != m * n,
  // or any value is not a bit.
  OutputMaps(Scenario scenario, std::vector<Bit> g, std::vector<Bit> f);

  const Scenario& scenario() const { return scenario_; }
  Bit g(std::size_t x) const { return g_[x]; }
  Bit f(std::size_t x, std::size_t y) const { return f_[x * scenario_.n() + y]; }
  const std::vector<Bit>& g_values() const { return g_; }
  const std::vector<Bit>& f_values() const { return f_; }

  // f(x, y) differs from f(x', y) for some y and x != x'.
  bool f_depends_on_x() const;

  friend bool operator==(const OutputMaps&, const OutputMaps&) = default;

 private:
  Scenario scenario_;
  std::vector<Bit> g_;
  std::vector<Bit> f_;
};

class OtpBoxSpec {
 public:
  OtpBoxSpec(OutputMaps maps, KeyDist key)
      : maps_(std::move(maps)), key_(std::move(key)) {}

  const Scenario& scenario() const { return maps_.scenario(); }
  const OutputMaps& maps() const { return maps_; }
  const KeyDist& key() const { return key_; }

  friend bool operator==(const OtpBoxSpec&, const OtpBoxSpec&) = default;

 private:
  OutputMaps maps_;
  KeyDist key_;
};

class NOtpBoxSpec {
 public:
  NOtpBoxSpec(OutputMaps maps, JointKeyDist keys)
      : maps_(std::move(maps)), keys_(std::move(keys)) {}

  const Scenario& scenario() const { return maps_.scenario(); }
  const OutputMaps& maps() const { return maps_; }
  const JointKeyDist& keys() const { return keys_; }

  friend bool operator==(const NOtpBoxSpec&, const NOtpBoxSpec&) = default;

 private:
  OutputMaps maps_;
  JointKeyDist keys_;
};

// Exact conditional distribution P(a, b | x, y).
class CorrelationTable {
 public:
  // Entries laid out as ((x * n + y) * 2 + a) * 2 + b. Throws
  // ConstructionError on wrong size, negative entries, or any (x, y) block
  // not summing to exactly 1.
  CorrelationTable(Scenario scenario, std::vector<Rational> entries);

  const Scenario& scenario() const { return scenario_; }
  const Rational& at(Bit a, Bit b, std::size_t x, std::size_t y) const {
    return entries_[Index(a, b, x, y)];
  }
  const std::vector<Rational>& entries() const { return entries_; }

  // The four outcome probabilities at (x, y), ordered (0,0),(0,1),(1,0),(1,1).
  std::array<Rational, 4> block(std::size_t x, std::size_t y) const;

  // P_A(a | x, y) and P_B(b | x, y).
  Rational alice_marginal(Bit a, std::size_t x, std::size_t y) const;
  Rational bob_marginal(Bit b, std::size_t x, std::size_t y) const;

  std::size_t Index(Bit a, Bit b, std::size_t x, std::size_t y) const {
    return ((x * scenario_.n() + y) * 2 + a) * 2 + b;
  }

  friend bool operator==(const CorrelationTable&, const CorrelationTable&) = default;

 private:
  Scenario scenario_;
  std::vector<Rational> entries_;
};

CorrelationTable EvaluateOtp(const OtpBoxSpec& spec);
CorrelationTable EvaluateNotp(const NOtpBoxSpec& spec);

// 1/2 delta(a ^ b, xy) and 1/2 delta(a ^ b, xy ^ 1) on the 2,2 scenario.
CorrelationTable PrBox();
CorrelationTable AntiPrBox();

// q * PR + (1 - q) * anti-PR. Throws DomainError unless 0 <= q <= 1.
CorrelationTable Isotropic(const Rational& q);

// PR whose hidden-level signal x is delivered through a bit-flip channel
// with flip probability 1 - mu: mu * PR(x) + (1 - mu) * PR(x ^ 1).
CorrelationTable NoisyOnticBox(const Rational& mu);

// Deterministic outputs a = alice[x], b = bob[y].
CorrelationTable LocalDeterministic(const std::vector<Bit>& alice,
                                    const std::vector<Bit>& bob);

// weight * first + (1 - weight) * second, on identical scenarios.
CorrelationTable Mix(const Rational& weight, const CorrelationTable& first,
                     const CorrelationTable& second);

// Draws (a, b) from P(., . | x, y). Throws DomainError on out-of-range
// inputs.
std::pair<Bit, Bit> SampleOutcome(const CorrelationTable& table, std::size_t x,
                                  std::size_t y, SeedState& rng);

}  // namespace otplab

#endif  // OTPLAB_BOXES_H_
