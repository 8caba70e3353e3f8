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

// Shannon quantities (base 2) over exact joint distributions, and the
// 2 -> 1 random access code (RAC) used to test Information Causality.
//
// RAC wiring, common to both box families: Alice holds x0 x1 and feeds
// x0 ^ x1 into her end; she sends the single bit a ^ x0. Bob feeds y (the
// index of the bit he wants) and guesses z = b ^ message. IC with one
// classical bit requires I_2 = I(x0 : z | y=0) + I(x1 : z | y=1) <= 1.

#ifndef OTPLAB_INFOTHEORY_H_
#define OTPLAB_INFOTHEORY_H_

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "otplab/boxes.h"
#include "otplab/rational.h"

namespace otplab {

// Exact joint distribution over named finite variables. Probabilities are
// row-major with the last variable varying fastest.
class JointDistribution {
 public:
  // Throws ConstructionError on size mismatch, negative entries, or a sum
  // other than 1.
  JointDistribution(std::vector<std::string> names, std::vector<std::size_t> cardinalities,
                    std::vector<Rational> probabilities);

  const std::vector<std::string>& names() const { return names_; }
  const std::vector<std::size_t>& cardinalities() const { return cardinalities_; }
  const std::vector<Rational>& probabilities() const { return probabilities_; }

  const Rational& at(const std::vector<std::size_t>& values) const;

  // Distribution of the listed variables, in the listed order.
  JointDistribution Marginal(const std::vector<std::size_t>& keep) const;

  friend bool operator==(const JointDistribution&, const JointDistribution&) = default;

 private:
  std::size_t Offset(const std::vector<std::size_t>& values) const;

  std::vector<std::string> names_;
  std::vector<std::size_t> cardinalities_;
  std::vector<Rational> probabilities_;
};

// -mu log2 mu - (1 - mu) log2 (1 - mu) with 0 log 0 = 0. Throws
// DomainError unless 0 <= mu <= 1.
double BinaryEntropy(double mu);

double Entropy(const JointDistribution& dist);

// I(U : V) = H(U) + H(V) - H(U, V) for a two-variable joint. Throws
// DomainError for any other arity.
double MutualInformation(const JointDistribution& dist);

struct InformationReport {
  std::vector<double> per_index_information;  // I(x_k : z | y = k)
  double i_n = 0;
  unsigned classical_bits = 1;
  bool ic_satisfied = true;  // i_n <= classical_bits
  std::optional<double> closed_form;
  std::optional<double> discrepancy;  // |i_n - closed_form|
};

enum class RacFamily { kNoisyKeys, kNoisyOntic };

const char* FamilyName(RacFamily family);

struct RacResult {
  RacFamily family;
  Rational mu;
  std::array<JointDistribution, 2> joints;  // over (x_k, z) given y = k
  InformationReport report;
};

// RAC over the noisy-key box (g = 0, f = xy, keys
// JointKeyDist::Correlated(mu)), exact by enumeration over x0, x1 and both
// keys; closed form 2 - 2 h(mu). Throws DomainError unless 0 <= mu <= 1.
RacResult RacRunNotp(const Rational& mu);

// RAC over NoisyOnticBox(mu), exact by enumeration over x0, x1, the key and
// the hidden channel flip; closed form 2 - h(mu).
RacResult RacRunNoisyOntic(const Rational& mu);

// mu* in (1/2, 1) with h(mu*) = 1/2, by bisection. IC holds for the
// noisy-key family iff 1 - mu* <= mu <= mu*.
double IcThresholdNotp();

struct KeyInformation {
  double mutual_information;  // I(lambda1 : lambda2)
  bool ic_violation;          // mutual_information > 1/2
};

// Throws PreconditionError unless keys.ns_admissible().
KeyInformation KeyMutualInformation(const JointKeyDist& keys);

}  // namespace otplab

#endif  // OTPLAB_INFOTHEORY_H_
