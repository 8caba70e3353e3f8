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

#include "otplab/infotheory.h"

#include <cmath>

#include "otplab/errors.h"

namespace otplab {
namespace {

// P(x_k, z | y = k) as a 2x2 joint.
JointDistribution GuessJoint(std::size_t k, std::vector<Rational> probabilities) {
  return JointDistribution({"x" + std::to_string(k), "z"}, {2, 2}, std::move(probabilities));
}

InformationReport Summarize(const std::array<JointDistribution, 2>& joints,
                            double closed_form) {
  InformationReport report;
  for (const JointDistribution& j : joints) {
    report.per_index_information.push_back(MutualInformation(j));
    report.i_n += report.per_index_information.back();
  }
  report.classical_bits = 1;
  report.ic_satisfied = report.i_n <= report.classical_bits;
  report.closed_form = closed_form;
  report.discrepancy = std::fabs(report.i_n - closed_form);
  return report;
}

void RequireMu(const Rational& mu) {
  if (!IsProbability(mu)) throw DomainError("mu = " + ToString(mu) + " is outside [0, 1]");
}

}  // namespace

JointDistribution::JointDistribution(std::vector<std::string> names,
                                     std::vector<std::size_t> cardinalities,
                                     std::vector<Rational> probabilities)
    : names_(std::move(names)),
      cardinalities_(std::move(cardinalities)),
      probabilities_(std::move(probabilities)) {
  if (names_.size() != cardinalities_.size()) {
    throw ConstructionError("variable names and cardinalities differ in count");
  }
  std::size_t cells = 1;
  for (std::size_t c : cardinalities_) {
    if (c == 0) throw ConstructionError("variable with empty range");
    cells *= c;
  }
  if (probabilities_.size() != cells) {
    throw ConstructionError("joint has " + std::to_string(probabilities_.size()) +
                            " cells, expected " + std::to_string(cells));
  }
  Rational total = 0;
  for (const Rational& p : probabilities_) {
    if (p < 0) throw ConstructionError("negative probability");
    total += p;
  }
  if (total != 1) throw ConstructionError("joint sums to " + ToString(total));
}

std::size_t JointDistribution::Offset(const std::vector<std::size_t>& values) const {
  if (values.size() != cardinalities_.size()) {
    throw DomainError("wrong number of variable values");
  }
  std::size_t offset = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] >= cardinalities_[i]) throw DomainError("variable value out of range");
    offset = offset * cardinalities_[i] + values[i];
  }
  return offset;
}

const Rational& JointDistribution::at(const std::vector<std::size_t>& values) const {
  return probabilities_[Offset(values)];
}

JointDistribution JointDistribution::Marginal(const std::vector<std::size_t>& keep) const {
  std::vector<std::string> names;
  std::vector<std::size_t> cards;
  std::size_t cells = 1;
  for (std::size_t v : keep) {
    if (v >= names_.size()) throw DomainError("no such variable");
    names.push_back(names_[v]);
    cards.push_back(cardinalities_[v]);
    cells *= cardinalities_[v];
  }
  std::vector<Rational> probs(cells, Rational(0));
  std::vector<std::size_t> values(cardinalities_.size(), 0);
  for (const Rational& p : probabilities_) {
    std::size_t offset = 0;
    for (std::size_t v : keep) offset = offset * cardinalities_[v] + values[v];
    probs[offset] += p;
    // Advance the odometer, last variable fastest.
    for (std::size_t i = values.size(); i-- > 0;) {
      if (++values[i] < cardinalities_[i]) break;
      values[i] = 0;
    }
  }
  return JointDistribution(std::move(names), std::move(cards), std::move(probs));
}

double BinaryEntropy(double mu) {
  if (!(mu >= 0.0 && mu <= 1.0)) throw DomainError("binary entropy needs mu in [0, 1]");
  double h = 0.0;
  if (mu > 0.0) h -= mu * std::log2(mu);
  if (mu < 1.0) h -= (1.0 - mu) * std::log2(1.0 - mu);
  return h;
}

double Entropy(const JointDistribution& dist) {
  double h = 0.0;
  for (const Rational& p : dist.probabilities()) {
    if (p == 0) continue;
    const double v = ToDouble(p);
    h -= v * std::log2(v);
  }
  return h;
}

double MutualInformation(const JointDistribution& dist) {
  if (dist.names().size() != 2) {
    throw DomainError("mutual information needs a two-variable joint");
  }
  return Entropy(dist.Marginal({0})) + Entropy(dist.Marginal({1})) - Entropy(dist);
}

const char* FamilyName(RacFamily family) {
  return family == RacFamily::kNoisyKeys ? "notp" : "noisy-ontic";
}

RacResult RacRunNotp(const Rational& mu) {
  RequireMu(mu);
  const NOtpBoxSpec box(OutputMaps(Scenario(2, 2), {0, 0}, {0, 0, 0, 1}),
                        JointKeyDist::Correlated(mu));
  const Rational input_weight(1, 4);
  std::array<std::vector<Rational>, 2> cells{std::vector<Rational>(4, Rational(0)),
                                             std::vector<Rational>(4, Rational(0))};
  for (Bit y = 0; y < 2; ++y) {
    for (Bit x0 = 0; x0 < 2; ++x0) {
      for (Bit x1 = 0; x1 < 2; ++x1) {
        const Bit alice_in = x0 ^ x1;
        for (Bit l1 = 0; l1 < 2; ++l1) {
          for (Bit l2 = 0; l2 < 2; ++l2) {
            const Rational& p = box.keys().p(l1, l2);
            if (p == 0) continue;
            const Bit a = box.maps().g(alice_in) ^ l1;
            const Bit message = a ^ x0;
            const Bit b = box.maps().f(alice_in, y) ^ l2;
            const Bit z = b ^ message;
            const Bit target = y == 0 ? x0 : x1;
            cells[y][target * 2 + z] += input_weight * p;
          }
        }
      }
    }
  }
  std::array<JointDistribution, 2> joints{GuessJoint(0, std::move(cells[0])),
                                          GuessJoint(1, std::move(cells[1]))};
  const double closed = 2.0 - 2.0 * BinaryEntropy(ToDouble(mu));
  InformationReport report = Summarize(joints, closed);
  return {RacFamily::kNoisyKeys, mu, std::move(joints), std::move(report)};
}

RacResult RacRunNoisyOntic(const Rational& mu) {
  RequireMu(mu);
  const Rational input_weight(1, 4);
  const std::array<std::pair<Bit, Rational>, 2> channel = {
      std::pair<Bit, Rational>{0, mu}, std::pair<Bit, Rational>{1, 1 - mu}};
  std::array<std::vector<Rational>, 2> cells{std::vector<Rational>(4, Rational(0)),
                                             std::vector<Rational>(4, Rational(0))};
  for (Bit y = 0; y < 2; ++y) {
    for (Bit x0 = 0; x0 < 2; ++x0) {
      for (Bit x1 = 0; x1 < 2; ++x1) {
        const Bit alice_in = x0 ^ x1;
        for (const auto& [flip, weight] : channel) {
          if (weight == 0) continue;
          // What reaches Bob's end of the box at the hidden level.
          const Bit received = alice_in ^ flip;
          for (Bit lambda = 0; lambda < 2; ++lambda) {
            const Bit a = lambda;
            const Bit message = a ^ x0;
            const Bit b = (received & y) ^ lambda;
            const Bit z = b ^ message;
            const Bit target = y == 0 ? x0 : x1;
            cells[y][target * 2 + z] += input_weight * weight / 2;
          }
        }
      }
    }
  }
  std::array<JointDistribution, 2> joints{GuessJoint(0, std::move(cells[0])),
                                          GuessJoint(1, std::move(cells[1]))};
  const double closed = 2.0 - BinaryEntropy(ToDouble(mu));
  InformationReport report = Summarize(joints, closed);
  return {RacFamily::kNoisyOntic, mu, std::move(joints), std::move(report)};
}

double IcThresholdNotp() {
  // h is strictly decreasing on [1/2, 1], from 1 to 0.
  double lo = 0.5;
  double hi = 1.0;
  for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (BinaryEntropy(mid) > 0.5) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

KeyInformation KeyMutualInformation(const JointKeyDist& keys) {
  if (!keys.ns_admissible()) {
    throw PreconditionError("key distribution is not no-signaling admissible: p(lambda2=0) = " +
                            ToString(keys.marginal_bob(0)));
  }
  const JointDistribution joint(
      {"lambda1", "lambda2"}, {2, 2},
      std::vector<Rational>(keys.entries().begin(), keys.entries().end()));
  const double mi = MutualInformation(joint);
  return {mi, mi > 0.5};
}

}  // namespace otplab
