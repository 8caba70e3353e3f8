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

#include "otplab/boxes.h"

#include <string>

#include "otplab/errors.h"

namespace otplab {
namespace {

void RequireBits(const std::vector<Bit>& values, const char* what) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] > 1) {
      throw ConstructionError(std::string(what) + "[" + std::to_string(i) +
                              "] is not a bit");
    }
  }
}

std::vector<Rational> ZeroEntries(const Scenario& s) {
  return std::vector<Rational>(s.pairs() * 4, Rational(0));
}

// Table of 1/2 delta(a ^ b, parity(x, y)) on the 2,2 scenario.
template <typename Parity>
CorrelationTable HalfParityBox(Parity parity) {
  Scenario s(2, 2);
  std::vector<Rational> entries = ZeroEntries(s);
  for (std::size_t x = 0; x < 2; ++x) {
    for (std::size_t y = 0; y < 2; ++y) {
      for (Bit a = 0; a < 2; ++a) {
        const Bit b = a ^ parity(x, y);
        entries[((x * 2 + y) * 2 + a) * 2 + b] = Half();
      }
    }
  }
  return CorrelationTable(s, std::move(entries));
}

void RequireUnitInterval(const Rational& v, const char* name) {
  if (!IsProbability(v)) {
    throw DomainError(std::string(name) + " = " + ToString(v) +
                      " is outside [0, 1]");
  }
}

}  // namespace

Scenario::Scenario(std::size_t m, std::size_t n) : m_(m), n_(n) {
  if (m == 0 || n == 0) {
    throw ConstructionError("scenario needs at least one input per party");
  }
}

KeyDist::KeyDist(Rational p0) : p0_(std::move(p0)) {
  RequireUnitInterval(p0_, "p0");
}

JointKeyDist::JointKeyDist(std::array<Rational, 4> p) : p_(std::move(p)) {
  Rational total = 0;
  for (const Rational& v : p_) {
    if (v < 0) throw ConstructionError("negative key probability");
    total += v;
  }
  if (total != 1) {
    throw ConstructionError("key probabilities sum to " + ToString(total));
  }
}

JointKeyDist JointKeyDist::Correlated(const Rational& q) {
  RequireUnitInterval(q, "q");
  const Rational same = q / 2;
  const Rational flipped = (1 - q) / 2;
  return JointKeyDist({same, flipped, flipped, same});
}

OutputMaps::OutputMaps(Scenario scenario, std::vector<Bit> g, std::vector<Bit> f)
    : scenario_(scenario), g_(std::move(g)), f_(std::move(f)) {
  if (g_.size() != scenario_.m()) {
    throw ConstructionError("g has " + std::to_string(g_.size()) +
                            " values, expected " + std::to_string(scenario_.m()));
  }
  if (f_.size() != scenario_.pairs()) {
    throw ConstructionError("f has " + std::to_string(f_.size()) +
                            " values, expected " +
                            std::to_string(scenario_.pairs()));
  }
  RequireBits(g_, "g");
  RequireBits(f_, "f");
}

bool OutputMaps::f_depends_on_x() const {
  for (std::size_t y = 0; y < scenario_.n(); ++y) {
    for (std::size_t x = 1; x < scenario_.m(); ++x) {
      if (f(x, y) != f(0, y)) return true;
    }
  }
  return false;
}

CorrelationTable::CorrelationTable(Scenario scenario, std::vector<Rational> entries)
    : scenario_(scenario), entries_(std::move(entries)) {
  if (entries_.size() != scenario_.pairs() * 4) {
    throw ConstructionError("table has " + std::to_string(entries_.size()) +
                            " entries, expected " +
                            std::to_string(scenario_.pairs() * 4));
  }
  for (std::size_t cell = 0; cell < scenario_.pairs(); ++cell) {
    Rational total = 0;
    for (std::size_t k = 0; k < 4; ++k) {
      const Rational& v = entries_[cell * 4 + k];
      if (v < 0) throw ConstructionError("negative probability in table");
      total += v;
    }
    if (total != 1) {
      throw ConstructionError(
          "outcomes at (x,y)=(" + std::to_string(cell / scenario_.n()) + "," +
          std::to_string(cell % scenario_.n()) + ") sum to " + ToString(total));
    }
  }
}

std::array<Rational, 4> CorrelationTable::block(std::size_t x, std::size_t y) const {
  const std::size_t base = (x * scenario_.n() + y) * 4;
  return {entries_[base], entries_[base + 1], entries_[base + 2], entries_[base + 3]};
}

Rational CorrelationTable::alice_marginal(Bit a, std::size_t x, std::size_t y) const {
  return at(a, 0, x, y) + at(a, 1, x, y);
}

Rational CorrelationTable::bob_marginal(Bit b, std::size_t x, std::size_t y) const {
  return at(0, b, x, y) + at(1, b, x, y);
}

CorrelationTable EvaluateOtp(const OtpBoxSpec& spec) {
  const Scenario& s = spec.scenario();
  const OutputMaps& maps = spec.maps();
  std::vector<Rational> entries = ZeroEntries(s);
  for (std::size_t x = 0; x < s.m(); ++x) {
    for (std::size_t y = 0; y < s.n(); ++y) {
      for (Bit lambda = 0; lambda < 2; ++lambda) {
        const Bit a = maps.g(x) ^ lambda;
        const Bit b = maps.f(x, y) ^ lambda;
        entries[((x * s.n() + y) * 2 + a) * 2 + b] += spec.key().p(lambda);
      }
    }
  }
  return CorrelationTable(s, std::move(entries));
}

CorrelationTable EvaluateNotp(const NOtpBoxSpec& spec) {
  const Scenario& s = spec.scenario();
  const OutputMaps& maps = spec.maps();
  std::vector<Rational> entries = ZeroEntries(s);
  for (std::size_t x = 0; x < s.m(); ++x) {
    for (std::size_t y = 0; y < s.n(); ++y) {
      for (Bit l1 = 0; l1 < 2; ++l1) {
        for (Bit l2 = 0; l2 < 2; ++l2) {
          const Bit a = maps.g(x) ^ l1;
          const Bit b = maps.f(x, y) ^ l2;
          entries[((x * s.n() + y) * 2 + a) * 2 + b] += spec.keys().p(l1, l2);
        }
      }
    }
  }
  return CorrelationTable(s, std::move(entries));
}

CorrelationTable PrBox() {
  return HalfParityBox([](std::size_t x, std::size_t y) { return Bit(x & y); });
}

CorrelationTable AntiPrBox() {
  return HalfParityBox([](std::size_t x, std::size_t y) { return Bit((x & y) ^ 1); });
}

CorrelationTable Isotropic(const Rational& q) {
  RequireUnitInterval(q, "q");
  return Mix(q, PrBox(), AntiPrBox());
}

CorrelationTable NoisyOnticBox(const Rational& mu) {
  RequireUnitInterval(mu, "mu");
  Scenario s(2, 2);
  std::vector<Rational> entries = ZeroEntries(s);
  // The hidden-level channel delivers x intact with probability mu.
  const std::array<std::pair<Bit, Rational>, 2> channel = {
      std::pair<Bit, Rational>{0, mu}, std::pair<Bit, Rational>{1, 1 - mu}};
  for (std::size_t x = 0; x < 2; ++x) {
    for (std::size_t y = 0; y < 2; ++y) {
      for (const auto& [flip, weight] : channel) {
        const Bit received = static_cast<Bit>(x) ^ flip;
        for (Bit lambda = 0; lambda < 2; ++lambda) {
          const Bit a = lambda;
          const Bit b = (received & static_cast<Bit>(y)) ^ lambda;
          entries[((x * 2 + y) * 2 + a) * 2 + b] += weight / 2;
        }
      }
    }
  }
  return CorrelationTable(s, std::move(entries));
}

CorrelationTable LocalDeterministic(const std::vector<Bit>& alice,
                                    const std::vector<Bit>& bob) {
  if (alice.empty() || bob.empty()) {
    throw ConstructionError("strategies must cover at least one input");
  }
  RequireBits(alice, "alice");
  RequireBits(bob, "bob");
  Scenario s(alice.size(), bob.size());
  std::vector<Rational> entries = ZeroEntries(s);
  for (std::size_t x = 0; x < s.m(); ++x) {
    for (std::size_t y = 0; y < s.n(); ++y) {
      entries[((x * s.n() + y) * 2 + alice[x]) * 2 + bob[y]] = 1;
    }
  }
  return CorrelationTable(s, std::move(entries));
}

CorrelationTable Mix(const Rational& weight, const CorrelationTable& first,
                     const CorrelationTable& second) {
  RequireUnitInterval(weight, "weight");
  if (!(first.scenario() == second.scenario())) {
    throw DomainError("cannot mix tables over different scenarios");
  }
  std::vector<Rational> entries(first.entries().size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    entries[i] = weight * first.entries()[i] + (1 - weight) * second.entries()[i];
  }
  return CorrelationTable(first.scenario(), std::move(entries));
}

std::pair<Bit, Bit> SampleOutcome(const CorrelationTable& table, std::size_t x,
                                  std::size_t y, SeedState& rng) {
  if (x >= table.scenario().m() || y >= table.scenario().n()) {
    throw DomainError("input (" + std::to_string(x) + "," + std::to_string(y) +
                      ") out of range");
  }
  const std::array<Rational, 4> block = table.block(x, y);
  const std::size_t k = rng.Categorical(block);
  return {static_cast<Bit>(k >> 1), static_cast<Bit>(k & 1)};
}

}  // namespace otplab
