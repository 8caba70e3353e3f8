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

#include "otplab/analysis.h"

#include <regex>

#include "otplab/errors.h"

namespace otplab {
namespace {

void RequireTwoByTwo(const CorrelationTable& table) {
  if (!(table.scenario() == Scenario(2, 2))) {
    throw DomainError("CHSH needs the 2,2-input scenario, got " +
                      std::to_string(table.scenario().m()) + "," +
                      std::to_string(table.scenario().n()));
  }
}

std::string Cell(std::size_t x, std::size_t y) {
  return "(x,y)=(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

}  // namespace

const char* DirectionName(SignalDirection d) {
  return d == SignalDirection::kAliceToBob ? "alice_to_bob" : "bob_to_alice";
}

NsReport NsCheck(const CorrelationTable& table) {
  const Scenario& s = table.scenario();
  NsReport report;
  for (std::size_t y = 0; y < s.n(); ++y) {
    for (Bit b = 0; b < 2; ++b) {
      for (std::size_t x1 = 0; x1 < s.m(); ++x1) {
        for (std::size_t x2 = x1 + 1; x2 < s.m(); ++x2) {
          Rational p1 = table.bob_marginal(b, x1, y);
          Rational p2 = table.bob_marginal(b, x2, y);
          if (p1 != p2) {
            report.alice_to_bob_ns = false;
            report.witnesses.push_back({SignalDirection::kAliceToBob, y, b, x1,
                                        x2, std::move(p1), std::move(p2)});
          }
        }
      }
    }
  }
  for (std::size_t x = 0; x < s.m(); ++x) {
    for (Bit a = 0; a < 2; ++a) {
      for (std::size_t y1 = 0; y1 < s.n(); ++y1) {
        for (std::size_t y2 = y1 + 1; y2 < s.n(); ++y2) {
          Rational p1 = table.alice_marginal(a, x, y1);
          Rational p2 = table.alice_marginal(a, x, y2);
          if (p1 != p2) {
            report.bob_to_alice_ns = false;
            report.witnesses.push_back({SignalDirection::kBobToAlice, x, a, y1,
                                        y2, std::move(p1), std::move(p2)});
          }
        }
      }
    }
  }
  return report;
}

OtpNsVerdict ClassifyOtpNs(const OtpBoxSpec& spec) {
  return {spec.maps().f_depends_on_x(),
          NsCheck(EvaluateOtp(spec)).no_signaling(),
          spec.key().is_uniform()};
}

std::string ChshVariant::name() const {
  std::string out = "chsh-neg-" + std::to_string(neg_x) + std::to_string(neg_y);
  return inverted ? out + "-inv" : out;
}

ChshVariant ChshVariant::Parse(const std::string& name) {
  static const std::regex kPattern("chsh-neg-([01])([01])(-inv)?");
  std::smatch match;
  if (!std::regex_match(name, match, kPattern)) {
    throw ParseError("unknown CHSH variant '" + name + "'");
  }
  return {static_cast<Bit>(match[1].str()[0] - '0'),
          static_cast<Bit>(match[2].str()[0] - '0'), match[3].matched};
}

std::array<ChshVariant, 8> ChshVariant::All() {
  std::array<ChshVariant, 8> all;
  std::size_t i = 0;
  for (bool inverted : {false, true}) {
    for (Bit x = 0; x < 2; ++x) {
      for (Bit y = 0; y < 2; ++y) all[i++] = {x, y, inverted};
    }
  }
  return all;
}

Rational Correlator(const CorrelationTable& table, std::size_t x, std::size_t y) {
  return table.at(0, 0, x, y) - table.at(0, 1, x, y) - table.at(1, 0, x, y) +
         table.at(1, 1, x, y);
}

Rational ChshValue(const CorrelationTable& table, const ChshVariant& variant) {
  RequireTwoByTwo(table);
  Rational s = 0;
  for (std::size_t x = 0; x < 2; ++x) {
    for (std::size_t y = 0; y < 2; ++y) {
      const bool negative = x == variant.neg_x && y == variant.neg_y;
      s += negative ? Rational(-Correlator(table, x, y)) : Correlator(table, x, y);
    }
  }
  return variant.inverted ? Rational(-s) : s;
}

LocalityVerdict Local2222(const CorrelationTable& table) {
  RequireTwoByTwo(table);
  if (!NsCheck(table).no_signaling()) {
    throw PreconditionError("locality test is only defined for no-signaling tables");
  }
  LocalityVerdict verdict{true, Rational(0), ChshVariant{}};
  bool first = true;
  for (const ChshVariant& v : ChshVariant::All()) {
    Rational s = abs(ChshValue(table, v));
    if (first || s > verdict.max_chsh) {
      verdict.max_chsh = std::move(s);
      verdict.argmax = v;
      first = false;
    }
  }
  verdict.is_local = verdict.max_chsh <= 2;
  return verdict;
}

VertexStructure::VertexStructure(Scenario scenario, std::vector<Bit> h)
    : scenario_(scenario), h_(std::move(h)) {
  if (h_.size() != scenario_.pairs()) {
    throw ConstructionError("h has " + std::to_string(h_.size()) +
                            " values, expected " + std::to_string(scenario_.pairs()));
  }
  for (Bit v : h_) {
    if (v > 1) throw ConstructionError("h value is not a bit");
  }
}

const char* RejectionReason(VertexRejection r) {
  switch (r) {
    case VertexRejection::kNone:
      return "accepted";
    case VertexRejection::kEntriesNotZeroOrHalf:
      return "entries not in {0,1/2}";
    case VertexRejection::kMixedParity:
      return "support does not have a fixed parity";
    case VertexRejection::kMarginalNotHalf:
      return "marginal not 1/2";
  }
  return "unknown";
}

VertexVerdict FullOutputVertexStructure(const CorrelationTable& table) {
  const Scenario& s = table.scenario();
  VertexVerdict verdict;
  for (std::size_t x = 0; x < s.m(); ++x) {
    for (std::size_t y = 0; y < s.n(); ++y) {
      for (const Rational& v : table.block(x, y)) {
        if (v != 0 && v != Half()) {
          verdict.rejection = VertexRejection::kEntriesNotZeroOrHalf;
          verdict.detail = "entry " + ToString(v) + " at " + Cell(x, y);
          return verdict;
        }
      }
    }
  }
  std::vector<Bit> h(s.pairs());
  for (std::size_t x = 0; x < s.m(); ++x) {
    for (std::size_t y = 0; y < s.n(); ++y) {
      // Normalization leaves exactly two half-weight outcomes per cell.
      const bool even = table.at(0, 0, x, y) == Half() && table.at(1, 1, x, y) == Half();
      const bool odd = table.at(0, 1, x, y) == Half() && table.at(1, 0, x, y) == Half();
      if (!even && !odd) {
        verdict.rejection = VertexRejection::kMixedParity;
        verdict.detail = "support at " + Cell(x, y) + " mixes a^b=0 and a^b=1";
        return verdict;
      }
      h[x * s.n() + y] = odd ? 1 : 0;
    }
  }
  for (std::size_t x = 0; x < s.m(); ++x) {
    for (std::size_t y = 0; y < s.n(); ++y) {
      if (table.alice_marginal(0, x, y) != Half() ||
          table.bob_marginal(0, x, y) != Half()) {
        verdict.rejection = VertexRejection::kMarginalNotHalf;
        verdict.detail = "marginal at " + Cell(x, y);
        return verdict;
      }
    }
  }
  verdict.structure.emplace(s, std::move(h));
  return verdict;
}

OtpBoxSpec OtpModelFromVertex(const VertexStructure& vs) {
  return OtpBoxSpec(OutputMaps(vs.scenario(), std::vector<Bit>(vs.scenario().m(), 0),
                               vs.values()),
                    KeyDist::Uniform());
}

NOtpBoxSpec NotpModelFromIsotropic(const Rational& q) {
  JointKeyDist keys = JointKeyDist::Correlated(q);
  return NOtpBoxSpec(OutputMaps(Scenario(2, 2), {0, 0}, {0, 0, 0, 1}), std::move(keys));
}

}  // namespace otplab
