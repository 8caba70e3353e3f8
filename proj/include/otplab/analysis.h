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

#ifndef OTPLAB_ANALYSIS_H_
#define OTPLAB_ANALYSIS_H_

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "otplab/boxes.h"

namespace otplab {

enum class SignalDirection {
  kAliceToBob,  // Bob's marginal moves with Alice's input
  kBobToAlice,  // Alice's marginal moves with Bob's input
};

const char* DirectionName(SignalDirection d);

// One pair of remote inputs that produce different marginals for the
// receiving party at a fixed local input and output.
struct NsWitness {
  SignalDirection direction;
  std::size_t local_input;   // y for kAliceToBob, x for kBobToAlice
  Bit output;                // b for kAliceToBob, a for kBobToAlice
  std::size_t remote_input_1;
  std::size_t remote_input_2;
  Rational marginal_1;
  Rational marginal_2;
};

struct NsReport {
  bool alice_to_bob_ns = true;
  bool bob_to_alice_ns = true;
  std::vector<NsWitness> witnesses;

  bool no_signaling() const { return alice_to_bob_ns && bob_to_alice_ns; }
};

// Exact marginal comparison over every pair of remote inputs.
NsReport NsCheck(const CorrelationTable& table);

// No-signaling verdict of an OTP spec next to the two properties that
// decide it: ns holds iff f ignores x or the key is uniform.
struct OtpNsVerdict {
  bool f_depends_on_x;
  bool ns;
  bool key_uniform;
};

OtpNsVerdict ClassifyOtpNs(const OtpBoxSpec& spec);

// CHSH functional S = sum_{x,y} s(x,y) E(x,y) where s has exactly one -1 at
// (neg_x, neg_y). The inverted variant multiplies S by -1; together the 8
// variants are the complete CHSH family of the 2,2 scenario.
struct ChshVariant {
  Bit neg_x = 1;
  Bit neg_y = 1;
  bool inverted = false;

  // "chsh-neg-11", or "chsh-neg-11-inv" for the inverted form.
  std::string name() const;
  static ChshVariant Parse(const std::string& name);
  static std::array<ChshVariant, 8> All();

  friend bool operator==(const ChshVariant&, const ChshVariant&) = default;
};

// E(x, y) = sum_{a,b} (-1)^(a ^ b) P(a, b | x, y).
Rational Correlator(const CorrelationTable& table, std::size_t x, std::size_t y);

// Throws DomainError unless the table is on the 2,2 scenario.
Rational ChshValue(const CorrelationTable& table, const ChshVariant& variant = {});

struct LocalityVerdict {
  bool is_local;
  Rational max_chsh;  // largest |S| over the family
  ChshVariant argmax;
};

// Complete locality test for NS tables on the 2,2 scenario. Throws
// DomainError on other scenarios and PreconditionError for signaling tables.
LocalityVerdict Local2222(const CorrelationTable& table);

// h(x, y) = a ^ b on the support of a full-output vertex.
class VertexStructure {
 public:
  // Throws ConstructionError if h is not a total bit map over m * n pairs.
  VertexStructure(Scenario scenario, std::vector<Bit> h);

  const Scenario& scenario() const { return scenario_; }
  Bit h(std::size_t x, std::size_t y) const { return h_[x * scenario_.n() + y]; }
  const std::vector<Bit>& values() const { return h_; }

  friend bool operator==(const VertexStructure&, const VertexStructure&) = default;

 private:
  Scenario scenario_;
  std::vector<Bit> h_;
};

enum class VertexRejection {
  kNone,
  kEntriesNotZeroOrHalf,
  kMixedParity,
  kMarginalNotHalf,
};

const char* RejectionReason(VertexRejection r);

struct VertexVerdict {
  std::optional<VertexStructure> structure;  // set iff accepted
  VertexRejection rejection = VertexRejection::kNone;
  std::string detail;  // where the first violated condition was found

  bool accepted() const { return structure.has_value(); }
};

// Checks, in order: all entries in {0, 1/2}; within each (x, y) the two
// half-weight outcomes share a parity a ^ b; all single-party marginals
// equal 1/2.
VertexVerdict FullOutputVertexStructure(const CorrelationTable& table);

// g = 0, f = h, uniform key.
OtpBoxSpec OtpModelFromVertex(const VertexStructure& vs);

// g = 0, f = xy, keys JointKeyDist::Correlated(q). Throws DomainError unless
// 0 <= q <= 1.
NOtpBoxSpec NotpModelFromIsotropic(const Rational& q);

}  // namespace otplab

#endif  // OTPLAB_ANALYSIS_H_
