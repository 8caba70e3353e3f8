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

// Two-party protocols over pools of PR boxes with classical-channel bit
// accounting.
//
// PR instances are realized at the hidden-variable level: when Alice feeds
// instance i, a fresh key lambda_i is drawn and she receives a_i = lambda_i;
// Bob's later query with input y_i returns b_i = (x_i & y_i) ^ lambda_i.
// Alice must act first on every instance, and every instance is used once.

#ifndef OTPLAB_PROTOCOLS_H_
#define OTPLAB_PROTOCOLS_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "otplab/boxes.h"
#include "otplab/rng.h"

namespace otplab {

// Fixed-length bit string, leftmost bit first.
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::vector<Bit> bits);

  // Parses a string of '0'/'1' characters. Throws ParseError otherwise.
  static BitString Parse(std::string_view text);
  // Big-endian binary expansion of value over width bits.
  static BitString FromIndex(std::uint64_t value, std::size_t width);
  static BitString Zeros(std::size_t width) { return BitString(std::vector<Bit>(width, 0)); }

  std::size_t size() const { return bits_.size(); }
  Bit operator[](std::size_t i) const { return bits_[i]; }
  const std::vector<Bit>& bits() const { return bits_; }

  // Big-endian value; the leftmost bit is most significant.
  std::uint64_t ToIndex() const;
  std::string ToString() const;

  // Throws DomainError on length mismatch.
  BitString operator^(const BitString& other) const;

  friend bool operator==(const BitString&, const BitString&) = default;

 private:
  std::vector<Bit> bits_;
};

BitString OtpEncrypt(const BitString& message, const BitString& key);
BitString OtpDecrypt(const BitString& ciphertext, const BitString& key);

// decrypt(encrypt(m1, k1) ^ encrypt(m2, k2), k1 ^ k2) == m1 ^ m2.
bool XorHomomorphismCheck(const BitString& m1, const BitString& m2,
                          const BitString& k1, const BitString& k2);

// Boolean function of Alice's m-bit string and Bob's n-bit string. The
// truth table is row-major: entry (x, y) sits at x.ToIndex() * 2^n +
// y.ToIndex().
class DistributedFunction {
 public:
  static constexpr std::size_t kMaxInputBits = 26;

  // Throws ConstructionError on a table size other than 2^(m+n) or non-bit
  // values, ResourceError if m + n > kMaxInputBits.
  DistributedFunction(std::size_t m, std::size_t n, std::vector<Bit> table);

  static DistributedFunction And();
  // IP_k(x, y) = XOR_i x_i y_i with m = n = k.
  static DistributedFunction InnerProduct(std::size_t k);
  static DistributedFunction Random(std::size_t m, std::size_t n, std::uint64_t seed);
  // f(x, y) = x_1, the leftmost bit of Alice's string.
  static DistributedFunction Projection(std::size_t m, std::size_t n);
  static DistributedFunction Constant(std::size_t m, std::size_t n, Bit value);

  // "AND", "IP<k>", "RANDOM:<seed>" (uses m and n), "PROJ", "ZERO", "ONE".
  static DistributedFunction Named(const std::string& name, std::size_t m, std::size_t n);

  // Text format: a header line "m n" followed by the truth table as hex
  // digits. Bit i of the table is bit (3 - i % 4) of hex digit i / 4, so
  // the first table entry is the most significant bit of the first digit.
  // Whitespace between digits is ignored; unused padding bits must be 0.
  static DistributedFunction FromHex(std::string_view text);
  std::string ToHex() const;

  std::size_t m() const { return m_; }
  std::size_t n() const { return n_; }
  const std::vector<Bit>& table() const { return table_; }

  Bit operator()(std::uint64_t x_index, std::uint64_t y_index) const {
    return table_[(x_index << n_) | y_index];
  }
  Bit operator()(const BitString& x, const BitString& y) const;

  friend bool operator==(const DistributedFunction&, const DistributedFunction&) = default;

 private:
  std::size_t m_;
  std::size_t n_;
  std::vector<Bit> table_;
};

// Pool of single-use PR boxes.
class PrBoxPool {
 public:
  explicit PrBoxPool(std::size_t count);

  std::size_t count() const { return states_.size(); }

  // Draws lambda_i and returns Alice's output. Throws ProtocolError if the
  // instance was already fed by Alice, DomainError if i is out of range.
  Bit AliceInput(std::size_t i, Bit x, SeedState& rng);
  // Returns Bob's output. Throws ProtocolError unless Alice has fed the
  // instance and Bob has not.
  Bit BobInput(std::size_t i, Bit y);

 private:
  enum class State : std::uint8_t { kFresh, kAliceDone, kConsumed };

  struct Instance {
    State state = State::kFresh;
    Bit alice_input = 0;
    Bit key = 0;
  };

  Instance& At(std::size_t i);

  std::vector<Instance> states_;
};

enum class ChannelDirection { kAliceToBob, kBobToAlice };

const char* ChannelName(ChannelDirection d);

struct BoxEvent {
  std::size_t instance;
  Bit alice_input;
  Bit alice_output;
  Bit bob_input;
  Bit bob_output;
};

struct ChannelMessage {
  ChannelDirection direction;
  Bit payload;
};

class ProtocolTranscript {
 public:
  // Throws ProtocolError if the instance already appears in the transcript.
  void RecordBox(const BoxEvent& event);
  void Send(ChannelDirection direction, Bit payload);
  void SetResult(Bit result) { result_ = result; }

  const std::vector<BoxEvent>& box_events() const { return box_events_; }
  const std::vector<ChannelMessage>& messages() const { return messages_; }
  std::size_t bits_alice_to_bob() const { return bits_alice_to_bob_; }
  std::size_t bits_bob_to_alice() const { return bits_bob_to_alice_; }
  Bit result() const { return result_; }

 private:
  std::vector<BoxEvent> box_events_;
  std::vector<ChannelMessage> messages_;
  std::vector<bool> used_;
  std::size_t bits_alice_to_bob_ = 0;
  std::size_t bits_bob_to_alice_ = 0;
  Bit result_ = 0;
};

// One-bit computation of df(x, y) with 2^n PR boxes. Alice feeds
// df(x, y_i) into instance i and sends c = XOR_i a_i; Bob feeds 1 into
// instance y.ToIndex() and 0 elsewhere and outputs XOR_i b_i ^ c.
// Throws DomainError on |x| != m or |y| != n.
ProtocolTranscript VanDamRun(const DistributedFunction& df, const BitString& x,
                             const BitString& y, SeedState& rng);

struct VanDamReport {
  std::uint64_t runs = 0;
  std::uint64_t successes = 0;
  std::size_t max_bits_alice_to_bob = 0;
  std::size_t max_bits_bob_to_alice = 0;
  std::size_t pool_size = 0;
};

inline constexpr std::size_t kExhaustiveInputBitLimit = 20;

using TranscriptObserver =
    std::function<void(const BitString& x, const BitString& y, const ProtocolTranscript&)>;

// Runs every (x, y). Throws ResourceError if m + n exceeds
// kExhaustiveInputBitLimit.
VanDamReport VanDamExhaustive(const DistributedFunction& df, SeedState& rng,
                              const TranscriptObserver& observer = {});

struct OtpSimulation {
  CorrelationTable exact;                  // induced by the wiring, exactly
  std::optional<CorrelationTable> empirical;  // counts / trials
  std::vector<std::uint64_t> counts;       // same layout as table entries
  std::uint64_t trials_per_cell = 0;
};

// Simulates an OTP box with a pool of n PR boxes and no communication:
// Alice feeds f(x, y_i) into instance i and outputs g(x) ^ XOR_i a_i; Bob
// feeds [i == y] into instance i and outputs XOR_i b_i. Throws
// PreconditionError unless the key is uniform.
OtpSimulation SimulateOtpViaPr(const OtpBoxSpec& spec, std::uint64_t trials,
                               SeedState& rng);

}  // namespace otplab

#endif  // OTPLAB_PROTOCOLS_H_
