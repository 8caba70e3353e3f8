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

#include "otplab/protocols.h"

#include <cctype>

#include "otplab/errors.h"

namespace otplab {
namespace {

void RequireSameLength(const BitString& a, const BitString& b) {
  if (a.size() != b.size()) {
    throw DomainError("bit strings differ in length (" + std::to_string(a.size()) +
                      " vs " + std::to_string(b.size()) + ")");
  }
}

int HexValue(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

template <typename Fn>
DistributedFunction Tabulate(std::size_t m, std::size_t n, Fn fn) {
  if (m + n > DistributedFunction::kMaxInputBits) {
    throw ResourceError("truth table over " + std::to_string(m + n) +
                        " input bits is too large");
  }
  std::vector<Bit> table(std::size_t{1} << (m + n));
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << m); ++x) {
    for (std::uint64_t y = 0; y < (std::uint64_t{1} << n); ++y) {
      table[(x << n) | y] = fn(x, y);
    }
  }
  return DistributedFunction(m, n, std::move(table));
}

// Outputs of the OTP-simulation wiring for fixed PR keys.
std::pair<Bit, Bit> SimulationOutputs(const OutputMaps& maps, std::size_t x,
                                      std::size_t y, const std::vector<Bit>& keys) {
  Bit alice = maps.g(x);
  Bit bob = 0;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    const Bit alice_in = maps.f(x, i);
    const Bit bob_in = i == y ? 1 : 0;
    alice ^= keys[i];
    bob ^= (alice_in & bob_in) ^ keys[i];
  }
  return {alice, bob};
}

}  // namespace

BitString::BitString(std::vector<Bit> bits) : bits_(std::move(bits)) {
  for (Bit b : bits_) {
    if (b > 1) throw ConstructionError("bit string value is not a bit");
  }
}

BitString BitString::Parse(std::string_view text) {
  std::vector<Bit> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw ParseError("bit string '" + std::string(text) + "' has non-binary characters");
    }
    bits.push_back(static_cast<Bit>(c - '0'));
  }
  return BitString(std::move(bits));
}

BitString BitString::FromIndex(std::uint64_t value, std::size_t width) {
  if (width < 64 && (value >> width) != 0) {
    throw DomainError(std::to_string(value) + " does not fit in " +
                      std::to_string(width) + " bits");
  }
  std::vector<Bit> bits(width);
  for (std::size_t i = 0; i < width; ++i) {
    bits[width - 1 - i] = static_cast<Bit>((value >> i) & 1);
  }
  return BitString(std::move(bits));
}

std::uint64_t BitString::ToIndex() const {
  if (bits_.size() > 64) throw DomainError("bit string longer than 64 bits");
  std::uint64_t value = 0;
  for (Bit b : bits_) value = (value << 1) | b;
  return value;
}

std::string BitString::ToString() const {
  std::string out;
  out.reserve(bits_.size());
  for (Bit b : bits_) out.push_back(static_cast<char>('0' + b));
  return out;
}

BitString BitString::operator^(const BitString& other) const {
  RequireSameLength(*this, other);
  std::vector<Bit> out(bits_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = bits_[i] ^ other.bits_[i];
  return BitString(std::move(out));
}

BitString OtpEncrypt(const BitString& message, const BitString& key) {
  return message ^ key;
}

BitString OtpDecrypt(const BitString& ciphertext, const BitString& key) {
  return ciphertext ^ key;
}

bool XorHomomorphismCheck(const BitString& m1, const BitString& m2,
                          const BitString& k1, const BitString& k2) {
  RequireSameLength(m1, m2);
  RequireSameLength(m1, k1);
  RequireSameLength(m1, k2);
  const BitString combined = OtpEncrypt(m1, k1) ^ OtpEncrypt(m2, k2);
  return OtpDecrypt(combined, k1 ^ k2) == (m1 ^ m2);
}

DistributedFunction::DistributedFunction(std::size_t m, std::size_t n,
                                         std::vector<Bit> table)
    : m_(m), n_(n), table_(std::move(table)) {
  if (m + n > kMaxInputBits) {
    throw ResourceError("truth table over " + std::to_string(m + n) +
                        " input bits is too large");
  }
  const std::size_t expected = std::size_t{1} << (m + n);
  if (table_.size() != expected) {
    throw ConstructionError("truth table has " + std::to_string(table_.size()) +
                            " entries, expected " + std::to_string(expected));
  }
  for (Bit b : table_) {
    if (b > 1) throw ConstructionError("truth table value is not a bit");
  }
}

DistributedFunction DistributedFunction::And() {
  return Tabulate(1, 1, [](std::uint64_t x, std::uint64_t y) { return Bit(x & y); });
}

DistributedFunction DistributedFunction::InnerProduct(std::size_t k) {
  return Tabulate(k, k, [](std::uint64_t x, std::uint64_t y) {
    return static_cast<Bit>(__builtin_popcountll(x & y) & 1);
  });
}

DistributedFunction DistributedFunction::Random(std::size_t m, std::size_t n,
                                                std::uint64_t seed) {
  SeedState rng(seed);
  return Tabulate(m, n, [&rng](std::uint64_t, std::uint64_t) { return rng.NextBit(); });
}

DistributedFunction DistributedFunction::Projection(std::size_t m, std::size_t n) {
  if (m == 0) throw ConstructionError("projection needs m >= 1");
  return Tabulate(m, n, [m](std::uint64_t x, std::uint64_t) {
    return static_cast<Bit>((x >> (m - 1)) & 1);
  });
}

DistributedFunction DistributedFunction::Constant(std::size_t m, std::size_t n, Bit value) {
  if (value > 1) throw ConstructionError("constant is not a bit");
  return Tabulate(m, n, [value](std::uint64_t, std::uint64_t) { return value; });
}

DistributedFunction DistributedFunction::Named(const std::string& name, std::size_t m,
                                               std::size_t n) {
  if (name == "AND") return And();
  if (name == "PROJ") return Projection(m, n);
  if (name == "ZERO") return Constant(m, n, 0);
  if (name == "ONE") return Constant(m, n, 1);
  if (name.rfind("IP", 0) == 0 && name.size() > 2) {
    const std::string digits = name.substr(2);
    for (char c : digits) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw ParseError("unknown function '" + name + "'");
      }
    }
    const unsigned long k = std::stoul(digits);
    if (k == 0) throw ParseError("IP needs at least one bit");
    if (2 * k > kMaxInputBits) throw ResourceError("inner product too large");
    return InnerProduct(k);
  }
  if (name.rfind("RANDOM:", 0) == 0) {
    const std::string digits = name.substr(7);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError("RANDOM needs a decimal seed, got '" + name + "'");
    }
    return Random(m, n, std::stoull(digits));
  }
  throw ParseError("unknown function '" + name + "'");
}

DistributedFunction DistributedFunction::FromHex(std::string_view text) {
  std::size_t pos = 0;
  auto next_token = [&]() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    const std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    return text.substr(start, pos - start);
  };
  auto parse_count = [](std::string_view token) -> std::size_t {
    if (token.empty() || token.find_first_not_of("0123456789") != std::string_view::npos ||
        token.size() > 3) {
      throw ParseError("bad header field '" + std::string(token) + "'");
    }
    return std::stoul(std::string(token));
  };
  const std::size_t m = parse_count(next_token());
  const std::size_t n = parse_count(next_token());
  if (m + n > kMaxInputBits) throw ResourceError("truth table too large");
  const std::size_t entries = std::size_t{1} << (m + n);
  std::vector<Bit> table;
  table.reserve(entries);
  std::size_t digits = 0;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    const int v = HexValue(c);
    if (v < 0) throw ParseError(std::string("invalid hex digit '") + c + "'");
    ++digits;
    for (int bit = 3; bit >= 0; --bit) {
      const Bit b = static_cast<Bit>((v >> bit) & 1);
      if (table.size() < entries) {
        table.push_back(b);
      } else if (b != 0) {
        throw ParseError("nonzero padding bits in truth table");
      }
    }
  }
  if (digits != (entries + 3) / 4) {
    throw ParseError("expected " + std::to_string((entries + 3) / 4) +
                     " hex digits, got " + std::to_string(digits));
  }
  return DistributedFunction(m, n, std::move(table));
}

std::string DistributedFunction::ToHex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out = std::to_string(m_) + " " + std::to_string(n_) + "\n";
  for (std::size_t i = 0; i < table_.size(); i += 4) {
    int v = 0;
    for (std::size_t k = 0; k < 4; ++k) {
      v <<= 1;
      if (i + k < table_.size()) v |= table_[i + k];
    }
    out.push_back(kDigits[v]);
  }
  out.push_back('\n');
  return out;
}

Bit DistributedFunction::operator()(const BitString& x, const BitString& y) const {
  if (x.size() != m_ || y.size() != n_) {
    throw DomainError("input lengths (" + std::to_string(x.size()) + "," +
                      std::to_string(y.size()) + ") do not match (m,n)=(" +
                      std::to_string(m_) + "," + std::to_string(n_) + ")");
  }
  return (*this)(x.ToIndex(), y.ToIndex());
}

PrBoxPool::PrBoxPool(std::size_t count) : states_(count) {}

PrBoxPool::Instance& PrBoxPool::At(std::size_t i) {
  if (i >= states_.size()) {
    throw DomainError("PR instance " + std::to_string(i) + " out of range");
  }
  return states_[i];
}

Bit PrBoxPool::AliceInput(std::size_t i, Bit x, SeedState& rng) {
  Instance& inst = At(i);
  if (inst.state != State::kFresh) {
    throw ProtocolError("PR instance " + std::to_string(i) + " reused by Alice");
  }
  inst.state = State::kAliceDone;
  inst.alice_input = x & 1;
  inst.key = rng.NextBit();
  return inst.key;
}

Bit PrBoxPool::BobInput(std::size_t i, Bit y) {
  Instance& inst = At(i);
  if (inst.state == State::kFresh) {
    throw ProtocolError("PR instance " + std::to_string(i) +
                        " queried by Bob before Alice");
  }
  if (inst.state == State::kConsumed) {
    throw ProtocolError("PR instance " + std::to_string(i) + " reused by Bob");
  }
  inst.state = State::kConsumed;
  return (inst.alice_input & (y & 1)) ^ inst.key;
}

const char* ChannelName(ChannelDirection d) {
  return d == ChannelDirection::kAliceToBob ? "alice_to_bob" : "bob_to_alice";
}

void ProtocolTranscript::RecordBox(const BoxEvent& event) {
  if (event.instance >= used_.size()) used_.resize(event.instance + 1, false);
  if (used_[event.instance]) {
    throw ProtocolError("PR instance " + std::to_string(event.instance) +
                        " appears twice in one transcript");
  }
  used_[event.instance] = true;
  box_events_.push_back(event);
}

void ProtocolTranscript::Send(ChannelDirection direction, Bit payload) {
  messages_.push_back({direction, static_cast<Bit>(payload & 1)});
  if (direction == ChannelDirection::kAliceToBob) {
    ++bits_alice_to_bob_;
  } else {
    ++bits_bob_to_alice_;
  }
}

ProtocolTranscript VanDamRun(const DistributedFunction& df, const BitString& x,
                             const BitString& y, SeedState& rng) {
  if (x.size() != df.m() || y.size() != df.n()) {
    throw DomainError("input lengths (" + std::to_string(x.size()) + "," +
                      std::to_string(y.size()) + ") do not match (m,n)=(" +
                      std::to_string(df.m()) + "," + std::to_string(df.n()) + ")");
  }
  const std::size_t pool_size = std::size_t{1} << df.n();
  const std::uint64_t x_index = x.ToIndex();
  const std::uint64_t y_dec = y.ToIndex();
  PrBoxPool pool(pool_size);
  std::vector<BoxEvent> events(pool_size);

  // Alice: one instance per candidate y_i, then a single parity bit.
  Bit key_parity = 0;
  for (std::size_t i = 0; i < pool_size; ++i) {
    const Bit input = df(x_index, i);
    const Bit out = pool.AliceInput(i, input, rng);
    events[i] = {i, input, out, 0, 0};
    key_parity ^= out;
  }
  ProtocolTranscript transcript;
  transcript.Send(ChannelDirection::kAliceToBob, key_parity);

  // Bob: select instance y_dec, XOR all ciphertexts, decrypt with the key.
  Bit cipher_parity = 0;
  for (std::size_t i = 0; i < pool_size; ++i) {
    const Bit input = i == y_dec ? 1 : 0;
    const Bit out = pool.BobInput(i, input);
    events[i].bob_input = input;
    events[i].bob_output = out;
    cipher_parity ^= out;
    transcript.RecordBox(events[i]);
  }
  transcript.SetResult(cipher_parity ^ transcript.messages().back().payload);
  return transcript;
}

VanDamReport VanDamExhaustive(const DistributedFunction& df, SeedState& rng,
                              const TranscriptObserver& observer) {
  if (df.m() + df.n() > kExhaustiveInputBitLimit) {
    throw ResourceError("exhaustive run over " + std::to_string(df.m() + df.n()) +
                        " input bits exceeds the limit of " +
                        std::to_string(kExhaustiveInputBitLimit));
  }
  VanDamReport report;
  report.pool_size = std::size_t{1} << df.n();
  for (std::uint64_t xi = 0; xi < (std::uint64_t{1} << df.m()); ++xi) {
    const BitString x = BitString::FromIndex(xi, df.m());
    for (std::uint64_t yi = 0; yi < (std::uint64_t{1} << df.n()); ++yi) {
      const BitString y = BitString::FromIndex(yi, df.n());
      const ProtocolTranscript t = VanDamRun(df, x, y, rng);
      ++report.runs;
      if (t.result() == df(xi, yi)) ++report.successes;
      report.max_bits_alice_to_bob =
          std::max(report.max_bits_alice_to_bob, t.bits_alice_to_bob());
      report.max_bits_bob_to_alice =
          std::max(report.max_bits_bob_to_alice, t.bits_bob_to_alice());
      if (observer) observer(x, y, t);
    }
  }
  return report;
}

OtpSimulation SimulateOtpViaPr(const OtpBoxSpec& spec, std::uint64_t trials,
                               SeedState& rng) {
  if (!spec.key().is_uniform()) {
    throw PreconditionError("PR simulation needs a uniform key; p0 = " +
                            ToString(spec.key().p0()));
  }
  const Scenario& s = spec.scenario();
  const OutputMaps& maps = spec.maps();
  const std::size_t pool_size = s.n();
  if (pool_size > 20) throw ResourceError("too many Bob inputs to enumerate keys");

  // Exact: average the wiring over all 2^n equally likely key vectors.
  std::vector<Rational> exact(s.pairs() * 4, Rational(0));
  const Rational weight(Integer(1), Integer(1) << pool_size);
  std::vector<Bit> keys(pool_size);
  for (std::size_t x = 0; x < s.m(); ++x) {
    for (std::size_t y = 0; y < s.n(); ++y) {
      for (std::uint64_t k = 0; k < (std::uint64_t{1} << pool_size); ++k) {
        for (std::size_t i = 0; i < pool_size; ++i) keys[i] = (k >> i) & 1;
        const auto [a, b] = SimulationOutputs(maps, x, y, keys);
        exact[((x * s.n() + y) * 2 + a) * 2 + b] += weight;
      }
    }
  }

  OtpSimulation sim{CorrelationTable(s, std::move(exact)), std::nullopt, {}, trials};
  if (trials == 0) return sim;

  // Empirical: fresh pool per trial, Alice then Bob.
  sim.counts.assign(s.pairs() * 4, 0);
  for (std::size_t x = 0; x < s.m(); ++x) {
    for (std::size_t y = 0; y < s.n(); ++y) {
      for (std::uint64_t t = 0; t < trials; ++t) {
        PrBoxPool pool(pool_size);
        Bit a = maps.g(x);
        for (std::size_t i = 0; i < pool_size; ++i) {
          a ^= pool.AliceInput(i, maps.f(x, i), rng);
        }
        Bit b = 0;
        for (std::size_t i = 0; i < pool_size; ++i) {
          b ^= pool.BobInput(i, i == y ? 1 : 0);
        }
        ++sim.counts[((x * s.n() + y) * 2 + a) * 2 + b];
      }
    }
  }
  std::vector<Rational> empirical(sim.counts.size());
  for (std::size_t i = 0; i < empirical.size(); ++i) {
    empirical[i] = Rational(Integer(sim.counts[i]), Integer(trials));
  }
  sim.empirical.emplace(s, std::move(empirical));
  return sim;
}

}  // namespace otplab
