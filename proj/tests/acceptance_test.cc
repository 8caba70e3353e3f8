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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "otplab/analysis.h"
#include "otplab/boxes.h"
#include "otplab/infotheory.h"
#include "otplab/protocols.h"
#include "otplab/serialization.h"
#include "test_util.h"

namespace otplab {
namespace {

using ::otplab::testing::Gen;

// Collects the first failure message of a criterion.
class Check {
 public:
  void Expect(bool ok, const std::string& what) {
    if (!ok && failure_.empty()) failure_ = what;
  }
  void Note(std::string note) { note_ = std::move(note); }
  bool ok() const { return failure_.empty(); }
  const std::string& note() const { return note_; }
  const std::string& failure() const { return failure_; }

 private:
  std::string failure_;
  std::string note_;
};

std::vector<Bit> TableBits(const CorrelationTable& t) {
  std::vector<Bit> out;
  for (const Rational& v : t.entries()) out.push_back(v == 0 ? 0 : 1);
  return out;
}

void UniformKeySuite(Check& c) {
  Gen gen(101);
  for (int trial = 0; trial < 500; ++trial) {
    const Scenario s(gen.Size(2, 4), gen.Size(1, 4));
    // Half of the keys are exactly uniform so both branches are exercised.
    const Rational p0 = trial % 2 == 0 ? Half() : gen.NonUniformProbability();
    const OtpBoxSpec spec(OutputMaps(s, gen.Bits(s.m()), gen.FDependingOnX(s)), KeyDist(p0));
    const bool ns = NsCheck(EvaluateOtp(spec)).no_signaling();
    c.Expect(ns == (p0 == Half()), "dependent f, key " + ToString(p0));
  }
  for (int trial = 0; trial < 200; ++trial) {
    const Scenario s = gen.RandomScenario();
    const OtpBoxSpec spec(OutputMaps(s, gen.Bits(s.m()), gen.FConstantInX(s)),
                          KeyDist(gen.Probability()));
    c.Expect(NsCheck(EvaluateOtp(spec)).no_signaling(), "constant-in-x f signals");
  }
}

void MarginalFormula(Check& c) {
  Gen gen(102);
  for (int trial = 0; trial < 100; ++trial) {
    const Scenario s = gen.RandomScenario();
    const Rational p0 = gen.Probability();
    const OtpBoxSpec spec(OutputMaps(s, gen.Bits(s.m()), gen.Bits(s.pairs())), KeyDist(p0));
    const CorrelationTable t = EvaluateOtp(spec);
    for (std::size_t x = 0; x < s.m(); ++x) {
      for (std::size_t y = 0; y < s.n(); ++y) {
        c.Expect(t.bob_marginal(1, x, y) ==
                     testing::BobMarginalClosedForm(spec.maps().f(x, y), p0),
                 "marginal mismatch at p0 " + ToString(p0));
      }
    }
  }
}

void VertexRoundTrip(Check& c) {
  Gen gen(103);
  for (int trial = 0; trial < 200; ++trial) {
    const Scenario s = gen.RandomScenario();
    const VertexStructure vs(s, gen.Bits(s.pairs()));
    // Table written directly from h: 1/2 where a ^ b = h(x, y).
    std::vector<Rational> entries(s.pairs() * 4);
    for (std::size_t x = 0; x < s.m(); ++x) {
      for (std::size_t y = 0; y < s.n(); ++y) {
        for (Bit a = 0; a < 2; ++a) {
          for (Bit b = 0; b < 2; ++b) {
            entries[((x * s.n() + y) * 2 + a) * 2 + b] =
                (a ^ b) == vs.h(x, y) ? Half() : Rational(0);
          }
        }
      }
    }
    const CorrelationTable t(s, std::move(entries));
    const VertexVerdict v = FullOutputVertexStructure(t);
    c.Expect(v.accepted() && *v.structure == vs, "structure not recovered");
    if (v.accepted()) {
      c.Expect(EvaluateOtp(OtpModelFromVertex(*v.structure)) == t, "round trip differs");
    }
  }
  const VertexVerdict pr = FullOutputVertexStructure(PrBox());
  c.Expect(pr.accepted() && pr.structure->values() == std::vector<Bit>{0, 0, 0, 1},
           "PR does not give h = xy");
}

void IsotropicModel(Check& c) {
  for (int k = 0; k <= 100; ++k) {
    const Rational q(k, 100);
    // Independent isotropic entries: q/2 on a ^ b = xy, (1 - q)/2 elsewhere.
    std::vector<Rational> entries(16);
    for (std::size_t x = 0; x < 2; ++x) {
      for (std::size_t y = 0; y < 2; ++y) {
        for (Bit a = 0; a < 2; ++a) {
          for (Bit b = 0; b < 2; ++b) {
            entries[((x * 2 + y) * 2 + a) * 2 + b] =
                (a ^ b) == (x & y) ? Rational(q / 2) : Rational((1 - q) / 2);
          }
        }
      }
    }
    const CorrelationTable expected(Scenario(2, 2), std::move(entries));
    c.Expect(EvaluateNotp(NotpModelFromIsotropic(q)) == expected, "q = " + ToString(q));
    c.Expect(Isotropic(q) == expected, "isotropic(" + ToString(q) + ")");
  }
}

void ChshSuite(Check& c) {
  c.Expect(ChshValue(PrBox()) == 4, "PR");
  c.Expect(ChshValue(AntiPrBox()) == -4, "anti-PR");
  for (int k = 0; k <= 100; ++k) {
    const Rational q(k, 100);
    c.Expect(ChshValue(Isotropic(q)) == 4 * (2 * q - 1), "isotropic " + ToString(q));
  }
  for (int bits = 0; bits < 16; ++bits) {
    const CorrelationTable t =
        LocalDeterministic({static_cast<Bit>(bits & 1), static_cast<Bit>((bits >> 1) & 1)},
                           {static_cast<Bit>((bits >> 2) & 1), static_cast<Bit>((bits >> 3) & 1)});
    Rational best = 0;
    for (const ChshVariant& v : ChshVariant::All()) best = std::max(best, Rational(abs(ChshValue(t, v))));
    c.Expect(best == 2, "deterministic box " + std::to_string(bits));
  }
}

void VanDamSuite(Check& c) {
  std::vector<std::pair<std::string, DistributedFunction>> fns = {
      {"AND", DistributedFunction::And()},
      {"IP2", DistributedFunction::InnerProduct(2)},
      {"IP3", DistributedFunction::InnerProduct(3)}};
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    fns.emplace_back("RANDOM:" + std::to_string(seed), DistributedFunction::Random(3, 3, seed));
  }
  SeedState rng(104);
  for (const auto& [name, f] : fns) {
    bool transcripts_ok = true;
    const VanDamReport r = VanDamExhaustive(
        f, rng, [&](const BitString&, const BitString&, const ProtocolTranscript& t) {
          transcripts_ok &= t.bits_alice_to_bob() == 1 && t.bits_bob_to_alice() == 0 &&
                            t.box_events().size() == (std::size_t{1} << f.n());
        });
    c.Expect(r.successes == r.runs && r.runs == (std::uint64_t{1} << (f.m() + f.n())),
             name + " incorrect");
    c.Expect(transcripts_ok, name + " transcript shape");
    c.Expect(r.pool_size == (std::size_t{1} << f.n()), name + " pool size");
  }
}

// Two-sided tail P(|Z| > z).
double NormalTail(double z) { return std::erfc(z / std::sqrt(2.0)); }

// |z| threshold that gives a family of `tests` comparisons the same
// false-alarm rate as one 3-sigma comparison.
double TableThreshold(std::size_t tests) {
  const double alpha = 1.0 - std::pow(1.0 - NormalTail(3.0), 1.0 / static_cast<double>(tests));
  double lo = 0.0;
  double hi = 10.0;
  for (int i = 0; i < 100; ++i) {
    const double mid = 0.5 * (lo + hi);
    (NormalTail(mid) > alpha ? lo : hi) = mid;
  }
  return hi;
}

std::string SimulationSuite(Check& c) {
  Gen gen(105);
  SeedState rng(106);
  constexpr std::uint64_t kTrials = 100000;
  std::size_t cells = 0;
  std::size_t beyond_three_sigma = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const Scenario s = gen.RandomScenario();
    const OtpBoxSpec spec(OutputMaps(s, gen.Bits(s.m()), gen.Bits(s.pairs())),
                          KeyDist::Uniform());
    const OtpSimulation sim = SimulateOtpViaPr(spec, kTrials, rng);
    c.Expect(sim.exact == EvaluateOtp(spec), "exact table differs");
    c.Expect(sim.empirical.has_value(), "no empirical table");
    // One comparison per (x, y); outcomes within a cell are dependent.
    const double threshold = TableThreshold(s.pairs());
    for (std::size_t i = 0; i < sim.counts.size(); ++i) {
      const double p = ToDouble(sim.exact.entries()[i]);
      const double freq = static_cast<double>(sim.counts[i]) / kTrials;
      if (p == 0.0 || p == 1.0) {
        c.Expect(freq == p, "support violated at spec " + std::to_string(trial));
        continue;
      }
      const double z = std::fabs(freq - p) / std::sqrt(p * (1 - p) / kTrials);
      ++cells;
      beyond_three_sigma += z > 3.0;
      c.Expect(z <= threshold, "gate at spec " + std::to_string(trial) + " cell " +
                                   std::to_string(i) + ", z = " + std::to_string(z));
    }
  }
  return std::to_string(beyond_three_sigma) + " of " + std::to_string(cells) +
         " support cells beyond 3 sigma individually";
}

double H(double mu) {
  if (mu <= 0 || mu >= 1) return 0;
  return -mu * std::log2(mu) - (1 - mu) * std::log2(1 - mu);
}

void NotpSuite(Check& c) {
  for (int k = 0; k <= 100; ++k) {
    const RacResult r = RacRunNotp(Rational(k, 100));
    c.Expect(std::fabs(r.report.i_n - (2 - 2 * H(k / 100.0))) < 1e-9, "mu = " + std::to_string(k));
  }
  c.Expect(std::fabs(RacRunNotp(Rational(1)).report.i_n - 2) < 1e-12, "mu = 1");
  c.Expect(std::fabs(RacRunNotp(Half()).report.i_n) < 1e-12, "mu = 1/2");
  const double mu_star = IcThresholdNotp();
  c.Expect(std::fabs(H(mu_star) - 0.5) < 1e-12, "h(mu*) != 1/2");
  c.Expect(std::fabs(mu_star - 0.88997) < 1e-5, "mu* off");
  const Rational below = FromDouble(mu_star - 1e-6);
  const Rational above = FromDouble(mu_star + 1e-6);
  c.Expect(RacRunNotp(below).report.ic_satisfied, "IC should hold below mu*");
  c.Expect(!RacRunNotp(above).report.ic_satisfied, "IC should fail above mu*");
}

void NoisyOnticSuite(Check& c) {
  for (int k = 0; k <= 100; ++k) {
    const RacResult r = RacRunNoisyOntic(Rational(k, 100));
    c.Expect(std::fabs(r.report.i_n - (2 - H(k / 100.0))) < 1e-9, "mu = " + std::to_string(k));
    if (k != 50) c.Expect(r.report.i_n > 1, "I2 <= 1 at mu = " + std::to_string(k));
  }
  c.Expect(RacRunNoisyOntic(Half()).report.i_n == 1.0, "I2 != 1 at mu = 1/2");
}

void HomomorphismSuite(Check& c) {
  std::uint64_t cases = 0;
  for (std::size_t len = 0; len <= 2; ++len) {
    const std::uint64_t count = std::uint64_t{1} << len;
    for (std::uint64_t m1 = 0; m1 < count; ++m1) {
      for (std::uint64_t m2 = 0; m2 < count; ++m2) {
        for (std::uint64_t k1 = 0; k1 < count; ++k1) {
          for (std::uint64_t k2 = 0; k2 < count; ++k2) {
            ++cases;
            c.Expect(XorHomomorphismCheck(BitString::FromIndex(m1, len),
                                          BitString::FromIndex(m2, len),
                                          BitString::FromIndex(k1, len),
                                          BitString::FromIndex(k2, len)),
                     "length " + std::to_string(len));
          }
        }
      }
    }
  }
  c.Expect(cases == 1 + 16 + 256, "case count");
}

std::string ReadFile(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string RunCapture(const std::string& command, int& status) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) {
    status = -1;
    return out;
  }
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  status = pclose(pipe);
  return out;
}

void DeterminismSuite(Check& c) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("otplab_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  {
    std::ofstream(dir / "spec.json") << ToJson(OtpBoxSpec(
        OutputMaps(Scenario(2, 3), {1, 0}, {0, 1, 1, 0, 0, 1}), KeyDist::Uniform())).dump();
    std::ofstream(dir / "table.json") << ToJson(Isotropic(Rational(3, 4))).dump();
    std::ofstream(dir / "fn.hex") << DistributedFunction::Random(2, 3, 9).ToHex();
  }
  const std::string cli = OTPLAB_CLI_PATH;
  const std::string d = dir.string();
  const std::vector<std::string> commands = {
      "box eval --preset iso:3/4",
      "box eval --spec " + d + "/spec.json",
      "ns-check --spec " + d + "/spec.json",
      "chsh --preset noisy-ontic:9/10",
      "chsh --table " + d + "/table.json",
      "vertex analyze --preset pr",
      "vertex random --m 3 --n 4",
      "vandam --fn RANDOM:42 --m 3 --n 3 --exhaustive",
      "vandam --fn-file " + d + "/fn.hex --x 10 --y 011",
      "simulate-otp --spec " + d + "/spec.json --trials 2000",
      "simulate-otp --preset pr --trials 2000",
      "ic --family notp --grid 0:1:11",
      "ic --family noisy-ontic --grid 0:1:11",
  };
  for (const std::string& cmd : commands) {
    std::string outputs[2];
    std::string transcripts[2];
    for (int run = 0; run < 2; ++run) {
      const fs::path transcript = dir / ("t" + std::to_string(run) + ".jsonl");
      std::string full = cli + " --format json --seed 12345 " + cmd;
      if (cmd.rfind("vandam", 0) == 0) full += " --transcript " + transcript.string();
      int status = 0;
      outputs[run] = RunCapture(full + " 2>/dev/null", status);
      c.Expect(!outputs[run].empty(), "no output from: " + cmd);
      if (cmd.rfind("vandam", 0) == 0) transcripts[run] = ReadFile(transcript);
    }
    c.Expect(outputs[0] == outputs[1], "output differs: " + cmd);
    c.Expect(transcripts[0] == transcripts[1], "transcript differs: " + cmd);
    c.Expect(Json::accept(outputs[0]), "not JSON: " + cmd);
  }
  fs::remove_all(dir);
}

struct Criterion {
  const char* name;
  std::function<void(Check&)> run;
};

}  // namespace
}  // namespace otplab

int main() {
  using otplab::Check;
  const std::vector<otplab::Criterion> criteria = {
      {"no-signaling iff uniform key for x-dependent f", otplab::UniformKeySuite},
      {"Bob marginal closed form under a biased key", otplab::MarginalFormula},
      {"full-output vertex round trip", otplab::VertexRoundTrip},
      {"N-OTP model reproduces the isotropic family", otplab::IsotropicModel},
      {"CHSH exact values", otplab::ChshSuite},
      {"one-bit distributed computation with PR boxes", otplab::VanDamSuite},
      {"OTP box simulated by PR boxes",
       [](Check& c) { c.Note(otplab::SimulationSuite(c)); }},
      {"RAC information, noisy keys", otplab::NotpSuite},
      {"RAC information, noisy ontic channel", otplab::NoisyOnticSuite},
      {"XOR homomorphism of the one-time pad", otplab::HomomorphismSuite},
      {"CLI determinism under equal seeds", otplab::DeterminismSuite},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check check;
    try {
      criteria[i].run(check);
    } catch (const std::exception& e) {
      check.Expect(false, std::string("exception: ") + e.what());
    }
    std::cout << (check.ok() ? "PASS" : "FAIL") << " [" << (i + 1) << "] " << criteria[i].name;
    if (!check.ok()) {
      std::cout << ": " << check.failure();
      ++failures;
    } else if (!check.note().empty()) {
      std::cout << " (" << check.note() << ")";
    }
    std::cout << std::endl;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failures == 0 ? 0 : 1;
}
