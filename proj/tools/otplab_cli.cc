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

// otplab command-line front end.
//
// Exit codes: 0 success, 2 parse/spec error, 3 domain/resource error,
// 4 analysis-negative verdict (signaling table, rejected vertex, failed
// protocol check).

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "otplab/analysis.h"
#include "otplab/boxes.h"
#include "otplab/errors.h"
#include "otplab/infotheory.h"
#include "otplab/protocols.h"
#include "otplab/rational.h"
#include "otplab/serialization.h"

#ifndef OTPLAB_VERSION
#define OTPLAB_VERSION "dev"
#endif

namespace otplab {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;
constexpr int kExitNegative = 4;

struct RunConfig {
  std::string format = "pretty";
  std::string output;
  std::optional<std::uint64_t> seed;

  std::string preset;
  std::string spec_path;
  std::string table_path;

  std::string variant;

  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t vertex_m = 3;
  std::size_t vertex_n = 3;

  std::string fn;
  std::string fn_file;
  std::string x;
  std::string y;
  bool exhaustive = false;
  std::string transcript_path;

  std::uint64_t trials = 100000;

  std::string family = "notp";
  std::string grid = "0.5:1:51";
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void Emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(cfg.output, std::ios::binary);
  if (!out) throw DomainError("cannot write '" + cfg.output + "'");
  out << text;
}

void EmitJson(const RunConfig& cfg, const Json& j) { Emit(cfg, j.dump(2) + "\n"); }

std::uint64_t RequireSeed(const RunConfig& cfg) {
  if (!cfg.seed) throw ParseError("this command needs --seed (or OTPLAB_SEED)");
  return *cfg.seed;
}

std::string Approx(const Rational& v) {
  std::ostringstream ss;
  ss << ToString(v);
  if (denominator(v) != 1) ss << " \xE2\x89\x88 " << std::setprecision(6) << ToDouble(v);
  return ss.str();
}

CorrelationTable PresetTable(const std::string& name) {
  if (name == "pr") return PrBox();
  if (name == "anti-pr") return AntiPrBox();
  if (name.rfind("iso:", 0) == 0) return Isotropic(ParseRational(name.substr(4)));
  if (name.rfind("noisy-ontic:", 0) == 0) return NoisyOnticBox(ParseRational(name.substr(12)));
  throw ParseError("unknown preset '" + name + "'");
}

OtpBoxSpec PresetOtpSpec(const std::string& name) {
  if (name == "pr") return OtpBoxSpec(OutputMaps(Scenario(2, 2), {0, 0}, {0, 0, 0, 1}), KeyDist::Uniform());
  if (name == "anti-pr") {
    return OtpBoxSpec(OutputMaps(Scenario(2, 2), {0, 0}, {1, 1, 1, 0}), KeyDist::Uniform());
  }
  throw ParseError("no OTP model preset named '" + name + "'");
}

// Table from exactly one of --preset, --spec, --table.
struct LoadedTable {
  CorrelationTable table;
  Json source;
};

LoadedTable LoadTable(const RunConfig& cfg) {
  const int given = !cfg.preset.empty() + !cfg.spec_path.empty() + !cfg.table_path.empty();
  if (given != 1) throw ParseError("give exactly one of --preset, --spec, --table");
  if (!cfg.preset.empty()) {
    Json src;
    src["preset"] = cfg.preset;
    return {PresetTable(cfg.preset), src};
  }
  if (!cfg.table_path.empty()) {
    Json src;
    src["table"] = cfg.table_path;
    return {TableFromJson(ParseJson(ReadFile(cfg.table_path))), src};
  }
  const BoxSpec spec = SpecFromJson(ParseJson(ReadFile(cfg.spec_path)));
  Json src;
  if (const auto* otp = std::get_if<OtpBoxSpec>(&spec)) {
    src["spec"] = ToJson(*otp);
    return {EvaluateOtp(*otp), src};
  }
  const auto& notp = std::get<NOtpBoxSpec>(spec);
  src["spec"] = ToJson(notp);
  return {EvaluateNotp(notp), src};
}

std::string PrettyTable(const CorrelationTable& t) {
  std::ostringstream out;
  out << "scenario m=" << t.scenario().m() << " n=" << t.scenario().n() << "\n";
  for (std::size_t x = 0; x < t.scenario().m(); ++x) {
    for (std::size_t y = 0; y < t.scenario().n(); ++y) {
      for (Bit a = 0; a < 2; ++a) {
        for (Bit b = 0; b < 2; ++b) {
          out << "  P(" << int(a) << "," << int(b) << "|" << x << "," << y
              << ") = " << Approx(t.at(a, b, x, y)) << "\n";
        }
      }
    }
  }
  return out.str();
}

std::string PrettyNs(const NsReport& r) {
  std::ostringstream out;
  out << "no-signaling alice->bob: " << (r.alice_to_bob_ns ? "yes" : "NO") << "\n";
  out << "no-signaling bob->alice: " << (r.bob_to_alice_ns ? "yes" : "NO") << "\n";
  for (const NsWitness& w : r.witnesses) {
    const bool a2b = w.direction == SignalDirection::kAliceToBob;
    out << "  witness " << DirectionName(w.direction) << ": P_" << (a2b ? "B" : "A") << "("
        << int(w.output) << "|" << (a2b ? "y=" : "x=") << w.local_input << ") is "
        << ToString(w.marginal_1) << " at " << (a2b ? "x=" : "y=") << w.remote_input_1
        << " but " << ToString(w.marginal_2) << " at " << (a2b ? "x=" : "y=")
        << w.remote_input_2 << "\n";
  }
  return out.str();
}

int CmdBoxEval(const RunConfig& cfg) {
  const LoadedTable loaded = LoadTable(cfg);
  const NsReport ns = NsCheck(loaded.table);
  if (cfg.format == "json") {
    Json j;
    j["command"] = "box eval";
    j["source"] = loaded.source;
    j["table"] = ToJson(loaded.table);
    j["ns"] = ToJson(ns);
    EmitJson(cfg, j);
  } else {
    Emit(cfg, PrettyTable(loaded.table) + PrettyNs(ns));
  }
  return kExitOk;
}

int CmdNsCheck(const RunConfig& cfg) {
  const LoadedTable loaded = LoadTable(cfg);
  const NsReport ns = NsCheck(loaded.table);
  if (cfg.format == "json") {
    Json j;
    j["command"] = "ns-check";
    j["source"] = loaded.source;
    j["ns"] = ToJson(ns);
    EmitJson(cfg, j);
  } else {
    Emit(cfg, PrettyNs(ns));
  }
  return ns.no_signaling() ? kExitOk : kExitNegative;
}

int CmdChsh(const RunConfig& cfg) {
  const LoadedTable loaded = LoadTable(cfg);
  std::vector<ChshVariant> variants;
  if (cfg.variant.empty()) {
    for (const ChshVariant& v : ChshVariant::All()) variants.push_back(v);
  } else {
    variants.push_back(ChshVariant::Parse(cfg.variant));
  }
  Json values = Json::object();
  std::ostringstream pretty;
  for (const ChshVariant& v : variants) {
    const Rational s = ChshValue(loaded.table, v);
    values[v.name()] = ToString(s);
    pretty << v.name() << " = " << Approx(s) << "\n";
  }
  const bool ns = NsCheck(loaded.table).no_signaling();
  std::optional<LocalityVerdict> locality;
  if (ns) locality = Local2222(loaded.table);
  if (cfg.format == "json") {
    Json j;
    j["command"] = "chsh";
    j["source"] = loaded.source;
    j["values"] = std::move(values);
    j["no_signaling"] = ns;
    j["locality"] = locality ? ToJson(*locality) : Json(nullptr);
    EmitJson(cfg, j);
  } else {
    if (locality) {
      pretty << "max |S| = " << Approx(locality->max_chsh) << " (" << locality->argmax.name()
             << "), " << (locality->is_local ? "local" : "nonlocal") << "\n";
    } else {
      pretty << "table is signaling; locality test skipped\n";
    }
    Emit(cfg, pretty.str());
  }
  return kExitOk;
}

int CmdVertexAnalyze(const RunConfig& cfg) {
  const LoadedTable loaded = LoadTable(cfg);
  const VertexVerdict verdict = FullOutputVertexStructure(loaded.table);
  std::optional<OtpBoxSpec> model;
  bool round_trip = false;
  if (verdict.accepted()) {
    model = OtpModelFromVertex(*verdict.structure);
    round_trip = EvaluateOtp(*model) == loaded.table;
  }
  if (cfg.format == "json") {
    Json j;
    j["command"] = "vertex analyze";
    j["source"] = loaded.source;
    j["verdict"] = ToJson(verdict);
    j["otp_model"] = model ? ToJson(*model) : Json(nullptr);
    j["round_trip"] = round_trip;
    EmitJson(cfg, j);
  } else {
    std::ostringstream out;
    if (verdict.accepted()) {
      out << "full-output vertex: accepted\nh(x,y):\n";
      const VertexStructure& vs = *verdict.structure;
      for (std::size_t x = 0; x < vs.scenario().m(); ++x) {
        out << " ";
        for (std::size_t y = 0; y < vs.scenario().n(); ++y) out << " " << int(vs.h(x, y));
        out << "\n";
      }
      out << "OTP model: g=0, f=h, key p0=1/2\n";
      out << "round trip: " << (round_trip ? "OK" : "FAILED") << "\n";
    } else {
      out << "full-output vertex: rejected (" << RejectionReason(verdict.rejection) << "; "
          << verdict.detail << ")\n";
    }
    Emit(cfg, out.str());
  }
  if (!verdict.accepted() || !round_trip) return kExitNegative;
  return kExitOk;
}

int CmdVertexRandom(const RunConfig& cfg) {
  if (cfg.vertex_m == 0 || cfg.vertex_n == 0) {
    throw ParseError("vertex random needs --m and --n >= 1");
  }
  if (cfg.vertex_m * cfg.vertex_n > 4096) throw ResourceError("vertex too large");
  SeedState rng(RequireSeed(cfg));
  const Scenario s(cfg.vertex_m, cfg.vertex_n);
  std::vector<Bit> h(s.pairs());
  for (Bit& v : h) v = rng.NextBit();
  const VertexStructure vs(s, std::move(h));
  const CorrelationTable table = EvaluateOtp(OtpModelFromVertex(vs));
  if (cfg.format == "json") {
    EmitJson(cfg, ToJson(table));
  } else {
    std::ostringstream out;
    out << "h(x,y):\n";
    for (std::size_t x = 0; x < s.m(); ++x) {
      out << " ";
      for (std::size_t y = 0; y < s.n(); ++y) out << " " << int(vs.h(x, y));
      out << "\n";
    }
    Emit(cfg, out.str() + PrettyTable(table));
  }
  return kExitOk;
}

DistributedFunction LoadFunction(const RunConfig& cfg, std::string* label) {
  if (cfg.fn.empty() == cfg.fn_file.empty()) throw ParseError("give exactly one of --fn, --fn-file");
  if (!cfg.fn_file.empty()) {
    *label = "file:" + cfg.fn_file;
    return DistributedFunction::FromHex(ReadFile(cfg.fn_file));
  }
  *label = cfg.fn;
  return DistributedFunction::Named(cfg.fn, cfg.m, cfg.n);
}

int CmdVanDam(const RunConfig& cfg) {
  std::string label;
  const DistributedFunction df = LoadFunction(cfg, &label);
  SeedState rng(RequireSeed(cfg));
  std::optional<std::ofstream> transcript;
  if (!cfg.transcript_path.empty()) {
    transcript.emplace(cfg.transcript_path, std::ios::binary);
    if (!*transcript) throw DomainError("cannot write '" + cfg.transcript_path + "'");
  }
  Json j;
  j["command"] = "vandam";
  j["function"] = label;
  j["m"] = df.m();
  j["n"] = df.n();
  std::ostringstream pretty;
  bool ok = true;
  if (cfg.exhaustive) {
    if (!cfg.x.empty() || !cfg.y.empty()) throw ParseError("--exhaustive excludes --x/--y");
    TranscriptObserver observer;
    if (transcript) {
      observer = [&](const BitString& x, const BitString& y, const ProtocolTranscript& t) {
        *transcript << TranscriptToJsonLines(x, y, t);
      };
    }
    const VanDamReport report = VanDamExhaustive(df, rng, observer);
    ok = report.successes == report.runs && report.max_bits_alice_to_bob == 1 &&
         report.max_bits_bob_to_alice == 0;
    j["mode"] = "exhaustive";
    j["report"] = ToJson(report);
    pretty << label << ": " << report.successes << "/" << report.runs << " correct, "
           << report.pool_size << " PR boxes, max " << report.max_bits_alice_to_bob
           << " bit(s) alice->bob, " << report.max_bits_bob_to_alice << " bob->alice\n";
  } else {
    if (cfg.x.empty() || cfg.y.empty()) throw ParseError("give --x and --y, or --exhaustive");
    const BitString x = BitString::Parse(cfg.x);
    const BitString y = BitString::Parse(cfg.y);
    const ProtocolTranscript t = VanDamRun(df, x, y, rng);
    const Bit expected = df(x, y);
    ok = t.result() == expected;
    if (transcript) *transcript << TranscriptToJsonLines(x, y, t);
    Json run;
    run["x"] = x.ToString();
    run["y"] = y.ToString();
    run["result"] = t.result();
    run["expected"] = expected;
    run["correct"] = ok;
    run["pool_size"] = t.box_events().size();
    run["bits_alice_to_bob"] = t.bits_alice_to_bob();
    run["bits_bob_to_alice"] = t.bits_bob_to_alice();
    j["mode"] = "single";
    j["run"] = std::move(run);
    pretty << label << "(" << x.ToString() << "," << y.ToString() << ") = " << int(t.result())
           << (ok ? " (correct)" : " (WRONG)") << ", " << t.box_events().size()
           << " PR boxes, " << t.bits_alice_to_bob() << " bit(s) alice->bob\n";
  }
  if (cfg.format == "json") {
    EmitJson(cfg, j);
  } else {
    Emit(cfg, pretty.str());
  }
  return ok ? kExitOk : kExitNegative;
}

int CmdSimulateOtp(const RunConfig& cfg) {
  if (cfg.preset.empty() == cfg.spec_path.empty()) {
    throw ParseError("give exactly one of --spec, --preset");
  }
  const OtpBoxSpec spec = cfg.preset.empty()
                              ? OtpSpecFromJson(ParseJson(ReadFile(cfg.spec_path)))
                              : PresetOtpSpec(cfg.preset);
  SeedState rng(RequireSeed(cfg));
  const OtpSimulation sim = SimulateOtpViaPr(spec, cfg.trials, rng);
  const CorrelationTable target = EvaluateOtp(spec);
  const bool exact_match = sim.exact == target;
  // Binomial 3-sigma gate per entry.
  bool within = true;
  double worst = 0.0;
  if (sim.empirical) {
    const double trials = static_cast<double>(sim.trials_per_cell);
    for (std::size_t i = 0; i < target.entries().size(); ++i) {
      const double p = ToDouble(target.entries()[i]);
      const double freq = ToDouble(sim.empirical->entries()[i]);
      const double sigma = std::sqrt(p * (1 - p) / trials);
      const double dev = std::fabs(freq - p);
      if (sigma == 0.0) {
        if (dev != 0.0) within = false;
      } else {
        worst = std::max(worst, dev / sigma);
        if (dev > 3 * sigma) within = false;
      }
    }
  }
  if (cfg.format == "json") {
    Json j;
    j["command"] = "simulate-otp";
    j["spec"] = ToJson(spec);
    j["simulation"] = ToJson(sim);
    j["exact_matches_model"] = exact_match;
    j["within_3_sigma"] = within;
    j["max_deviation_sigma"] = worst;
    EmitJson(cfg, j);
  } else {
    std::ostringstream out;
    out << "induced table (exact):\n" << PrettyTable(sim.exact);
    out << "exact match with OTP model: " << (exact_match ? "yes" : "NO") << "\n";
    out << "empirical (" << sim.trials_per_cell << " trials/cell) within 3 sigma: "
        << (within ? "yes" : "NO") << " (max " << std::setprecision(3) << worst << " sigma)\n";
    Emit(cfg, out.str());
  }
  return exact_match && within ? kExitOk : kExitNegative;
}

std::vector<Rational> ParseGrid(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ':')) parts.push_back(part);
  if (parts.size() != 3) throw ParseError("grid must be start:stop:steps");
  const Rational start = ParseRational(parts[0]);
  const Rational stop = ParseRational(parts[1]);
  if (parts[2].empty() || parts[2].find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError("grid steps must be a positive integer");
  }
  const unsigned long steps = std::stoul(parts[2]);
  if (steps == 0) throw ParseError("grid steps must be a positive integer");
  if (steps > 1000000) throw ResourceError("grid too large");
  std::vector<Rational> grid;
  for (unsigned long i = 0; i < steps; ++i) {
    grid.push_back(steps == 1 ? start : Rational(start + (stop - start) * i / (steps - 1)));
  }
  return grid;
}

int CmdIc(const RunConfig& cfg) {
  RacFamily family;
  if (cfg.family == "notp") {
    family = RacFamily::kNoisyKeys;
  } else if (cfg.family == "noisy-ontic") {
    family = RacFamily::kNoisyOntic;
  } else {
    throw ParseError("unknown family '" + cfg.family + "'");
  }
  std::vector<RacResult> rows;
  for (const Rational& mu : ParseGrid(cfg.grid)) {
    rows.push_back(family == RacFamily::kNoisyKeys ? RacRunNotp(mu) : RacRunNoisyOntic(mu));
  }
  std::optional<double> threshold;
  if (family == RacFamily::kNoisyKeys) threshold = IcThresholdNotp();
  if (cfg.format == "csv") {
    std::string out = IcCsvHeader() + "\n";
    for (const RacResult& r : rows) out += IcCsvRow(r) + "\n";
    if (threshold) {
      std::ostringstream t;
      t << "# mu_star=" << std::setprecision(17) << *threshold << "\n";
      out += t.str();
    }
    Emit(cfg, out);
  } else if (cfg.format == "json") {
    Json j;
    j["command"] = "ic";
    j["family"] = FamilyName(family);
    j["mu_star"] = threshold ? Json(*threshold) : Json(nullptr);
    j["rows"] = Json::array();
    for (const RacResult& r : rows) {
      Json row;
      row["mu"] = ToString(r.mu);
      row["I2_simulated"] = r.report.i_n;
      row["I2_closed_form"] = *r.report.closed_form;
      row["discrepancy"] = *r.report.discrepancy;
      row["ic_satisfied"] = r.report.ic_satisfied;
      row["per_index_information"] = r.report.per_index_information;
      j["rows"].push_back(std::move(row));
    }
    EmitJson(cfg, j);
  } else {
    std::ostringstream out;
    out << "family " << FamilyName(family) << "\n";
    out << std::setw(12) << "mu" << std::setw(14) << "I2" << std::setw(14) << "closed"
        << "  IC\n";
    for (const RacResult& r : rows) {
      out << std::setw(12) << ToString(r.mu) << std::setw(14) << std::setprecision(8)
          << r.report.i_n << std::setw(14) << *r.report.closed_form << "  "
          << (r.report.ic_satisfied ? "satisfied" : "violated") << "\n";
    }
    if (threshold) {
      out << "threshold mu* = " << std::setprecision(12) << *threshold
          << " (IC violated for mu > mu* or mu < 1 - mu*)\n";
    }
    Emit(cfg, out.str());
  }
  return kExitOk;
}

int Run(int argc, char** argv) {
  CLI::App app{"otplab: one-time-pad models of no-signaling boxes"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"pretty", "json", "csv"}));
  app.add_option("-o,--output", cfg.output, "Write the report to a file");
  app.add_option("--seed", cfg.seed, "Seed for sampling commands")->envname("OTPLAB_SEED");

  auto add_table_source = [&cfg](CLI::App* cmd) {
    cmd->add_option("--preset", cfg.preset, "pr | anti-pr | iso:<q> | noisy-ontic:<mu>");
    cmd->add_option("--spec", cfg.spec_path, "OTP or N-OTP box spec (JSON)");
    cmd->add_option("--table", cfg.table_path, "Correlation table (JSON)");
  };

  CLI::App* box = app.add_subcommand("box", "Box construction");
  box->require_subcommand(1);
  CLI::App* box_eval = box->add_subcommand("eval", "Evaluate a box into its exact table");
  add_table_source(box_eval);

  CLI::App* ns = app.add_subcommand("ns-check", "No-signaling check");
  add_table_source(ns);

  CLI::App* chsh = app.add_subcommand("chsh", "CHSH values and 2,2 locality");
  add_table_source(chsh);
  chsh->add_option("--variant", cfg.variant, "chsh-neg-<x><y>[-inv]");

  CLI::App* vertex = app.add_subcommand("vertex", "Full-output vertex tools");
  vertex->require_subcommand(1);
  CLI::App* vertex_analyze = vertex->add_subcommand("analyze", "Recognize and extract an OTP model");
  add_table_source(vertex_analyze);
  CLI::App* vertex_random = vertex->add_subcommand("random", "Emit a random full-output vertex");
  vertex_random->add_option("--m", cfg.vertex_m, "Alice inputs")->capture_default_str();
  vertex_random->add_option("--n", cfg.vertex_n, "Bob inputs")->capture_default_str();

  CLI::App* vandam = app.add_subcommand("vandam", "One-bit distributed computation");
  vandam->add_option("--fn", cfg.fn, "AND | IP<k> | RANDOM:<seed> | PROJ | ZERO | ONE");
  vandam->add_option("--fn-file", cfg.fn_file, "Hex truth-table file");
  vandam->add_option("--m", cfg.m, "Alice string length (RANDOM, PROJ, ZERO, ONE)");
  vandam->add_option("--n", cfg.n, "Bob string length (RANDOM, PROJ, ZERO, ONE)");
  vandam->add_option("--x", cfg.x, "Alice's bit string");
  vandam->add_option("--y", cfg.y, "Bob's bit string");
  vandam->add_flag("--exhaustive", cfg.exhaustive, "Run every input pair");
  vandam->add_option("--transcript", cfg.transcript_path, "Write JSON-lines transcripts");

  CLI::App* simulate = app.add_subcommand("simulate-otp", "Simulate an OTP box with PR boxes");
  simulate->add_option("--spec", cfg.spec_path, "OTP box spec (JSON)");
  simulate->add_option("--preset", cfg.preset, "pr | anti-pr");
  simulate->add_option("--trials", cfg.trials, "Trials per (x,y)");

  CLI::App* ic = app.add_subcommand("ic", "Information Causality sweep");
  ic->add_option("--family", cfg.family, "notp | noisy-ontic");
  ic->add_option("--grid", cfg.grid, "start:stop:steps");

  CLI::App* version = app.add_subcommand("version", "Print the version");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (*version) {
      if (cfg.format == "json") {
        EmitJson(cfg, Json{{"command", "version"}, {"version", OTPLAB_VERSION}});
      } else {
        Emit(cfg, std::string("otplab ") + OTPLAB_VERSION + "\n");
      }
      return kExitOk;
    }
    if (*box_eval) return CmdBoxEval(cfg);
    if (*ns) return CmdNsCheck(cfg);
    if (*chsh) return CmdChsh(cfg);
    if (*vertex_analyze) return CmdVertexAnalyze(cfg);
    if (*vertex_random) return CmdVertexRandom(cfg);
    if (*vandam) return CmdVanDam(cfg);
    if (*simulate) return CmdSimulateOtp(cfg);
    if (*ic) return CmdIc(cfg);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ConstructionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitParse;
}

}  // namespace
}  // namespace otplab

int main(int argc, char** argv) { return otplab::Run(argc, argv); }
