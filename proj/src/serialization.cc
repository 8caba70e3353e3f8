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

#include "otplab/serialization.h"

#include <array>
#include <charconv>
#include <sstream>

#include "otplab/errors.h"

namespace otplab {
namespace {

std::string EntryKey(Bit a, Bit b, std::size_t x, std::size_t y) {
  return std::to_string(a) + "," + std::to_string(b) + "|" + std::to_string(x) + "," +
         std::to_string(y);
}

const Json& Field(const Json& j, const char* name) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  auto it = j.find(name);
  if (it == j.end()) throw ParseError(std::string("missing field \"") + name + "\"");
  return *it;
}

std::size_t Count(const Json& j, const char* name) {
  const Json& v = Field(j, name);
  if (!v.is_number_unsigned()) {
    throw ParseError(std::string("field \"") + name + "\" must be a nonnegative integer");
  }
  return v.get<std::size_t>();
}

Rational RationalField(const Json& v) {
  if (!v.is_string()) throw ParseError("rationals must be \"num/den\" strings");
  return ParseRational(v.get<std::string>());
}

Bit BitValue(const Json& v) {
  if (!v.is_number_unsigned() || v.get<std::uint64_t>() > 1) {
    throw ConstructionError("map value must be 0 or 1");
  }
  return static_cast<Bit>(v.get<std::uint64_t>());
}

Scenario ScenarioFrom(const Json& j) { return Scenario(Count(j, "m"), Count(j, "n")); }

// Keeps whatever shape the input has; OutputMaps rejects partial maps.
OutputMaps MapsFrom(const Json& j) {
  const Scenario s = ScenarioFrom(j);
  const Json& g = Field(j, "g");
  const Json& f = Field(j, "f");
  if (!g.is_array() || !f.is_array()) throw ParseError("\"g\" and \"f\" must be arrays");
  std::vector<Bit> gv;
  for (const Json& v : g) gv.push_back(BitValue(v));
  if (f.size() != s.m()) {
    throw ConstructionError("f has " + std::to_string(f.size()) + " rows, expected " +
                            std::to_string(s.m()));
  }
  std::vector<Bit> fv;
  for (const Json& row : f) {
    if (!row.is_array()) throw ParseError("\"f\" must be an array of rows");
    if (row.size() != s.n()) {
      throw ConstructionError("f row has " + std::to_string(row.size()) +
                              " values, expected " + std::to_string(s.n()));
    }
    for (const Json& v : row) fv.push_back(BitValue(v));
  }
  return OutputMaps(s, std::move(gv), std::move(fv));
}

void PutMaps(Json& j, const OutputMaps& maps) {
  const Scenario& s = maps.scenario();
  j["m"] = s.m();
  j["n"] = s.n();
  j["g"] = Json::array();
  for (Bit v : maps.g_values()) j["g"].push_back(v);
  j["f"] = Json::array();
  for (std::size_t x = 0; x < s.m(); ++x) {
    Json row = Json::array();
    for (std::size_t y = 0; y < s.n(); ++y) row.push_back(maps.f(x, y));
    j["f"].push_back(std::move(row));
  }
}

std::string FormatDouble(double v) {
  std::array<char, 64> buf;
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), end);
}

}  // namespace

Json ParseJson(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Json ToJson(const CorrelationTable& table) {
  const Scenario& s = table.scenario();
  Json j;
  j["m"] = s.m();
  j["n"] = s.n();
  Json entries = Json::object();
  for (std::size_t x = 0; x < s.m(); ++x) {
    for (std::size_t y = 0; y < s.n(); ++y) {
      for (Bit a = 0; a < 2; ++a) {
        for (Bit b = 0; b < 2; ++b) entries[EntryKey(a, b, x, y)] = ToString(table.at(a, b, x, y));
      }
    }
  }
  j["entries"] = std::move(entries);
  return j;
}

CorrelationTable TableFromJson(const Json& j) {
  const Scenario s = ScenarioFrom(j);
  const Json& entries = Field(j, "entries");
  if (!entries.is_object()) throw ParseError("\"entries\" must be an object");
  if (entries.size() != s.pairs() * 4) {
    throw ConstructionError("table has " + std::to_string(entries.size()) +
                            " entries, expected " + std::to_string(s.pairs() * 4));
  }
  std::vector<Rational> values(s.pairs() * 4);
  for (std::size_t x = 0; x < s.m(); ++x) {
    for (std::size_t y = 0; y < s.n(); ++y) {
      for (Bit a = 0; a < 2; ++a) {
        for (Bit b = 0; b < 2; ++b) {
          const std::string key = EntryKey(a, b, x, y);
          auto it = entries.find(key);
          if (it == entries.end()) throw ConstructionError("table is missing entry " + key);
          values[((x * s.n() + y) * 2 + a) * 2 + b] = RationalField(*it);
        }
      }
    }
  }
  return CorrelationTable(s, std::move(values));
}

Json ToJson(const OtpBoxSpec& spec) {
  Json j;
  PutMaps(j, spec.maps());
  j["key"] = ToString(spec.key().p0());
  return j;
}

Json ToJson(const NOtpBoxSpec& spec) {
  Json j;
  PutMaps(j, spec.maps());
  Json keys;
  for (Bit l1 = 0; l1 < 2; ++l1) {
    for (Bit l2 = 0; l2 < 2; ++l2) {
      keys[std::to_string(l1) + "," + std::to_string(l2)] = ToString(spec.keys().p(l1, l2));
    }
  }
  j["keys"] = std::move(keys);
  return j;
}

OtpBoxSpec OtpSpecFromJson(const Json& j) {
  OutputMaps maps = MapsFrom(j);
  return OtpBoxSpec(std::move(maps), KeyDist(RationalField(Field(j, "key"))));
}

BoxSpec SpecFromJson(const Json& j) {
  if (!j.is_object()) throw ParseError("spec must be a JSON object");
  const bool has_key = j.contains("key");
  const bool has_keys = j.contains("keys");
  if (has_key == has_keys) throw ParseError("spec needs exactly one of \"key\" or \"keys\"");
  if (has_key) return OtpSpecFromJson(j);
  OutputMaps maps = MapsFrom(j);
  const Json& keys = Field(j, "keys");
  std::array<Rational, 4> p;
  for (Bit l1 = 0; l1 < 2; ++l1) {
    for (Bit l2 = 0; l2 < 2; ++l2) {
      const std::string k = std::to_string(l1) + "," + std::to_string(l2);
      p[l1 * 2 + l2] = RationalField(Field(keys, k.c_str()));
    }
  }
  return NOtpBoxSpec(std::move(maps), JointKeyDist(std::move(p)));
}

Json ToJson(const NsReport& report) {
  Json j;
  j["alice_to_bob_ns"] = report.alice_to_bob_ns;
  j["bob_to_alice_ns"] = report.bob_to_alice_ns;
  j["witnesses"] = Json::array();
  for (const NsWitness& w : report.witnesses) {
    Json e;
    e["direction"] = DirectionName(w.direction);
    e["local_input"] = w.local_input;
    e["output"] = w.output;
    e["remote_inputs"] = {w.remote_input_1, w.remote_input_2};
    e["marginals"] = {ToString(w.marginal_1), ToString(w.marginal_2)};
    j["witnesses"].push_back(std::move(e));
  }
  return j;
}

Json ToJson(const VertexStructure& vs) {
  Json j;
  j["m"] = vs.scenario().m();
  j["n"] = vs.scenario().n();
  j["h"] = Json::array();
  for (std::size_t x = 0; x < vs.scenario().m(); ++x) {
    Json row = Json::array();
    for (std::size_t y = 0; y < vs.scenario().n(); ++y) row.push_back(vs.h(x, y));
    j["h"].push_back(std::move(row));
  }
  return j;
}

Json ToJson(const VertexVerdict& verdict) {
  Json j;
  j["accepted"] = verdict.accepted();
  j["reason"] = RejectionReason(verdict.rejection);
  j["detail"] = verdict.detail;
  j["structure"] = verdict.structure ? ToJson(*verdict.structure) : Json(nullptr);
  return j;
}

Json ToJson(const LocalityVerdict& verdict) {
  Json j;
  j["is_local"] = verdict.is_local;
  j["max_chsh"] = ToString(verdict.max_chsh);
  j["argmax"] = verdict.argmax.name();
  return j;
}

Json ToJson(const InformationReport& report) {
  Json j;
  j["per_index_information"] = report.per_index_information;
  j["I_n"] = report.i_n;
  j["classical_bits"] = report.classical_bits;
  j["ic_satisfied"] = report.ic_satisfied;
  j["closed_form"] = report.closed_form ? Json(*report.closed_form) : Json(nullptr);
  j["discrepancy"] = report.discrepancy ? Json(*report.discrepancy) : Json(nullptr);
  return j;
}

Json ToJson(const JointDistribution& dist) {
  Json j;
  j["variables"] = dist.names();
  j["cardinalities"] = dist.cardinalities();
  j["probabilities"] = Json::array();
  for (const Rational& p : dist.probabilities()) j["probabilities"].push_back(ToString(p));
  return j;
}

Json ToJson(const RacResult& result) {
  Json j;
  j["family"] = FamilyName(result.family);
  j["mu"] = ToString(result.mu);
  j["joints"] = Json::array();
  for (const JointDistribution& d : result.joints) j["joints"].push_back(ToJson(d));
  j["report"] = ToJson(result.report);
  return j;
}

Json ToJson(const VanDamReport& report) {
  Json j;
  j["runs"] = report.runs;
  j["successes"] = report.successes;
  j["max_bits_alice_to_bob"] = report.max_bits_alice_to_bob;
  j["max_bits_bob_to_alice"] = report.max_bits_bob_to_alice;
  j["pool_size"] = report.pool_size;
  return j;
}

Json ToJson(const OtpSimulation& sim) {
  Json j;
  j["exact"] = ToJson(sim.exact);
  j["trials_per_cell"] = sim.trials_per_cell;
  j["empirical"] = sim.empirical ? ToJson(*sim.empirical) : Json(nullptr);
  return j;
}

std::string TranscriptToJsonLines(const BitString& x, const BitString& y,
                                  const ProtocolTranscript& transcript) {
  std::ostringstream out;
  Json header;
  header["event"] = "run";
  header["x"] = x.ToString();
  header["y"] = y.ToString();
  header["pool_size"] = transcript.box_events().size();
  out << header.dump() << '\n';
  for (const BoxEvent& e : transcript.box_events()) {
    Json line;
    line["event"] = "box";
    line["instance"] = e.instance;
    line["alice_input"] = e.alice_input;
    line["alice_output"] = e.alice_output;
    line["bob_input"] = e.bob_input;
    line["bob_output"] = e.bob_output;
    out << line.dump() << '\n';
  }
  for (const ChannelMessage& m : transcript.messages()) {
    Json line;
    line["event"] = "message";
    line["direction"] = ChannelName(m.direction);
    line["payload"] = m.payload;
    out << line.dump() << '\n';
  }
  Json result;
  result["event"] = "result";
  result["result"] = transcript.result();
  result["bits_alice_to_bob"] = transcript.bits_alice_to_bob();
  result["bits_bob_to_alice"] = transcript.bits_bob_to_alice();
  out << result.dump() << '\n';
  return out.str();
}

std::string IcCsvHeader() { return "mu,I2_simulated,I2_closed_form,discrepancy,ic_satisfied"; }

std::string IcCsvRow(const RacResult& result) {
  return ToString(result.mu) + "," + FormatDouble(result.report.i_n) + "," +
         FormatDouble(result.report.closed_form.value_or(0.0)) + "," +
         FormatDouble(result.report.discrepancy.value_or(0.0)) + "," +
         (result.report.ic_satisfied ? "true" : "false");
}

}  // namespace otplab
