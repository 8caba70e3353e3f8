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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "otplab/analysis.h"
#include "otplab/boxes.h"
#include "otplab/errors.h"
#include "otplab/infotheory.h"
#include "otplab/protocols.h"
#include "otplab/serialization.h"

namespace py = pybind11;
using namespace pybind11::literals;

namespace otplab {
namespace {

// Rationals cross the boundary as "num/den" strings and structured results
// as JSON text; the Python package turns them into Fractions and dicts.

CorrelationTable TableFrom(const std::string& json) { return TableFromJson(ParseJson(json)); }

std::string Dump(const Json& j) { return j.dump(); }

std::string EvaluateSpec(const std::string& spec_json) {
  const BoxSpec spec = SpecFromJson(ParseJson(spec_json));
  if (const auto* otp = std::get_if<OtpBoxSpec>(&spec)) return Dump(ToJson(EvaluateOtp(*otp)));
  return Dump(ToJson(EvaluateNotp(std::get<NOtpBoxSpec>(spec))));
}

std::string OtpNsVerdictJson(const std::string& spec_json) {
  const OtpNsVerdict v = ClassifyOtpNs(OtpSpecFromJson(ParseJson(spec_json)));
  Json j;
  j["f_depends_on_x"] = v.f_depends_on_x;
  j["ns"] = v.ns;
  j["key_uniform"] = v.key_uniform;
  return Dump(j);
}

std::vector<std::string> ChshFamily(const std::string& table_json) {
  const CorrelationTable t = TableFrom(table_json);
  std::vector<std::string> out;
  for (const ChshVariant& v : ChshVariant::All()) out.push_back(ToString(ChshValue(t, v)));
  return out;
}

std::string VertexJson(const std::string& table_json) {
  const VertexVerdict v = FullOutputVertexStructure(TableFrom(table_json));
  Json j = ToJson(v);
  j["model"] = v.accepted() ? ToJson(OtpModelFromVertex(*v.structure)) : Json(nullptr);
  return Dump(j);
}

std::string VanDamExhaustiveJson(const std::string& fn, std::size_t m, std::size_t n,
                                 std::uint64_t seed) {
  SeedState rng(seed);
  return Dump(ToJson(VanDamExhaustive(DistributedFunction::Named(fn, m, n), rng)));
}

std::string VanDamRunJsonLines(const std::string& fn, std::size_t m, std::size_t n,
                               const std::string& x, const std::string& y,
                               std::uint64_t seed) {
  SeedState rng(seed);
  const BitString xs = BitString::Parse(x);
  const BitString ys = BitString::Parse(y);
  return TranscriptToJsonLines(xs, ys,
                               VanDamRun(DistributedFunction::Named(fn, m, n), xs, ys, rng));
}

std::string SimulateJson(const std::string& spec_json, std::uint64_t trials,
                         std::uint64_t seed) {
  SeedState rng(seed);
  return Dump(ToJson(SimulateOtpViaPr(OtpSpecFromJson(ParseJson(spec_json)), trials, rng)));
}

std::string RacJson(const std::string& family, const std::string& mu) {
  if (family == "notp") return Dump(ToJson(RacRunNotp(ParseRational(mu))));
  if (family == "noisy-ontic") return Dump(ToJson(RacRunNoisyOntic(ParseRational(mu))));
  throw ParseError("unknown family '" + family + "'");
}

py::tuple KeyInformationOf(const std::string& q) {
  const KeyInformation k = KeyMutualInformation(JointKeyDist::Correlated(ParseRational(q)));
  return py::make_tuple(k.mutual_information, k.ic_violation);
}

}  // namespace
}  // namespace otplab

PYBIND11_MODULE(_core, m) {
  using namespace otplab;
  m.doc() = "Exact one-time-pad models of no-signaling boxes.";

  auto base = py::register_exception<Error>(m, "OtplabError");
  py::register_exception<ConstructionError>(m, "ConstructionError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<ResourceError>(m, "ResourceError", base.ptr());
  py::register_exception<ProtocolError>(m, "ProtocolError", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());

  m.def("pr_box", [] { return Dump(ToJson(PrBox())); });
  m.def("anti_pr_box", [] { return Dump(ToJson(AntiPrBox())); });
  m.def("isotropic", [](const std::string& q) { return Dump(ToJson(Isotropic(ParseRational(q)))); },
        "q"_a);
  m.def("noisy_ontic_box",
        [](const std::string& mu) { return Dump(ToJson(NoisyOnticBox(ParseRational(mu)))); },
        "mu"_a);
  m.def("local_deterministic",
        [](const std::vector<Bit>& alice, const std::vector<Bit>& bob) {
          return Dump(ToJson(LocalDeterministic(alice, bob)));
        },
        "alice"_a, "bob"_a);
  m.def("evaluate", &EvaluateSpec, "spec_json"_a,
        "Exact table of an OTP (\"key\") or N-OTP (\"keys\") spec.");
  m.def("sample_outcomes",
        [](const std::string& table_json, std::size_t x, std::size_t y, std::size_t count,
           std::uint64_t seed) {
          const CorrelationTable t = TableFrom(table_json);
          SeedState rng(seed);
          std::vector<std::pair<Bit, Bit>> out;
          out.reserve(count);
          for (std::size_t i = 0; i < count; ++i) out.push_back(SampleOutcome(t, x, y, rng));
          return out;
        },
        "table_json"_a, "x"_a, "y"_a, "count"_a, "seed"_a);

  m.def("ns_check", [](const std::string& t) { return Dump(ToJson(NsCheck(TableFrom(t)))); },
        "table_json"_a);
  m.def("otp_ns_verdict", &OtpNsVerdictJson, "spec_json"_a);
  m.def("chsh_value",
        [](const std::string& t, const std::string& variant) {
          return ToString(ChshValue(TableFrom(t), ChshVariant::Parse(variant)));
        },
        "table_json"_a, "variant"_a = "chsh-neg-11");
  m.def("chsh_family", &ChshFamily, "table_json"_a);
  m.def("chsh_variant_names", [] {
    std::vector<std::string> names;
    for (const ChshVariant& v : ChshVariant::All()) names.push_back(v.name());
    return names;
  });
  m.def("local_2222", [](const std::string& t) { return Dump(ToJson(Local2222(TableFrom(t)))); },
        "table_json"_a);
  m.def("analyze_vertex", &VertexJson, "table_json"_a);
  m.def("notp_model_from_isotropic",
        [](const std::string& q) { return Dump(ToJson(NotpModelFromIsotropic(ParseRational(q)))); },
        "q"_a);

  m.def("xor_homomorphism_check",
        [](const std::string& m1, const std::string& m2, const std::string& k1,
           const std::string& k2) {
          return XorHomomorphismCheck(BitString::Parse(m1), BitString::Parse(m2),
                                      BitString::Parse(k1), BitString::Parse(k2));
        },
        "m1"_a, "m2"_a, "k1"_a, "k2"_a);
  m.def("function_hex",
        [](const std::string& fn, std::size_t m, std::size_t n) {
          return DistributedFunction::Named(fn, m, n).ToHex();
        },
        "fn"_a, "m"_a = 0, "n"_a = 0);
  m.def("vandam_exhaustive", &VanDamExhaustiveJson, "fn"_a, "m"_a = 0, "n"_a = 0,
        "seed"_a = 0);
  m.def("vandam_run", &VanDamRunJsonLines, "fn"_a, "m"_a, "n"_a, "x"_a, "y"_a, "seed"_a = 0);
  m.def("simulate_otp_via_pr", &SimulateJson, "spec_json"_a, "trials"_a, "seed"_a = 0);

  m.def("binary_entropy", &BinaryEntropy, "mu"_a);
  m.def("rac", &RacJson, "family"_a, "mu"_a);
  m.def("ic_threshold_notp", &IcThresholdNotp);
  m.def("key_mutual_information", &KeyInformationOf, "q"_a);
}
