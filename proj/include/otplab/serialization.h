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

// JSON and CSV forms of every report. Rationals are "num/den" strings in
// lowest terms; object keys are emitted in a fixed order so equal values
// always serialize to identical bytes. Schemas live in schemas/.

#ifndef OTPLAB_SERIALIZATION_H_
#define OTPLAB_SERIALIZATION_H_

#include <string>
#include <variant>

#include <json.hpp>

#include "otplab/analysis.h"
#include "otplab/boxes.h"
#include "otplab/infotheory.h"
#include "otplab/protocols.h"

namespace otplab {

using Json = nlohmann::ordered_json;

// {"m", "n", "entries": {"a,b|x,y": "num/den", ...}}
Json ToJson(const CorrelationTable& table);
CorrelationTable TableFromJson(const Json& j);

// {"m", "n", "g": [..], "f": [[..], ..], "key": "num/den"}
Json ToJson(const OtpBoxSpec& spec);
// {"m", "n", "g", "f", "keys": {"0,0": .., "0,1": .., "1,0": .., "1,1": ..}}
Json ToJson(const NOtpBoxSpec& spec);

using BoxSpec = std::variant<OtpBoxSpec, NOtpBoxSpec>;
// Dispatches on the presence of "key" or "keys".
BoxSpec SpecFromJson(const Json& j);
OtpBoxSpec OtpSpecFromJson(const Json& j);

Json ToJson(const NsReport& report);
Json ToJson(const VertexStructure& vs);
Json ToJson(const VertexVerdict& verdict);
Json ToJson(const LocalityVerdict& verdict);
Json ToJson(const InformationReport& report);
Json ToJson(const RacResult& result);
Json ToJson(const JointDistribution& dist);
Json ToJson(const VanDamReport& report);
Json ToJson(const OtpSimulation& sim);

// One JSON object per line: box events, then channel messages, then a
// closing result line. The header line carries the run inputs.
std::string TranscriptToJsonLines(const BitString& x, const BitString& y,
                                  const ProtocolTranscript& transcript);

// "mu,I2_simulated,I2_closed_form,discrepancy,ic_satisfied"
std::string IcCsvHeader();
std::string IcCsvRow(const RacResult& result);

// Parses text as JSON, mapping syntax errors to ParseError.
Json ParseJson(const std::string& text);

}  // namespace otplab

#endif  // OTPLAB_SERIALIZATION_H_
