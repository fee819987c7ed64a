// Copyright 2026 The phaseret Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PHASERET_IO_HPP_
#define PHASERET_IO_HPP_

#include <string>
#include <vector>

#include "json.hpp"
#include "phaseret/equivalence.hpp"
#include "phaseret/grid_signal.hpp"
#include "phaseret/measurement.hpp"
#include "phaseret/trigpoly.hpp"

namespace phaseret::io {

using Json = nlohmann::json;

// Readers throw InvalidArgument on malformed or inconsistent documents.

/// { "n": int, "extent": float, "values": [[re, im], ...] }
Json to_json(const GridSignal& signal);
GridSignal signal_from_json(const Json& doc);

/// { "kind": tag, ... }; gauss_sine carries "a" as "p/q" when exact, else a number.
Json to_json(const MaskKind& mask);
MaskKind mask_from_json(const Json& doc);

/// { "mask": {...}, "n": int, "extent": float, "magnitudes": [...] }; n and
/// extent describe the time grid of the measured signal.
Json to_json(const MeasurementRecord& record);
MeasurementRecord record_from_json(const Json& doc);
/// Header "xi,magnitude", one row per frequency sample.
std::string record_to_csv(const MeasurementRecord& record);

/// { "N": int, "coeffs": [[re, im], ...] }
Json to_json(const TrigPoly& p);
TrigPoly trigpoly_from_json(const Json& doc);
Json to_json(const std::vector<TrigPoly>& list);
std::vector<TrigPoly> trigpoly_list_from_json(const Json& doc);
/// Header "k,x_k,value" with x_k = k / values.size().
std::string samples_to_csv(const std::vector<double>& values);

/// { "kind": string, "constant": [re, im], "residual": float }
Json to_json(const EquivalenceVerdict& verdict);
EquivalenceVerdict verdict_from_json(const Json& doc);

Json complex_to_json(Complex z);
Complex complex_from_json(const Json& doc);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
/// Pretty-printed with a trailing newline.
void write_json_file(const std::string& path, const Json& doc);

}  // namespace phaseret::io

#endif  // PHASERET_IO_HPP_
