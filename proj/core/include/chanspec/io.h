// Copyright 2026 The chanspec Authors
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

// File formats. Complex numbers are [re, im] pairs; matrices are arrays of
// rows. All parse failures throw PreconditionError("bad_format").
//
//   channel     {"d": int, "repr": "kraus"|"superop"|"choi", "data": ...}
//   stochastic  {"n": int, "data": row-major flat array (nested accepted)}
//   cycle spec  {"cycles": [{"n": int, "d": int, "mu": [[re, im], ...]}]}
//   series      CSV, one value per line, "re" or "re,im"

#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "chanspec/channel.h"
#include "chanspec/cycles.h"
#include "chanspec/nonneg.h"
#include "chanspec/qubit.h"
#include "chanspec/synthesis.h"
#include "chanspec/timeseries.h"

namespace chanspec {

using Json = nlohmann::json;

/// Serialises with every floating-point number printed as %.17g, so equal
/// values always produce equal bytes. Keys are sorted. NaN/inf become null.
std::string dump_json(const Json &j, int indent = 2);

Json complex_to_json(Complex z);
/// Accepts a number or a [re, im] pair.
Complex complex_from_json(const Json &j);

Json matrix_to_json(const ComplexMatrix &m);
ComplexMatrix complex_matrix_from_json(const Json &j);
Json real_matrix_to_json(const RealMatrix &m);

Json spectrum_to_json(const SpectrumMultiset &s);
SpectrumMultiset spectrum_from_json(const Json &j);

/// `repr` defaults to the channel's native representation.
Json channel_to_json(const Channel &c, std::optional<Repr> repr = std::nullopt);
Channel channel_from_json(const Json &j);

Json stochastic_to_json(const RealMatrix &s);
RealMatrix stochastic_from_json(const Json &j);

Json cycle_spec_to_json(const CycleSpec &spec);
CycleSpec cycle_spec_from_json(const Json &j);

Series read_series_csv(std::istream &in);
void write_series_csv(std::ostream &out, const Series &s);

Json verification_to_json(const VerificationReport &r);
Json moment_report_to_json(const MomentReport &r);
Json tetra_point_to_json(const TetraPoint &p);
Json qubit_verdict_to_json(const QubitSpectrumVerdict &v);
Json recurrence_to_json(const RecurrenceModel &m);
Json series_verdict_to_json(const SeriesVerdict &v);

/// {route, d, target, achieved, kernel_added, residuals} plus status fields.
Json synthesis_report_to_json(const SynthesisOutcome &outcome);

Json read_json_file(const std::filesystem::path &path);
void write_text_file(const std::filesystem::path &path, const std::string &text);

}  // namespace chanspec
