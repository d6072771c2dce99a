// Copyright 2026 the iplp authors
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

#pragma once

#include <string>

#include "iplp/decision.hpp"
#include "iplp/harness.hpp"

namespace iplp {

/// Shortest round-trip decimal form via std::to_chars: locale independent,
/// byte deterministic.
std::string fmt_double(double v);

/// Structured-text solve report (one block per candidate, LF line endings).
std::string outcome_text(const DecisionOutcome& outcome);

/// Machine-readable solve report.
std::string outcome_json(const DecisionOutcome& outcome);

/// Experiment summary, one line per method in declared order.
std::string report_text(const RegretReport& report);

std::string report_json(const RegretReport& report);

/// Flat table: header row, one row per (instance, method), comma separated,
/// LF line endings, fixed column order.
std::string report_csv(const RegretReport& report);

} // namespace iplp
