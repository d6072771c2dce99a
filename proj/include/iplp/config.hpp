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

#include <optional>
#include <string>
#include <vector>

#include "iplp/decision.hpp"
#include "iplp/harness.hpp"
#include "iplp/problem.hpp"

namespace iplp {

// JSON run configuration. Parsing is strict: unknown keys are rejected,
// invariant violations name the offending field, and decision-relevant
// method parameters (coverage, epsilon, ksAlpha) have no defaults.

enum class RunMode { Solve, Verify, Experiment };

struct SolveConfig {
    UncertainLp problem;
    SolveOptions options;
    // Explicit candidate list; when absent candidates are built from the
    // grid and polytope vertices.
    std::optional<std::vector<DecisionVector>> candidates;
};

struct ExperimentConfig {
    TaskSpec task;
    std::vector<ImprecisePredictionMethod> methods;
    DecisionCriterion criterion = DecisionCriterion::Maximin;
    SolveOptions options;
};

struct RunConfig {
    RunMode mode = RunMode::Solve;
    std::optional<SolveConfig> solve;
    std::optional<ExperimentConfig> experiment;
};

/// Parses and validates; throws Error(Config) naming the offending field.
RunConfig parse_config(const std::string& jsonText);

/// Canonical serialization; parse_config(serialize_config(c)) == c.
std::string serialize_config(const RunConfig& config);

bool operator==(const RunConfig& a, const RunConfig& b);

} // namespace iplp
