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

#include <cstdint>
#include <string>
#include <vector>

#include "iplp/decision.hpp"
#include "iplp/problem.hpp"
#include "iplp/rng.hpp"

namespace iplp::verify {

// Seeded property suite pitting the main computation path against the
// independent brute-force oracle. The CLI `verify` subcommand runs all
// checks; the acceptance tests run them at larger instance counts.

struct PropertyResult {
    std::string name;
    bool pass = false;
    double maxDeviation = 0.0;
    std::string detail;
};

struct SuiteOptions {
    std::uint64_t seed = 20260809;
    // Self-test hook: scales every tolerance. 1 is the real suite; smaller
    // values deliberately corrupt the thresholds so failures surface.
    double toleranceScale = 1.0;
    int conjugacyModels = 120;
    int collapseInstances = 40;
    int contaminationModels = 80;
    int pboxCdfs = 8;
    int agreementModels = 200;
    int decisionInstances = 25;
    int punishmentInstances = 20;
    int counterpartInstances = 40;
    int oracleGridPerAxis = 33;
    long long evalBudget = 10'000'000;
};

PropertyResult check_conjugacy_sandwich(const SuiteOptions& opts);
PropertyResult check_precise_collapse(const SuiteOptions& opts);
PropertyResult check_contamination_closed_form(const SuiteOptions& opts);
PropertyResult check_pbox_refinement(const SuiteOptions& opts);
PropertyResult check_expectation_agreement(const SuiteOptions& opts);
// Runs maximin/maximal agreement against the oracle; `inclusion` receives the
// maximin-subset-of-maximal tally from the same instances.
PropertyResult check_decision_agreement(const SuiteOptions& opts, PropertyResult* inclusion);
PropertyResult check_punishment_irrelevance(const SuiteOptions& opts);
PropertyResult check_counterpart_equivalence(const SuiteOptions& opts);

std::vector<PropertyResult> run_all(const SuiteOptions& opts);

std::string format_results(const std::vector<PropertyResult>& results,
                           const SuiteOptions& opts);

bool all_pass(const std::vector<PropertyResult>& results);

// --- shared random-instance generators (used by the checks and the tests) ---

enum class ModelClass { PointOnly, Intervals, Contaminations, PBoxes, Mixed };

UncertainScalar random_scalar(Rng& rng, ModelClass cls, double center, double spread);

/// Bounded test function with known per-coordinate Lipschitz bounds on the
/// given boxes; `monotone` holds directions when every family member is
/// coordinatewise monotone.
struct TestFunction {
    RealFn f;
    std::vector<double> lipPerCoord;
    std::vector<Direction> monotone; // empty when not coordinatewise monotone
    std::string name;
};

TestFunction random_test_function(Rng& rng, const std::vector<Interval>& supports);

/// Small uncertain LP (n, m <= 2) with positive objective supports and a
/// nonempty robust polytope; entry models drawn from `cls`.
UncertainLp random_problem(Rng& rng, ModelClass cls, int n, int m);

} // namespace iplp::verify
