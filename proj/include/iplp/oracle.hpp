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
#include <vector>

#include "iplp/decision.hpp"
#include "iplp/problem.hpp"

namespace iplp::oracle {

// Independent brute-force verifiers. Everything here re-implements its own
// discretization, utility evaluation and extremum search over selection
// grids; only the domain types (and the shared numeric constants) are reused
// from the main path. A verifier that reuses the code under test verifies
// nothing.

enum class SelectionMode {
    EndpointsOnly,     // probe focal-interval endpoints (box corners) only
    EndpointsPlusGrid, // endpoints plus a gridPerAxis lattice per coordinate
};

struct OracleConfig {
    int gridPerAxis = 33;
    SelectionMode selectionMode = SelectionMode::EndpointsPlusGrid;
    std::uint64_t seed = 0;
    int nFocal = 8;                          // p-box slices
    long long evalBudget = 10'000'000;       // per expectation evaluation
};

/// Minimum mass-weighted sum over measurable selections across all focal
/// products. For a joint consisting of a single contamination entry, a sweep
/// of Dirac contaminations over the support grid is taken as well and the
/// smaller value returned. BudgetExceeded if the probe count would pass
/// cfg.evalBudget.
double brute_lower_expectation(const JointModel& joint, const RealFn& f,
                               const OracleConfig& cfg);

double brute_upper_expectation(const JointModel& joint, const RealFn& f,
                               const OracleConfig& cfg);

/// Argmax set (within kTieTol) of the brute-force lower expected utility.
std::vector<int> brute_maximin(const UncertainLp& p, const CandidateSet& cs, double L,
                               const OracleConfig& cfg);

/// Maximality by brute-force maxima of utility differences over selection
/// grids: x is kept when every pairwise upper difference is >= -kTieTol.
std::vector<int> brute_maximal(const UncertainLp& p, const CandidateSet& cs, double L,
                               const OracleConfig& cfg);

} // namespace iplp::oracle
