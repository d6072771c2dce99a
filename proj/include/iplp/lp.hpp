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

#include <vector>

#include "iplp/problem.hpp"

namespace iplp {

// Exact solver for small deterministic LPs by enumeration of basic feasible
// solutions. Correctness and determinism over speed: every subset of n active
// constraints (from the m + 2n candidates) is solved by partial-pivot
// elimination, singular active sets are skipped, ties are broken by the
// lexicographically smallest x.

/// max c.x  s.t.  A x <= b,  x within per-axis bounds (lo >= 0, hi finite).
struct DeterministicLp {
    int n = 0;
    int m = 0;
    std::vector<double> c;        // n
    std::vector<double> a;        // m*n row major
    std::vector<double> b;        // m
    std::vector<Interval> xBounds; // n
};

void validate(const DeterministicLp& lp);

enum class LpStatus { Optimal, Infeasible };

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    std::vector<double> x;        // empty unless Optimal
    double value = 0.0;           // c.x at the optimum
    std::vector<int> activeSet;   // indices of the n active constraints
};

/// Enumeration guard: solve_exact and the vertex enumerators refuse
/// problems with n + m above this.
inline constexpr int kEnumerationGuard = 14;

LpSolution solve_exact(const DeterministicLp& lp);

/// All feasible vertices of {A x <= b, bounds}, deduplicated within 1e-9.
std::vector<std::vector<double>> feasible_vertices(const DeterministicLp& lp);

/// Worst-case counterpart of an interval-typed problem: objective at support
/// minima, constraint matrix at support maxima, right-hand side at support
/// minima. WrongModel error if any entry is a contamination or p-box.
DeterministicLp robust_counterpart(const UncertainLp& problem);

/// Feasible vertices of the nominal polytope taken at support midpoints.
std::vector<DecisionVector> nominal_vertices(const UncertainLp& problem);

} // namespace iplp
