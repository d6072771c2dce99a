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
#include <vector>

#include "iplp/problem.hpp"

namespace iplp {

// Utility reformulation of the uncertain LP and the two imprecise decision
// criteria over a finite candidate set.
//
// The decision utility assigns a feasible realization its objective value and
// an infeasible one the constant punishment L, with 0 < L below every
// guaranteed objective value in play, so that violating a constraint is
// always worse than any feasible outcome:
//     utility(x, r) = (u.x - L) * [y x <= z componentwise] + L.

enum class Provenance { GridPoint, NominalVertex };

struct CandidateSet {
    std::vector<DecisionVector> candidates;
    std::vector<Provenance> provenance;

    std::size_t size() const { return candidates.size(); }
};

void validate(const CandidateSet& cs, const UncertainLp& p);

enum class MaximalityStrategy {
    /// Piecewise analysis of utility differences per focal box: the joint
    /// feasibility pattern of the two candidates is detected at the box
    /// corners (plus an interior lattice for otherwise-undecided mixed
    /// patterns), and the u-part, linear under a fixed pattern, is maximized
    /// exactly at a u-corner. Approximate only in the mixed-pattern probe.
    FeasibilityCell,
    /// Dense lattice over the full box. Grid maxima under-estimate.
    Grid,
};

struct SolveOptions {
    int nFocal = 8;
    int candidateGridPerAxis = 21;
    double tieTol = kTieTol;
    MaximalityStrategy maximalityStrategy = MaximalityStrategy::FeasibilityCell;
    int interiorProbePoints = 5;  // 0 disables the interior mixed-pattern probe
    int maximalityGridPerAxis = 17;
    // Strict-dominance variant of maximality: x is kept only when
    // upper_diff(x, x') > 0 for every other candidate.
    bool paperLiteralMaximality = false;
    std::optional<double> punishment; // fixed L; unset => choose_punishment
};

struct DecisionOutcome {
    CandidateSet candidates;            // the filtered set actually evaluated
    std::vector<double> lowerUtility;   // per candidate
    std::vector<double> upperUtility;   // per candidate
    std::vector<int> maximinSet;        // indices into candidates, ascending
    std::vector<int> maximalSet;        // indices into candidates, ascending
    double punishmentUsed = 0.0;
    bool vacuous = false;               // every candidate's lower utility == L
};

/// (u.x - L) * [all m rows satisfy y x <= z + kFeasibilityTol] + L.
double utility(const DecisionVector& x, const Realization& r, double L);

/// Same function over a flat realization vector (canonical layout).
double utility_flat(int n, int m, std::span<const double> x, std::span<const double> r,
                    double L);

/// Guaranteed objective value: support-minimum objective dotted with x.
double guaranteed_objective(const UncertainLp& p, const DecisionVector& x);

/// Candidates with a strictly positive guaranteed objective, original order.
CandidateSet filter_candidates(const UncertainLp& p, const CandidateSet& cs);

/// Half the smallest guaranteed objective among candidates that keep one
/// strictly positive. EmptyAfterFilter if no candidate qualifies.
double choose_punishment(const UncertainLp& p, const CandidateSet& cs);

/// Lower expected utility of one candidate, using the coordinate-monotone
/// plan (utility is nondecreasing in u and z and nonincreasing in y for
/// x >= 0, as long as L stays below the guaranteed objective).
double lower_utility(const UncertainLp& p, const DecisionVector& x, double L,
                     const SolveOptions& opts);

double upper_utility(const UncertainLp& p, const DecisionVector& x, double L,
                     const SolveOptions& opts);

/// Upper expectation of utility(x) - utility(xprime).
double upper_utility_difference(const UncertainLp& p, const DecisionVector& x,
                                const DecisionVector& xprime, double L,
                                const SolveOptions& opts);

/// All candidates within tieTol of the best lower expected utility.
std::vector<int> maximin_decisions(const UncertainLp& p, const CandidateSet& cs, double L,
                                   const SolveOptions& opts);

/// All candidates x with upper_utility_difference(x, x') >= -tieTol for every
/// x' (or strictly positive for every x' != x in paper-literal mode).
std::vector<int> maximal_decisions(const UncertainLp& p, const CandidateSet& cs, double L,
                                   const SolveOptions& opts);

/// Uniform grid over the decision box, plus nominal-polytope vertices, plus
/// (for interval-typed problems) worst-case-counterpart vertices. Vertices
/// come first so they survive deduplication verbatim.
CandidateSet build_candidates(const UncertainLp& p, int gridPerAxis);

/// Full pipeline: filter, pick L, evaluate, decide.
DecisionOutcome decide(const UncertainLp& p, const CandidateSet& cs, const SolveOptions& opts);
DecisionOutcome decide(const UncertainLp& p, const SolveOptions& opts);

} // namespace iplp
