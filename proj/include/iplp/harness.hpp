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
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "iplp/decision.hpp"
#include "iplp/problem.hpp"

namespace iplp {

// Predict-then-optimize experiment pipeline: generate synthetic contextual
// LP data, fit a least-squares point predictor, wrap its residuals into
// imprecise predictions (point / interval band / contamination band / p-box
// band with a Kolmogorov-Smirnov widening that grows as training data
// shrinks), decide under the chosen criterion, and score each method by
// regret against the true-parameter optimum.

struct TaskSpec {
    int n = 1;
    int m = 1;
    int featureDim = 2;
    // (n + m*n + m) x featureDim row-major map from features to parameter means.
    std::vector<double> trueWeights;
    double noiseScale = 0.0;
    std::vector<Interval> xBounds; // n
    int trainSize = 0;
    int testSize = 0;
    std::uint64_t seed = 0;
};

void validate(const TaskSpec& spec);

struct Sample {
    std::vector<double> features;
    Realization truth;
};

struct Dataset {
    std::vector<Sample> train;
    std::vector<Sample> test;
};

/// Features uniform on [0,1]^d, parameters = trueWeights * features +
/// noiseScale * normal draw, then each z_i raised if needed so the nominal
/// polytope contains 0.1 * box center. Bit-identical for a fixed seed.
Dataset generate_dataset(const TaskSpec& spec);

struct PointPredictor {
    int featureDim = 0;
    std::vector<double> weights;                 // P x featureDim row-major
    std::vector<std::vector<double>> residuals;  // per parameter, train order
};

/// Ordinary least squares per parameter; residual vectors retained for band
/// construction. RankDeficient if the normal system is singular beyond 1e-10.
PointPredictor fit_point_predictor(const std::vector<Sample>& train, const TaskSpec& spec);

struct PointOnly {};
struct IntervalBand { double coverage = 1.0; };      // in (0, 1]
struct ContaminationBand { double epsilon = 0.0; };  // in [0, 1]
struct PBoxBand { double ksAlpha = 0.05; };          // in (0, 1)

struct ImprecisePredictionMethod {
    std::variant<PointOnly, IntervalBand, ContaminationBand, PBoxBand> method = PointOnly{};
    std::string name() const;
};

void validate(const ImprecisePredictionMethod& method);

/// Per parameter: center = predictor output; residual quantile bands give the
/// interval model, the full-range band gives the contamination support, and
/// the residual empirical CDF +- sqrt(ln(2/alpha)/(2N)) gives the p-box.
UncertainLp build_imprecise_prediction(const PointPredictor& predictor,
                                       const std::vector<double>& features,
                                       const ImprecisePredictionMethod& method,
                                       const TaskSpec& spec);

/// Optimal true-parameter value minus the value achieved by `decision`
/// (its objective if feasible at the truth, 0 otherwise), clamped at >= 0.
/// nullopt when the true LP itself is infeasible (instance skipped).
std::optional<double> evaluate_regret(const DecisionVector& decision, const Realization& truth,
                                      const std::vector<Interval>& xBounds);

enum class DecisionCriterion { Maximin, MaximalThenFirst };

struct ExperimentRow {
    int instance = 0;
    std::string method;
    std::string status;            // ok | skipped-infeasible | error-<kind>
    double regret = 0.0;           // valid when status == ok
    bool vacuous = false;
    std::vector<double> decision;  // empty on error rows
};

struct MethodStats {
    std::string method;
    int evaluated = 0;
    int skipped = 0;
    int errors = 0;
    double meanRegret = 0.0;
    double worstRegret = 0.0;
    double vacuousRate = 0.0;
};

struct RegretReport {
    std::uint64_t seed = 0;
    int instances = 0;
    int n = 0;
    std::vector<std::string> methodOrder;
    std::vector<MethodStats> stats;   // in declared method order
    std::vector<ExperimentRow> rows;  // instance-major, method order within
};

/// Full sweep over the test set; instances hitting errors are recorded per
/// row, never silently dropped. Deterministic given the spec seed.
RegretReport run_experiment(const TaskSpec& spec,
                            const std::vector<ImprecisePredictionMethod>& methods,
                            DecisionCriterion criterion, const SolveOptions& opts);

/// Half-width of the Kolmogorov-Smirnov confidence band at level alpha.
double ks_band_half_width(int sampleSize, double alpha);

} // namespace iplp
