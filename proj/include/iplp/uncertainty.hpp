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

#include <functional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "iplp/defs.hpp"
#include "iplp/errors.hpp"

namespace iplp {

// ---------------------------------------------------------------------------
// Epistemic uncertainty models for a single scalar parameter, and the
// lower/upper expectation machinery over independent products of them.
//
// Every model reduces to a finite Dempster-Shafer structure (focal intervals
// with masses) for expectation computation:
//   - a point value is one zero-width focal element,
//   - an interval (vacuous model) is one full-width focal element,
//   - an epsilon-contamination is its center's atoms at mass (1-eps)p plus
//     the whole support at mass eps,
//   - a probability box is sliced into equal-mass focal elements by the
//     generalized inverses of its CDF bounds.
// ---------------------------------------------------------------------------

/// Closed bounded value range.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    double width() const { return hi - lo; }
    double midpoint() const { return 0.5 * (lo + hi); }
    bool contains(double v) const { return lo <= v && v <= hi; }
};

void validate(const Interval& iv, std::string_view what);

/// Finite support distribution with strictly increasing atom values.
struct DiscreteDistribution {
    std::vector<double> values;
    std::vector<double> probs;
};

void validate(const DiscreteDistribution& dist, std::string_view what);

/// (1-epsilon) * center + epsilon * (anything supported on `support`).
struct Contamination {
    DiscreteDistribution center;
    double epsilon = 0.0;
    Interval support;
};

void validate(const Contamination& c, std::string_view what);

enum class CdfInterp { Step, Linear };

/// Nondecreasing CDF defined by knots; constant 0 before the first knot and
/// constant at the last probability after the last knot.
struct CdfKnots {
    std::vector<double> x;
    std::vector<double> p;
    CdfInterp interp = CdfInterp::Step;
};

double cdf_eval(const CdfKnots& cdf, double v);

/// Generalized inverse inf{ v : F(v) >= prob }. `prob` must be in (0, 1].
double cdf_quantile(const CdfKnots& cdf, double prob);

/// CDF envelope: every distribution whose CDF lies between the bounds.
struct PBox {
    Interval support;
    CdfKnots lower;
    CdfKnots upper;
};

void validate(const PBox& pb, std::string_view what);

/// Tagged epistemic model of one scalar parameter.
struct UncertainScalar {
    std::variant<double, Interval, Contamination, PBox> model = 0.0;

    static UncertainScalar point(double v) { return {v}; }
    static UncertainScalar interval(double lo, double hi) { return {Interval{lo, hi}}; }
    static UncertainScalar contamination(Contamination c) { return {std::move(c)}; }
    static UncertainScalar pbox(PBox pb) { return {std::move(pb)}; }

    bool is_point() const { return std::holds_alternative<double>(model); }
    bool is_interval() const { return std::holds_alternative<Interval>(model); }
    bool is_contamination() const { return std::holds_alternative<Contamination>(model); }
    bool is_pbox() const { return std::holds_alternative<PBox>(model); }

    /// Smallest interval containing every realization the model admits.
    Interval support() const;
};

void validate(const UncertainScalar& s, std::string_view what);

struct FocalElement {
    Interval box;
    double mass = 0.0;
};

/// Finite list of (focal interval, mass) pairs within a declared support.
struct DsStructure {
    Interval support;
    std::vector<FocalElement> focal;
};

void validate(const DsStructure& ds, std::string_view what);

/// Ordered product of per-parameter models under random-set independence
/// (masses multiply, focal boxes are Cartesian products).
struct JointModel {
    std::vector<UncertainScalar> entries;
};

void validate(const JointModel& joint, std::string_view what);

/// Bounded test function of a full realization vector.
using RealFn = std::function<double(std::span<const double>)>;

enum class Direction { Nondecreasing, Nonincreasing };

enum class BoxStrategy {
    /// Caller declares a monotonicity direction per coordinate; box extrema
    /// are taken at the single corresponding corner. Exact for functions
    /// that are coordinatewise monotone over every focal box.
    CoordinateMonotone,
    /// Dense per-coordinate lattice (endpoints included). Grid minima
    /// over-estimate true minima by at most Lip * spacing / 2 per coordinate.
    Grid,
};

struct EvaluationPlan {
    BoxStrategy strategy = BoxStrategy::Grid;
    std::vector<Direction> directions; // one per entry; CoordinateMonotone only
    int gridPointsPerAxis = 17;
    int defaultFocal = 8;
    std::vector<int> focalPerEntry;    // empty => defaultFocal everywhere

    int focal_for(std::size_t entry) const {
        return entry < focalPerEntry.size() ? focalPerEntry[entry] : defaultFocal;
    }

    /// Plan for evaluating -f: monotone directions flip, grids are unchanged.
    EvaluationPlan flipped() const;

    static EvaluationPlan monotone(std::vector<Direction> dirs, int nFocal = 8);
    static EvaluationPlan grid(int pointsPerAxis = 17, int nFocal = 8);
};

/// Canonical discretization of one model into a Dempster-Shafer structure.
/// nFocal only matters for probability boxes; slicing happens at quantile
/// midpoints (i - 1/2)/nFocal so step CDFs never produce degenerate slices.
DsStructure to_ds(const UncertainScalar& model, int nFocal);

/// Lower expectation of f over the joint credal set:
/// sum over focal-box products of mass * (minimum of f over the box).
double lower_expectation(const JointModel& joint, const RealFn& f, const EvaluationPlan& plan);

/// Conjugate upper expectation, definitionally -lower_expectation(-f).
double upper_expectation(const JointModel& joint, const RealFn& f, const EvaluationPlan& plan);

/// Same computation over already-discretized entries.
double lower_expectation_ds(std::span<const DsStructure> entries, const RealFn& f,
                            const EvaluationPlan& plan);

/// Plain expectation under a precise discrete distribution.
double expectation_precise(const DiscreteDistribution& dist,
                           const std::function<double(double)>& f);

/// Enumerates the product focal boxes of `entries` in odometer order
/// (entry 0 outermost). The span passed to the callback is scratch storage,
/// valid only during the call.
void for_each_focal_box(std::span<const DsStructure> entries,
                        const std::function<void(double mass, std::span<const Interval>)>& fn);

/// Minimum of f over one box under the plan's strategy. Raises
/// UnboundedFunction if f evaluates non-finite at any probed point.
double box_minimum(const RealFn& f, std::span<const Interval> box, const EvaluationPlan& plan);

} // namespace iplp
