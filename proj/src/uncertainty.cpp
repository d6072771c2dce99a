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

#include "iplp/uncertainty.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace iplp {

namespace {

std::string where(std::string_view what) { return std::string(what); }

double checked_eval(const RealFn& f, std::span<const double> point) {
    const double v = f(point);
    if (!std::isfinite(v)) {
        raise(ErrorKind::UnboundedFunction,
              "test function evaluated to a non-finite value");
    }
    return v;
}

} // namespace

void validate(const Interval& iv, std::string_view what) {
    if (!std::isfinite(iv.lo) || !std::isfinite(iv.hi)) {
        raise(ErrorKind::InvalidArgument, where(what) + ": interval bounds must be finite");
    }
    if (iv.lo > iv.hi) {
        raise(ErrorKind::InvalidArgument, where(what) + ": interval lo exceeds hi");
    }
}

void validate(const DiscreteDistribution& dist, std::string_view what) {
    if (dist.values.empty() || dist.values.size() != dist.probs.size()) {
        raise(ErrorKind::InvalidArgument,
              where(what) + ": distribution needs matching nonempty values/probs");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < dist.values.size(); ++i) {
        if (!std::isfinite(dist.values[i])) {
            raise(ErrorKind::InvalidArgument, where(what) + ": atom value not finite");
        }
        if (i > 0 && !(dist.values[i] > dist.values[i - 1])) {
            raise(ErrorKind::InvalidArgument,
                  where(what) + ": atom values must be strictly increasing");
        }
        if (dist.probs[i] < 0.0) {
            raise(ErrorKind::InvalidArgument, where(what) + ": negative probability");
        }
        sum += dist.probs[i];
    }
    if (std::abs(sum - 1.0) > kMassTol) {
        raise(ErrorKind::InvalidArgument, where(what) + ": probabilities must sum to 1");
    }
}

void validate(const Contamination& c, std::string_view what) {
    validate(c.center, what);
    validate(c.support, what);
    if (!(c.epsilon >= 0.0 && c.epsilon <= 1.0)) {
        raise(ErrorKind::InvalidArgument, where(what) + ": epsilon must lie in [0,1]");
    }
    for (double v : c.center.values) {
        if (!c.support.contains(v)) {
            raise(ErrorKind::InvalidArgument,
                  where(what) + ": center atom outside the declared support");
        }
    }
}

double cdf_eval(const CdfKnots& cdf, double v) {
    if (cdf.x.empty()) return 0.0;
    if (v < cdf.x.front()) return 0.0;
    if (v >= cdf.x.back()) return cdf.p.back();
    // last knot index with x <= v
    const auto it = std::upper_bound(cdf.x.begin(), cdf.x.end(), v);
    const std::size_t k = static_cast<std::size_t>(it - cdf.x.begin()) - 1;
    if (cdf.interp == CdfInterp::Step) return cdf.p[k];
    const double x0 = cdf.x[k], x1 = cdf.x[k + 1];
    const double p0 = cdf.p[k], p1 = cdf.p[k + 1];
    if (x1 == x0) return p1;
    return p0 + (p1 - p0) * (v - x0) / (x1 - x0);
}

double cdf_quantile(const CdfKnots& cdf, double prob) {
    if (cdf.x.empty()) {
        raise(ErrorKind::InvalidArgument, "quantile of an empty CDF");
    }
    if (prob <= 0.0) return cdf.x.front();
    // first knot with p >= prob
    std::size_t k = 0;
    while (k < cdf.p.size() && cdf.p[k] < prob) ++k;
    if (k == cdf.p.size()) return cdf.x.back();
    if (cdf.interp == CdfInterp::Step || k == 0) return cdf.x[k];
    const double p0 = cdf.p[k - 1], p1 = cdf.p[k];
    if (p1 <= p0) return cdf.x[k];
    // F is linear between knots k-1 and k and crosses prob inside the piece.
    return cdf.x[k - 1] + (prob - p0) / (p1 - p0) * (cdf.x[k] - cdf.x[k - 1]);
}

void validate(const PBox& pb, std::string_view what) {
    validate(pb.support, what);
    auto check_knots = [&](const CdfKnots& cdf, const char* side) {
        if (cdf.x.empty() || cdf.x.size() != cdf.p.size()) {
            raise(ErrorKind::InvalidArgument,
                  where(what) + ": " + side + " CDF needs matching nonempty knots");
        }
        for (std::size_t i = 0; i < cdf.x.size(); ++i) {
            if (!std::isfinite(cdf.x[i]) || !std::isfinite(cdf.p[i])) {
                raise(ErrorKind::InvalidArgument, where(what) + ": non-finite CDF knot");
            }
            if (cdf.p[i] < -kMassTol || cdf.p[i] > 1.0 + kMassTol) {
                raise(ErrorKind::InvalidArgument,
                      where(what) + ": CDF value outside [0,1]");
            }
            if (i > 0 && cdf.x[i] <= cdf.x[i - 1]) {
                raise(ErrorKind::InvalidArgument,
                      where(what) + ": CDF knot positions must be strictly increasing");
            }
            if (i > 0 && cdf.p[i] < cdf.p[i - 1] - kMassTol) {
                raise(ErrorKind::InvalidArgument, where(what) + ": CDF must be nondecreasing");
            }
            if (cdf.x[i] < pb.support.lo - kMassTol || cdf.x[i] > pb.support.hi + kMassTol) {
                raise(ErrorKind::InvalidArgument,
                      where(what) + ": CDF knot outside the support");
            }
        }
        if (std::abs(cdf.p.back() - 1.0) > kMassTol) {
            raise(ErrorKind::InvalidArgument,
                  where(what) + ": " + side + " CDF must reach 1 at the support top");
        }
    };
    check_knots(pb.lower, "lower");
    check_knots(pb.upper, "upper");
    // lower <= upper pointwise; knot positions of both are the only places
    // the step/linear envelope can cross.
    std::vector<double> probes = pb.lower.x;
    probes.insert(probes.end(), pb.upper.x.begin(), pb.upper.x.end());
    probes.push_back(pb.support.lo);
    probes.push_back(pb.support.hi);
    for (double v : probes) {
        if (cdf_eval(pb.lower, v) > cdf_eval(pb.upper, v) + 1e-12) {
            raise(ErrorKind::InvalidArgument,
                  where(what) + ": lower CDF exceeds upper CDF");
        }
    }
}

Interval UncertainScalar::support() const {
    if (const double* v = std::get_if<double>(&model)) return {*v, *v};
    if (const Interval* iv = std::get_if<Interval>(&model)) return *iv;
    if (const Contamination* c = std::get_if<Contamination>(&model)) return c->support;
    return std::get<PBox>(model).support;
}

void validate(const UncertainScalar& s, std::string_view what) {
    if (const double* v = std::get_if<double>(&s.model)) {
        if (!std::isfinite(*v)) {
            raise(ErrorKind::InvalidArgument, where(what) + ": point value not finite");
        }
        return;
    }
    if (const Interval* iv = std::get_if<Interval>(&s.model)) {
        validate(*iv, what);
        return;
    }
    if (const Contamination* c = std::get_if<Contamination>(&s.model)) {
        validate(*c, what);
        return;
    }
    validate(std::get<PBox>(s.model), what);
}

void validate(const DsStructure& ds, std::string_view what) {
    if (ds.focal.empty()) {
        raise(ErrorKind::InvalidArgument, where(what) + ": empty focal list");
    }
    double sum = 0.0;
    for (const FocalElement& fe : ds.focal) {
        validate(fe.box, what);
        if (fe.mass < 0.0) {
            raise(ErrorKind::InvalidArgument, where(what) + ": negative focal mass");
        }
        if (fe.box.lo < ds.support.lo - 1e-12 || fe.box.hi > ds.support.hi + 1e-12) {
            raise(ErrorKind::InvalidArgument,
                  where(what) + ": focal interval outside the declared support");
        }
        sum += fe.mass;
    }
    if (std::abs(sum - 1.0) > kMassTol) {
        raise(ErrorKind::InvalidArgument, where(what) + ": focal masses must sum to 1");
    }
}

void validate(const JointModel& joint, std::string_view what) {
    if (joint.entries.empty()) {
        raise(ErrorKind::InvalidArgument, where(what) + ": joint model has no entries");
    }
    for (std::size_t i = 0; i < joint.entries.size(); ++i) {
        validate(joint.entries[i], std::string(what) + ".entries[" + std::to_string(i) + "]");
    }
}

EvaluationPlan EvaluationPlan::flipped() const {
    EvaluationPlan out = *this;
    for (Direction& d : out.directions) {
        d = d == Direction::Nondecreasing ? Direction::Nonincreasing
                                          : Direction::Nondecreasing;
    }
    return out;
}

EvaluationPlan EvaluationPlan::monotone(std::vector<Direction> dirs, int nFocal) {
    EvaluationPlan plan;
    plan.strategy = BoxStrategy::CoordinateMonotone;
    plan.directions = std::move(dirs);
    plan.defaultFocal = nFocal;
    return plan;
}

EvaluationPlan EvaluationPlan::grid(int pointsPerAxis, int nFocal) {
    EvaluationPlan plan;
    plan.strategy = BoxStrategy::Grid;
    plan.gridPointsPerAxis = pointsPerAxis;
    plan.defaultFocal = nFocal;
    return plan;
}

DsStructure to_ds(const UncertainScalar& model, int nFocal) {
    if (nFocal < 1) {
        raise(ErrorKind::InvalidArgument, "to_ds: nFocal must be >= 1");
    }
    validate(model, "to_ds.model");
    DsStructure ds;
    ds.support = model.support();

    if (const double* v = std::get_if<double>(&model.model)) {
        ds.focal.push_back({{*v, *v}, 1.0});
        return ds;
    }
    if (const Interval* iv = std::get_if<Interval>(&model.model)) {
        ds.focal.push_back({*iv, 1.0});
        return ds;
    }
    if (const Contamination* c = std::get_if<Contamination>(&model.model)) {
        // Atoms keep (1-eps) of their center mass; the support carries eps.
        for (std::size_t i = 0; i < c->center.values.size(); ++i) {
            const double mass = (1.0 - c->epsilon) * c->center.probs[i];
            if (mass > 0.0) {
                ds.focal.push_back({{c->center.values[i], c->center.values[i]}, mass});
            }
        }
        if (c->epsilon > 0.0) {
            ds.focal.push_back({c->support, c->epsilon});
        }
        if (ds.focal.empty()) { // eps == 0 with all-zero masses cannot happen; guard anyway
            ds.focal.push_back({c->support, 1.0});
        }
        return ds;
    }

    const PBox& pb = std::get<PBox>(model.model);
    const double mass = 1.0 / static_cast<double>(nFocal);
    for (int i = 0; i < nFocal; ++i) {
        const double t = (static_cast<double>(i) + 0.5) / static_cast<double>(nFocal);
        double lo = cdf_quantile(pb.upper, t);
        double hi = cdf_quantile(pb.lower, t);
        lo = std::clamp(lo, pb.support.lo, pb.support.hi);
        hi = std::clamp(hi, pb.support.lo, pb.support.hi);
        if (hi < lo) hi = lo; // float dust from the two interpolations
        ds.focal.push_back({{lo, hi}, mass});
    }
    return ds;
}

double box_minimum(const RealFn& f, std::span<const Interval> box, const EvaluationPlan& plan) {
    std::vector<double> point(box.size());
    if (plan.strategy == BoxStrategy::CoordinateMonotone) {
        if (plan.directions.size() != box.size()) {
            raise(ErrorKind::InvalidArgument,
                  "box_minimum: monotone plan needs one direction per coordinate");
        }
        for (std::size_t c = 0; c < box.size(); ++c) {
            point[c] = plan.directions[c] == Direction::Nondecreasing ? box[c].lo : box[c].hi;
        }
        return checked_eval(f, point);
    }

    const int g = std::max(plan.gridPointsPerAxis, 2);
    std::vector<int> idx(box.size(), 0);
    auto value_at = [&](std::size_t c, int k) {
        const Interval& iv = box[c];
        if (iv.hi == iv.lo) return iv.lo;
        return iv.lo + (iv.hi - iv.lo) * static_cast<double>(k) / static_cast<double>(g - 1);
    };
    for (std::size_t c = 0; c < box.size(); ++c) point[c] = value_at(c, 0);
    double best = checked_eval(f, point);
    while (true) {
        std::size_t c = 0;
        while (c < box.size()) {
            if (++idx[c] < g) {
                point[c] = value_at(c, idx[c]);
                break;
            }
            idx[c] = 0;
            point[c] = value_at(c, 0);
            ++c;
        }
        if (c == box.size()) break;
        best = std::min(best, checked_eval(f, point));
    }
    return best;
}

void for_each_focal_box(std::span<const DsStructure> entries,
                        const std::function<void(double, std::span<const Interval>)>& fn) {
    const std::size_t k = entries.size();
    std::vector<std::size_t> idx(k, 0);
    std::vector<Interval> box(k);
    std::vector<double> massPrefix(k + 1, 1.0);

    // Odometer over focal products, entry 0 outermost; the mass prefix keeps
    // products deterministic regardless of per-entry counts.
    while (true) {
        for (std::size_t e = 0; e < k; ++e) {
            const FocalElement& fe = entries[e].focal[idx[e]];
            box[e] = fe.box;
            massPrefix[e + 1] = massPrefix[e] * fe.mass;
        }
        fn(massPrefix[k], box);
        std::size_t e = k;
        while (e > 0) {
            --e;
            if (++idx[e] < entries[e].focal.size()) break;
            idx[e] = 0;
            if (e == 0) return;
        }
        if (k == 0) return;
    }
}

double lower_expectation_ds(std::span<const DsStructure> entries, const RealFn& f,
                            const EvaluationPlan& plan) {
    double total = 0.0;
    for_each_focal_box(entries, [&](double mass, std::span<const Interval> box) {
        if (mass == 0.0) return;
        total += mass * box_minimum(f, box, plan);
    });
    return total;
}

double lower_expectation(const JointModel& joint, const RealFn& f, const EvaluationPlan& plan) {
    validate(joint, "lower_expectation.joint");
    std::vector<DsStructure> entries;
    entries.reserve(joint.entries.size());
    for (std::size_t i = 0; i < joint.entries.size(); ++i) {
        entries.push_back(to_ds(joint.entries[i], plan.focal_for(i)));
    }
    return lower_expectation_ds(entries, f, plan);
}

double upper_expectation(const JointModel& joint, const RealFn& f, const EvaluationPlan& plan) {
    const RealFn neg = [&f](std::span<const double> r) { return -f(r); };
    return -lower_expectation(joint, neg, plan.flipped());
}

double expectation_precise(const DiscreteDistribution& dist,
                           const std::function<double(double)>& f) {
    validate(dist, "expectation_precise.dist");
    double total = 0.0;
    for (std::size_t i = 0; i < dist.values.size(); ++i) {
        total += dist.probs[i] * f(dist.values[i]);
    }
    return total;
}

} // namespace iplp
