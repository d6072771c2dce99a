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

#include "iplp/uncertainty.hpp"

namespace iplp {

// Shared problem-level domain types. The realization layout used everywhere
// (joint models, flat realization vectors, oracle probes) is
//   [ u_0..u_{n-1}, y_00..y_{m-1,n-1} (row major), z_0..z_{m-1} ].

/// Linear program max u.x s.t. y x <= z, x in box, with every scalar
/// parameter carrying its own epistemic model.
struct UncertainLp {
    int n = 0; // decision variables
    int m = 0; // constraint rows
    std::vector<Interval> xBounds;            // n, lo >= 0, hi finite
    std::vector<UncertainScalar> objective;   // n entries (u)
    std::vector<UncertainScalar> constraints; // m*n entries, row major (y)
    std::vector<UncertainScalar> rhs;         // m entries (z)

    std::size_t parameter_count() const {
        return objective.size() + constraints.size() + rhs.size();
    }

    /// Entries in canonical layout order.
    JointModel joint() const;

    /// True when every entry is a point or an interval.
    bool interval_typed() const;
};

void validate(const UncertainLp& p);

struct DecisionVector {
    std::vector<double> x;
};

/// One realization of all random parameters.
struct Realization {
    std::vector<double> u; // n
    std::vector<double> y; // m*n row major
    std::vector<double> z; // m

    std::vector<double> flat() const;
    static Realization from_flat(std::span<const double> r, int n, int m);
};

/// Per-entry support minima of the objective coefficients.
std::vector<double> objective_support_lower(const UncertainLp& p);

} // namespace iplp
