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

#include <cstddef>
#include <span>

namespace iplp {

// Shared numeric conventions. These constants are part of the library
// contract: every module (including the independent oracle) compares
// against the same thresholds.

/// Probability masses must sum to one within this tolerance.
inline constexpr double kMassTol = 1e-12;

/// Default tie tolerance for decision sets (maximin / maximality).
inline constexpr double kTieTol = 1e-9;

/// Constraint slack used by the feasibility indicator and LP feasibility
/// checks: a realization satisfies row i when (y.x)_i <= z_i + kFeasibilityTol.
inline constexpr double kFeasibilityTol = 1e-9;

/// Pivot magnitudes below this are treated as singular in active-set solves.
inline constexpr double kPivotTol = 1e-12;

/// Candidate decision vectors closer than this per coordinate are duplicates.
inline constexpr double kDedupTol = 1e-12;

/// Canonical dot product. All objective-value computations route through
/// this single accumulation order so that equal inputs give bitwise equal
/// values across modules.
inline double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    const std::size_t k = a.size() < b.size() ? a.size() : b.size();
    for (std::size_t i = 0; i < k; ++i) s += a[i] * b[i];
    return s;
}

} // namespace iplp
