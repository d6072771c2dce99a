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

#include "iplp/lp.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace iplp {

namespace {

// Inequality system G x <= h holding the m constraint rows followed by the
// 2n bound rows (x_j <= hi_j, then -x_j <= -lo_j).
struct RowSystem {
    int n = 0;
    int rows = 0;
    std::vector<double> coeff; // rows x n
    std::vector<double> rhs;
};

RowSystem build_rows(const DeterministicLp& lp) {
    RowSystem sys;
    sys.n = lp.n;
    sys.rows = lp.m + 2 * lp.n;
    sys.coeff.assign(static_cast<std::size_t>(sys.rows) * lp.n, 0.0);
    sys.rhs.assign(sys.rows, 0.0);
    for (int i = 0; i < lp.m; ++i) {
        for (int j = 0; j < lp.n; ++j) {
            sys.coeff[static_cast<std::size_t>(i) * lp.n + j] =
                lp.a[static_cast<std::size_t>(i) * lp.n + j];
        }
        sys.rhs[i] = lp.b[i];
    }
    for (int j = 0; j < lp.n; ++j) {
        sys.coeff[static_cast<std::size_t>(lp.m + j) * lp.n + j] = 1.0;
        sys.rhs[lp.m + j] = lp.xBounds[j].hi;
        sys.coeff[static_cast<std::size_t>(lp.m + lp.n + j) * lp.n + j] = -1.0;
        sys.rhs[lp.m + lp.n + j] = -lp.xBounds[j].lo;
    }
    return sys;
}

// Solves the n x n active-set system by partial-pivot elimination.
// Returns false when a pivot falls below kPivotTol (singular set, skipped).
bool solve_active(const RowSystem& sys, const std::vector<int>& active,
                  std::vector<double>& x) {
    const int n = sys.n;
    std::vector<double> a(static_cast<std::size_t>(n) * (n + 1));
    for (int r = 0; r < n; ++r) {
        const int row = active[r];
        for (int c = 0; c < n; ++c) {
            a[static_cast<std::size_t>(r) * (n + 1) + c] =
                sys.coeff[static_cast<std::size_t>(row) * n + c];
        }
        a[static_cast<std::size_t>(r) * (n + 1) + n] = sys.rhs[row];
    }
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        double best = std::abs(a[static_cast<std::size_t>(col) * (n + 1) + col]);
        for (int r = col + 1; r < n; ++r) {
            const double v = std::abs(a[static_cast<std::size_t>(r) * (n + 1) + col]);
            if (v > best) {
                best = v;
                pivot = r;
            }
        }
        if (best < kPivotTol) return false;
        if (pivot != col) {
            for (int c = col; c <= n; ++c) {
                std::swap(a[static_cast<std::size_t>(col) * (n + 1) + c],
                          a[static_cast<std::size_t>(pivot) * (n + 1) + c]);
            }
        }
        const double diag = a[static_cast<std::size_t>(col) * (n + 1) + col];
        for (int r = col + 1; r < n; ++r) {
            const double factor = a[static_cast<std::size_t>(r) * (n + 1) + col] / diag;
            if (factor == 0.0) continue;
            for (int c = col; c <= n; ++c) {
                a[static_cast<std::size_t>(r) * (n + 1) + c] -=
                    factor * a[static_cast<std::size_t>(col) * (n + 1) + c];
            }
        }
    }
    x.assign(n, 0.0);
    for (int r = n - 1; r >= 0; --r) {
        double v = a[static_cast<std::size_t>(r) * (n + 1) + n];
        for (int c = r + 1; c < n; ++c) {
            v -= a[static_cast<std::size_t>(r) * (n + 1) + c] * x[c];
        }
        x[r] = v / a[static_cast<std::size_t>(r) * (n + 1) + r];
    }
    return true;
}

bool feasible(const RowSystem& sys, const std::vector<double>& x) {
    for (int r = 0; r < sys.rows; ++r) {
        double v = 0.0;
        for (int c = 0; c < sys.n; ++c) {
            v += sys.coeff[static_cast<std::size_t>(r) * sys.n + c] * x[c];
        }
        if (v > sys.rhs[r] + kFeasibilityTol) return false;
    }
    return true;
}

bool lex_less(const std::vector<double>& a, const std::vector<double>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool next_combination(std::vector<int>& c, int total) {
    const int k = static_cast<int>(c.size());
    int i = k - 1;
    while (i >= 0 && c[i] == total - k + i) --i;
    if (i < 0) return false;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    return true;
}

void guard_dimensions(const DeterministicLp& lp, const char* op) {
    if (lp.n + lp.m > kEnumerationGuard) {
        raise(ErrorKind::DimensionLimit,
              std::string(op) + ": n + m exceeds the enumeration guard of " +
                  std::to_string(kEnumerationGuard));
    }
}

// Enumerates every feasible basic solution and hands it to `sink`.
template <typename Sink>
void enumerate_basic_solutions(const DeterministicLp& lp, Sink&& sink) {
    const RowSystem sys = build_rows(lp);
    std::vector<int> active(lp.n);
    for (int j = 0; j < lp.n; ++j) active[j] = j;
    std::vector<double> x;
    do {
        if (!solve_active(sys, active, x)) continue;
        if (!feasible(sys, x)) continue;
        sink(x, active);
    } while (next_combination(active, sys.rows));
}

} // namespace

void validate(const DeterministicLp& lp) {
    if (lp.n < 1 || lp.m < 0) {
        raise(ErrorKind::InvalidArgument, "lp: need n >= 1 and m >= 0");
    }
    if (lp.c.size() != static_cast<std::size_t>(lp.n) ||
        lp.a.size() != static_cast<std::size_t>(lp.m) * lp.n ||
        lp.b.size() != static_cast<std::size_t>(lp.m) ||
        lp.xBounds.size() != static_cast<std::size_t>(lp.n)) {
        raise(ErrorKind::InvalidArgument, "lp: field sizes do not match n, m");
    }
    for (double v : lp.c) {
        if (!std::isfinite(v)) raise(ErrorKind::InvalidArgument, "lp.c: not finite");
    }
    for (double v : lp.a) {
        if (!std::isfinite(v)) raise(ErrorKind::InvalidArgument, "lp.a: not finite");
    }
    for (double v : lp.b) {
        if (!std::isfinite(v)) raise(ErrorKind::InvalidArgument, "lp.b: not finite");
    }
    for (const Interval& iv : lp.xBounds) {
        validate(iv, "lp.xBounds");
        if (iv.lo < 0.0) {
            raise(ErrorKind::InvalidArgument, "lp.xBounds: lower bound must be >= 0");
        }
    }
}

LpSolution solve_exact(const DeterministicLp& lp) {
    validate(lp);
    guard_dimensions(lp, "solve_exact");

    LpSolution best;
    bool found = false;
    enumerate_basic_solutions(lp, [&](const std::vector<double>& x,
                                      const std::vector<int>& active) {
        const double value = dot(lp.c, x);
        if (!found || value > best.value + 1e-12 ||
            (std::abs(value - best.value) <= 1e-12 && lex_less(x, best.x))) {
            best.status = LpStatus::Optimal;
            best.x = x;
            best.value = value;
            best.activeSet = active;
            found = true;
        }
    });
    if (!found) return LpSolution{};
    return best;
}

std::vector<std::vector<double>> feasible_vertices(const DeterministicLp& lp) {
    validate(lp);
    guard_dimensions(lp, "feasible_vertices");

    std::vector<std::vector<double>> vertices;
    enumerate_basic_solutions(lp, [&](const std::vector<double>& x, const std::vector<int>&) {
        for (const std::vector<double>& seen : vertices) {
            double gap = 0.0;
            for (std::size_t j = 0; j < x.size(); ++j) {
                gap = std::max(gap, std::abs(seen[j] - x[j]));
            }
            if (gap <= 1e-9) return;
        }
        vertices.push_back(x);
    });
    return vertices;
}

DeterministicLp robust_counterpart(const UncertainLp& problem) {
    validate(problem);
    auto require_simple = [](const UncertainScalar& s, const char* field) {
        if (!s.is_point() && !s.is_interval()) {
            raise(ErrorKind::WrongModel,
                  std::string("robust_counterpart: ") + field +
                      " entry must be a point or an interval");
        }
    };
    DeterministicLp lp;
    lp.n = problem.n;
    lp.m = problem.m;
    lp.xBounds = problem.xBounds;
    lp.c.reserve(problem.objective.size());
    for (const UncertainScalar& s : problem.objective) {
        require_simple(s, "objective");
        lp.c.push_back(s.support().lo);
    }
    lp.a.reserve(problem.constraints.size());
    for (const UncertainScalar& s : problem.constraints) {
        require_simple(s, "constraint");
        lp.a.push_back(s.support().hi);
    }
    lp.b.reserve(problem.rhs.size());
    for (const UncertainScalar& s : problem.rhs) {
        require_simple(s, "rhs");
        lp.b.push_back(s.support().lo);
    }
    return lp;
}

std::vector<DecisionVector> nominal_vertices(const UncertainLp& problem) {
    validate(problem);
    DeterministicLp lp;
    lp.n = problem.n;
    lp.m = problem.m;
    lp.xBounds = problem.xBounds;
    lp.c.assign(problem.n, 0.0);
    lp.a.reserve(problem.constraints.size());
    for (const UncertainScalar& s : problem.constraints) {
        lp.a.push_back(s.support().midpoint());
    }
    lp.b.reserve(problem.rhs.size());
    for (const UncertainScalar& s : problem.rhs) {
        lp.b.push_back(s.support().midpoint());
    }
    std::vector<DecisionVector> out;
    for (std::vector<double>& v : feasible_vertices(lp)) {
        out.push_back(DecisionVector{std::move(v)});
    }
    return out;
}

} // namespace iplp
