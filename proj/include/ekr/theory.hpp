#pragma once

#include "ekr/combinatorics.hpp"

#include <map>

namespace ekr {

// Retention probability at which the survival of the extremal
// independence number flips: ((r+1) ln n - r ln r) / C(n-1, r-1),
// natural logs throughout. Evaluated in log space so huge binomials
// never overflow.
double p_critical(int n, int r);

// Expected number of independent star-plus-one-set families:
// n * (R - N) * (1-p)^M with R, N, M the vertex, star-size and
// star-degree counts. The _ln twin returns the natural log and is the
// robust form for large exponents.
double expected_y(int n, int r, double p);
double expected_y_ln(int n, int r, double p);

// Closed-form approximation of the second factorial moment of the same
// count: (n^2-n)(R-N)^2 (1-p)^{2M} plus the exact ordered same-center
// term n(R-N)(R-N-1)(1-p)^{2M}.
double y_second_factorial(int n, int r, double p);
double y_second_factorial_ln(int n, int r, double p);

// Rigorous upper bound on the expected number of independent families
// of full star size whose maximum degree falls i short of it:
// n * C(N,i) * C(R,i) * (1-p)^{i(M-i)}. Requires 1 <= i < M; each of
// the i added sets keeps at least M - i disjoint star members, and
// those edge sets never overlap across added sets.
double near_star_bound(int n, int r, double p, long long i);
double near_star_bound_ln(int n, int r, double p, long long i);

// Transfer bound P(near-star count at deficiency i > 0) <= E[Y] / (i (1-p)^i).
// Callers may cap at 1 when using it as a probability. Requires p < 1.
double near_star_transfer_bound(int n, int r, double p, long long i, double expected_y_value);

struct MomentReport {
    int n = 0;
    int r = 0;
    double p = 0.0;
    double e_y = 0.0;
    double e_y_ln = 0.0;
    double y2_approx = 0.0;
    double y2_approx_ln = 0.0;
    std::map<long long, double> near_star_bounds;      // i -> moment bound
    std::map<long long, double> transfer_bounds;       // i -> probability bound
};

// Evaluates everything above at once; deficiency indices outside
// [1, M) are skipped for the moment bound.
MomentReport moments(int n, int r, double p, const std::vector<long long>& deficiencies);

}  // namespace ekr
