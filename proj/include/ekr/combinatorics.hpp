#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>

namespace ekr {

// Exact nonnegative count, arbitrary precision.
using BigCount = boost::multiprecision::cpp_int;

// Thrown when parameters are structurally valid but the requested
// computation is meaningless for them (e.g. stability experiments on a
// graph that cannot have edges).
class infeasible_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// C(n,k), exact. Out-of-range k (k < 0 or k > n) yields 0 so that
// summation identities need no guards.
BigCount binom(long long n, long long k);

// C(n,k) for arbitrary-precision n and small k.
BigCount binom_big(const BigCount& n, long long k);

// n!, exact.
BigCount factorial(long long n);

// Natural log of a positive BigCount, accurate to a few ulp.
double ln_big(const BigCount& value);

// ln C(n,k). Compensated summation keeps the relative error near 1e-15
// even for n around 1e6. Throws std::domain_error unless 0 <= k <= n.
double ln_binom(long long n, long long k);

// ln n!
double ln_factorial(long long n);

// Parameters (n, r, s) of the intersection graph on r-subsets of
// {1,...,n} (vertices adjacent iff their intersection has size s),
// together with the derived counts everything downstream uses.
struct GraphSpec {
    int n = 0;
    int r = 0;
    int s = 0;
    BigCount vertices;     // C(n,r)
    BigCount star_size;    // C(n-1,r-1): sets through a fixed element
    BigCount star_degree;  // C(n-r-1,r-1): members of a star disjoint from a fixed outside set
    BigCount degree;       // C(r,s) * C(n-r,r-s)
    BigCount edges;        // vertices * degree / 2

    // Disjoint pairs exist only from n = 2r on; below that the s = 0
    // graph is edgeless and stability experiments refuse it.
    bool ekr_range() const { return n >= 2 * r; }
};

// Throws std::invalid_argument unless 1 <= r <= n and 0 <= s < r.
GraphSpec graph_constants(int n, int r, int s);

// star_size - star_degree evaluated through the summation identity
// sum_{i=1}^{r} C(n-i-1, r-2). Agrees exactly with direct subtraction
// on the whole domain n >= r >= 2.
BigCount star_gap(int n, int r);

}  // namespace ekr
