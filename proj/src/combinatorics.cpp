#include "ekr/combinatorics.hpp"

#include <algorithm>
#include <cmath>

namespace ekr {

BigCount binom(long long n, long long k) {
    if (n < 0) throw std::domain_error("binom: n must be nonnegative");
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigCount result = 1;
    for (long long i = 0; i < k; ++i) {
        result *= n - i;
        result /= i + 1;  // exact: partial products are binomials
    }
    return result;
}

BigCount binom_big(const BigCount& n, long long k) {
    if (n < 0) throw std::domain_error("binom_big: n must be nonnegative");
    if (k < 0 || n < k) return 0;
    BigCount result = 1;
    for (long long i = 0; i < k; ++i) {
        result *= n - i;
        result /= i + 1;
    }
    return result;
}

BigCount factorial(long long n) {
    if (n < 0) throw std::domain_error("factorial: n must be nonnegative");
    BigCount result = 1;
    for (long long i = 2; i <= n; ++i) result *= i;
    return result;
}

double ln_big(const BigCount& value) {
    if (value <= 0) throw std::domain_error("ln_big: value must be positive");
    const std::size_t bits = boost::multiprecision::msb(value) + 1;
    if (bits <= 62) return std::log(value.convert_to<double>());
    // Keep the top 62 bits; the discarded tail perturbs the log by < 2^-61.
    const BigCount top = value >> (bits - 62);
    return std::log(top.convert_to<double>()) +
           static_cast<double>(bits - 62) * 0.69314718055994530942;
}

double ln_binom(long long n, long long k) {
    if (n < 0 || k < 0 || k > n)
        throw std::domain_error("ln_binom: need 0 <= k <= n");
    const long long m = std::min(k, n - k);
    double sum = 0.0, carry = 0.0;
    for (long long i = 1; i <= m; ++i) {
        const double term = std::log(static_cast<double>(n - m + i)) -
                            std::log(static_cast<double>(i));
        const double y = term - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    return sum;
}

double ln_factorial(long long n) {
    if (n < 0) throw std::domain_error("ln_factorial: n must be nonnegative");
    double sum = 0.0, carry = 0.0;
    for (long long i = 2; i <= n; ++i) {
        const double term = std::log(static_cast<double>(i));
        const double y = term - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    return sum;
}

GraphSpec graph_constants(int n, int r, int s) {
    if (n < 1 || r < 1 || r > n)
        throw std::invalid_argument("graph_constants: need 1 <= r <= n");
    if (s < 0 || s >= r)
        throw std::invalid_argument("graph_constants: need 0 <= s < r");
    GraphSpec g;
    g.n = n;
    g.r = r;
    g.s = s;
    g.vertices = binom(n, r);
    g.star_size = binom(n - 1, r - 1);
    g.star_degree = (n - r - 1 >= 0) ? binom(n - r - 1, r - 1) : BigCount(0);
    g.degree = binom(r, s) * binom(n - r, r - s);
    const BigCount twice_edges = g.vertices * g.degree;
    // Handshake: the degree sum of a simple graph is even.
    if (twice_edges % 2 != 0)
        throw std::logic_error("graph_constants: odd degree sum");
    g.edges = twice_edges / 2;
    return g;
}

BigCount star_gap(int n, int r) {
    if (r < 2) throw std::invalid_argument("star_gap: need r >= 2");
    if (n < r) throw std::invalid_argument("star_gap: need n >= r");
    BigCount total = 0;
    for (int i = 1; i <= r; ++i) {
        if (n - i - 1 < 0) continue;
        total += binom(n - i - 1, r - 2);
    }
    return total;
}

}  // namespace ekr
