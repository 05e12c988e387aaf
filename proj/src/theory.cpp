#include "ekr/theory.hpp"

#include <cmath>
#include <limits>

namespace ekr {

namespace {

void check_p(double p) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("retention probability must lie in [0,1]");
}

GraphSpec stability_spec(int n, int r) {
    if (n < 2 * r)
        throw std::invalid_argument("moment formulas need n >= 2r");
    return graph_constants(n, r, 0);
}

// exponent * ln(1-p), with the exponent possibly huge.
double scaled_log1m(const BigCount& exponent, double p) {
    if (exponent == 0) return 0.0;
    if (p == 0.0) return 0.0;
    if (p == 1.0) return -std::numeric_limits<double>::infinity();
    return exponent.convert_to<double>() * std::log1p(-p);
}

}  // namespace

double p_critical(int n, int r) {
    if (r < 2 || n <= r)
        throw std::invalid_argument("p_critical: need n > r >= 2");
    const double numerator =
        (r + 1) * std::log(static_cast<double>(n)) - r * std::log(static_cast<double>(r));
    // numerator > ln r > 0 whenever n > r >= 2
    return std::exp(std::log(numerator) - ln_binom(n - 1, r - 1));
}

double expected_y_ln(int n, int r, double p) {
    check_p(p);
    const GraphSpec g = stability_spec(n, r);
    const double base =
        std::log(static_cast<double>(n)) + ln_big(g.vertices - g.star_size);
    return base + scaled_log1m(g.star_degree, p);
}

double expected_y(int n, int r, double p) {
    check_p(p);
    if (p == 0.0) {
        const GraphSpec g = stability_spec(n, r);
        return (BigCount(n) * (g.vertices - g.star_size)).convert_to<double>();
    }
    return std::exp(expected_y_ln(n, r, p));
}

namespace {

BigCount y_second_factorial_prefactor(const GraphSpec& g) {
    const BigCount outside = g.vertices - g.star_size;
    const BigCount n_big(g.n);
    return outside * ((n_big * n_big - n_big) * outside + n_big * (outside - 1));
}

}  // namespace

double y_second_factorial_ln(int n, int r, double p) {
    check_p(p);
    const GraphSpec g = stability_spec(n, r);
    return ln_big(y_second_factorial_prefactor(g)) +
           scaled_log1m(2 * g.star_degree, p);
}

double y_second_factorial(int n, int r, double p) {
    check_p(p);
    if (p == 0.0) {
        const GraphSpec g = stability_spec(n, r);
        return y_second_factorial_prefactor(g).convert_to<double>();
    }
    return std::exp(y_second_factorial_ln(n, r, p));
}

double near_star_bound_ln(int n, int r, double p, long long i) {
    check_p(p);
    const GraphSpec g = stability_spec(n, r);
    if (i < 1 || BigCount(i) >= g.star_degree)
        throw std::domain_error("near_star_bound: need 1 <= i < star degree");
    const double ln_count = std::log(static_cast<double>(n)) +
                            ln_big(binom_big(g.star_size, i)) +
                            ln_big(binom_big(g.vertices, i));
    return ln_count + scaled_log1m(BigCount(i) * (g.star_degree - i), p);
}

double near_star_bound(int n, int r, double p, long long i) {
    return std::exp(near_star_bound_ln(n, r, p, i));
}

double near_star_transfer_bound(int n, int r, double p, long long i,
                                double expected_y_value) {
    if (i < 1) throw std::domain_error("near_star_transfer_bound: need i >= 1");
    if (!(p >= 0.0 && p < 1.0))
        throw std::domain_error("near_star_transfer_bound: need 0 <= p < 1");
    stability_spec(n, r);
    return expected_y_value /
           (static_cast<double>(i) * std::pow(1.0 - p, static_cast<double>(i)));
}

MomentReport moments(int n, int r, double p, const std::vector<long long>& deficiencies) {
    MomentReport report;
    report.n = n;
    report.r = r;
    report.p = p;
    report.e_y = expected_y(n, r, p);
    report.e_y_ln = expected_y_ln(n, r, p);
    report.y2_approx = y_second_factorial(n, r, p);
    report.y2_approx_ln = y_second_factorial_ln(n, r, p);
    const GraphSpec g = stability_spec(n, r);
    for (long long i : deficiencies) {
        if (i >= 1 && BigCount(i) < g.star_degree)
            report.near_star_bounds[i] = near_star_bound(n, r, p, i);
        if (i >= 1 && p < 1.0)
            report.transfer_bounds[i] = near_star_transfer_bound(n, r, p, i, report.e_y);
    }
    return report;
}

}  // namespace ekr
