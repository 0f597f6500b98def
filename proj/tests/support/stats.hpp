#pragma once

// Test-side statistics helpers: normal CDF and a chi-square goodness-of-fit
// p-value via the regularized incomplete gamma function.

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace test_stats {

inline double normal_cdf(double x, double mu, double sigma) {
    return 0.5 * std::erfc(-(x - mu) / (sigma * std::sqrt(2.0)));
}

namespace detail {

// Series expansion of P(a,x), valid for x < a+1.
inline double gamma_p_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int n = 0; n < 500; ++n) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::fabs(del) < std::fabs(sum) * 1e-15) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Continued fraction for Q(a,x), valid for x >= a+1.
inline double gamma_q_cf(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 500; ++i) {
        double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < 1e-15) break;
    }
    return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

} // namespace detail

// Regularized upper incomplete gamma Q(a,x) = 1 - P(a,x).
inline double gamma_q(double a, double x) {
    if (x < 0.0 || a <= 0.0) throw std::invalid_argument("gamma_q domain");
    if (x == 0.0) return 1.0;
    if (x < a + 1.0) return 1.0 - detail::gamma_p_series(a, x);
    return detail::gamma_q_cf(a, x);
}

// P-value of a chi-square statistic with `df` degrees of freedom.
inline double chi_square_p_value(double statistic, int df) {
    return gamma_q(df / 2.0, statistic / 2.0);
}

// Chi-square GOF p-value for observed integer-valued samples against a
// discretized Normal(mu, sigma^2): value k covers the interval
// [k-0.5, k+0.5). Cells are pooled from the tails inward until each
// expected count is at least 5.
inline double chi_square_normal_fit(const std::vector<long long>& counts,
                                    int min_value, std::size_t n_samples,
                                    double mu, double sigma) {
    struct Cell {
        double expected;
        double observed;
    };
    std::vector<Cell> cells;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        int k = min_value + static_cast<int>(i);
        double lo = k - 0.5, hi = k + 0.5;
        double p = normal_cdf(hi, mu, sigma) - normal_cdf(lo, mu, sigma);
        if (i == 0) p = normal_cdf(hi, mu, sigma);                 // left tail
        if (i + 1 == counts.size()) p = 1.0 - normal_cdf(lo, mu, sigma); // right tail
        cells.push_back({p * static_cast<double>(n_samples),
                         static_cast<double>(counts[i])});
    }
    // pool adjacent cells until every expected count is >= 5
    std::vector<Cell> pooled;
    Cell acc{0.0, 0.0};
    for (const Cell& c : cells) {
        acc.expected += c.expected;
        acc.observed += c.observed;
        if (acc.expected >= 5.0) {
            pooled.push_back(acc);
            acc = {0.0, 0.0};
        }
    }
    if (acc.expected > 0.0) {
        if (pooled.empty()) throw std::invalid_argument("too few samples");
        pooled.back().expected += acc.expected;
        pooled.back().observed += acc.observed;
    }
    double stat = 0.0;
    for (const Cell& c : pooled)
        stat += (c.observed - c.expected) * (c.observed - c.expected) / c.expected;
    int df = static_cast<int>(pooled.size()) - 1;
    if (df < 1) throw std::invalid_argument("not enough cells for chi-square");
    return chi_square_p_value(stat, df);
}

} // namespace test_stats
