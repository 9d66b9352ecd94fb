#include "rep/oracles.hpp"

#include "rep/m3_constant.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace rep::oracles {

namespace {

void check_p(double p) {
    if (!(p > 0.0 && p < 1.0))
        throw param_error("reinforcement probability must lie strictly in "
                          "(0,1), got " + std::to_string(p));
}

// Gamma(n+a)/Gamma(n) for possibly huge n, in long double log space.
long double gamma_ratio(long double n, long double a) {
    return std::exp(std::lgamma(n + a) - std::lgamma(n));
}

} // namespace

double expected_s2(double p, std::uint64_t n) {
    check_p(p);
    if (n == 0) throw param_error("n must be positive");
    // sum_{i=1}^n Gamma(i)/Gamma(i+2p) by term recursion t_{i+1} = t_i i/(i+2p)
    long double const twop = 2.0L * static_cast<long double>(p);
    long double term = std::exp(-std::lgamma(1.0L + twop));  // i = 1
    long double sum = term;
    for (std::uint64_t i = 1; i < n; ++i) {
        term *= static_cast<long double>(i) / (static_cast<long double>(i) + twop);
        sum += term;
    }
    long double const a_n = gamma_ratio(static_cast<long double>(n), twop);
    return static_cast<double>(a_n * sum);
}

double expected_s2_recursion(double p, std::uint64_t n) {
    check_p(p);
    if (n == 0) throw param_error("n must be positive");
    long double s = 1.0L;  // E[S^2(1)] = 1
    long double const twop = 2.0L * static_cast<long double>(p);
    for (std::uint64_t i = 1; i < n; ++i)
        s = (1.0L + twop / static_cast<long double>(i)) * s + 1.0L;
    return static_cast<double>(s);
}

MomentTable moment_table(double p, std::span<const std::uint64_t> ns,
                         MomentTable::Method method) {
    check_p(p);
    MomentTable table;
    table.p = p;
    table.method = method;
    table.entries.reserve(ns.size());
    for (std::uint64_t n : ns)
        table.entries.emplace_back(
            n, method == MomentTable::Method::closed_form
                   ? expected_s2(p, n)
                   : expected_s2_recursion(p, n));
    return table;
}

double yule_simon_pmf(std::uint64_t k, double p) {
    check_p(p);
    if (k == 0) throw param_error("cluster sizes start at k = 1");
    double const c = 1.0 + 1.0 / p;
    // (1/p) * B(k, c) = (1/p) * Gamma(k) Gamma(c) / Gamma(k + c)
    return std::exp(std::lgamma(static_cast<double>(k)) + std::lgamma(c) -
                    std::lgamma(static_cast<double>(k) + c)) /
           p;
}

double sumbeta_constant(double p) {
    check_p(p);
    if (!(p > 0.5))
        throw regime_error("the beta-ratio series diverges for p <= 1/2");
    return 1.0 / ((2.0 * p - 1.0) * std::tgamma(2.0 * p));
}

double sumbeta_partial(double p, std::uint64_t terms) {
    check_p(p);
    if (terms == 0) throw param_error("need at least one term");
    long double const twop = 2.0L * static_cast<long double>(p);
    long double term = std::exp(-std::lgamma(1.0L + twop));
    long double sum = term;
    for (std::uint64_t i = 1; i < terms; ++i) {
        term *= static_cast<long double>(i) / (static_cast<long double>(i) + twop);
        sum += term;
    }
    return static_cast<double>(sum);
}

double expected_nj(std::uint64_t j, std::uint64_t n, double p) {
    check_p(p);
    if (j == 0 || n == 0) throw param_error("indices start at 1");
    if (j > n) throw param_error("cluster j cannot exist before time j");
    long double const pl = p;
    long double const v =
        std::exp(std::lgamma(static_cast<long double>(n) + pl) -
                 std::lgamma(static_cast<long double>(n)) +
                 std::lgamma(static_cast<long double>(j)) -
                 std::lgamma(static_cast<long double>(j) + pl));
    return static_cast<double>(v);
}

double moment_bound_m3(std::uint64_t j, std::uint64_t n, double p) {
    if (p != 0.5)
        throw regime_error("the third-moment bound is established only at "
                           "p = 1/2");
    if (j == 0 || n == 0) throw param_error("indices start at 1");
    if (j > n) throw param_error("cluster j cannot exist before time j");
    double const ratio = static_cast<double>(n) / static_cast<double>(j);
    return kM3Constant * ratio * std::sqrt(ratio);
}

double size_biased_second_moment(double p, std::uint64_t k_max) {
    check_p(p);
    if (!(p < 0.5))
        throw regime_error("sum_k k^2 c_k diverges for p >= 1/2");
    if (k_max < 2) throw param_error("k_max too small for a tail estimate");
    long double const c = 1.0L + 1.0L / static_cast<long double>(p);
    // B(k, c) recursion: B(k+1, c) = B(k, c) * k / (k + c); B(1, c) = 1/c.
    long double beta = 1.0L / c;
    long double const prefix = (1.0L - static_cast<long double>(p)) /
                               static_cast<long double>(p);
    long double sum = prefix * beta;  // k = 1 term (k^2 = 1)
    long double last_term = 0.0L;
    for (std::uint64_t k = 1; k < k_max; ++k) {
        beta *= static_cast<long double>(k) / (static_cast<long double>(k) + c);
        long double const kk = static_cast<long double>(k + 1);
        last_term = prefix * kk * kk * beta;
        sum += last_term;
    }
    // Terms decay like A k^{1-1/p}; estimate the tail by the midpoint
    // integral sum_{k>K} t_k ~ t_K K^{1/p-1} (K+1/2)^{2-1/p} / (1/p - 2),
    // anchoring A on the last computed term.
    long double const onep = 1.0L / static_cast<long double>(p);
    long double const K = static_cast<long double>(k_max);
    long double const tail = last_term *
                             std::pow(K, onep - 1.0L) *
                             std::pow(K + 0.5L, 2.0L - onep) / (onep - 2.0L);
    return static_cast<double>(sum + tail);
}

double xp_power_sum(double p, double q) {
    check_p(p);
    if (!(p > 0.5))
        throw regime_error("jump-size power sums apply to the supercritical "
                           "regime only");
    if (!(q > 1.0 / p))
        throw param_error("power sum requires q > 1/p");
    double const g = std::exp(std::lgamma(q) - std::lgamma(p * q));
    return g + q * (1.0 - p) * g / (p * q - 1.0);
}

M3Calibration calibrate_m3_constant(std::uint64_t j_cap,
                                    std::uint64_t n_limit) {
    if (j_cap == 0 || n_limit < 4 * j_cap)
        throw param_error("calibration grid too small");
    std::vector<std::uint64_t> js;
    for (std::uint64_t j = 1; j <= j_cap; ++j) js.push_back(j);
    for (std::uint64_t j = 2 * j_cap; j <= 1024; j *= 2) js.push_back(j);

    M3Calibration cal;
    cal.j_cap = j_cap;
    cal.n_limit = n_limit;
    long double sup = 0.0L;
    long double sup_extrap = 0.0L;
    for (std::uint64_t j : js) {
        if (4 * j > n_limit) continue;
        long double u1 = 1.0L, u2 = 1.0L, u3 = 1.0L;
        long double best = 1.0L;  // ratio at n = j is exactly 1
        long double half_ratio = 1.0L;
        std::uint64_t const half = n_limit / 2;
        for (std::uint64_t m = j; m < n_limit; ++m) {
            long double const md = static_cast<long double>(m);
            long double const nu3 =
                (1.0L + 1.5L / md) * u3 + (3.0L * u2 + u1) / (2.0L * md);
            long double const nu2 = (1.0L + 1.0L / md) * u2 + u1 / (2.0L * md);
            long double const nu1 = (1.0L + 0.5L / md) * u1;
            u1 = nu1; u2 = nu2; u3 = nu3;
            long double const frac = static_cast<long double>(j) / (md + 1.0L);
            long double const ratio = u3 * frac * std::sqrt(frac);
            if (ratio > best) best = ratio;
            if (m + 1 == half) half_ratio = ratio;
        }
        long double const final_ratio =
            u3 * std::pow(static_cast<long double>(j) /
                              static_cast<long double>(n_limit), 1.5L);
        // The ratio climbs toward its n -> infinity limit with a O(1/n)
        // defect; one Richardson step: limit ~ r(N) + (r(N) - r(N/2)).
        long double const extrap = final_ratio + (final_ratio - half_ratio);
        sup = std::max(sup, best);
        sup_extrap = std::max({sup_extrap, best, extrap});
    }
    cal.grid_sup = static_cast<double>(sup);
    cal.constant = static_cast<double>(sup_extrap);
    return cal;
}

} // namespace rep::oracles
