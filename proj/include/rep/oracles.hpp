#pragma once

// Closed-form reference values for the reinforcement model, all computed in
// log-gamma space (no direct Gamma calls above small arguments, so every
// ratio is overflow-free up to n ~ 10^9):
//
//   * exact E[S^2(n)]   = Gamma(n+2p)/Gamma(n) * sum_{i=1}^n Gamma(i)/Gamma(i+2p)
//     with the independent recursion E[S^2(n+1)] = (1 + 2p/n) E[S^2(n)] + 1;
//   * Yule-Simon pmf    = (1/p) * B(k, 1 + 1/p);
//   * the supercritical series constant sum_i Gamma(i)/Gamma(i+2p)
//                       = 1 / ((2p-1) * Gamma(2p))   for p > 1/2;
//   * exact E[N_1(n)]   = Gamma(n+p)/(Gamma(n) Gamma(1+p)), and the
//     birth-time-domination upper bound for later clusters;
//   * the critical third-moment bound E[N_j(n)^3] <= b (n/j)^{3/2}, with b a
//     calibrated constant produced by running the dominating three-moment
//     recursions (see calibrate_m3_constant and m3_constant.hpp).

#include "rep/errors.hpp"

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace rep::oracles {

struct MomentTable {
    enum class Method { closed_form, recursion };

    double p = 0.5;
    Method method = Method::closed_form;
    std::vector<std::pair<std::uint64_t, double>> entries;  // (n, E[S^2(n)])
};

// Exact E[S^2(n)], closed form. O(n) time, long double accumulation.
double expected_s2(double p, std::uint64_t n);

// Same quantity via the one-step mean recursion (independent route; the two
// agree to 1e-9 relative, which tests enforce).
double expected_s2_recursion(double p, std::uint64_t n);

MomentTable moment_table(double p, std::span<const std::uint64_t> ns,
                         MomentTable::Method method);

// P(size = k) under Yule-Simon with tail exponent 1 + 1/p.
double yule_simon_pmf(std::uint64_t k, double p);

// sum_{i>=1} Gamma(i)/Gamma(i+2p) = 1/((2p-1) Gamma(2p)); diverges for
// p <= 1/2 (regime error).
double sumbeta_constant(double p);

// Partial sum of the same series (independent summation cross-check).
double sumbeta_partial(double p, std::uint64_t terms);

// Exact mean occurrence count of the first cluster (j = 1); for j > 1 the
// dominating-process upper bound Gamma(n+p)Gamma(j)/(Gamma(n)Gamma(j+p)),
// which is a bound, not a mean.
double expected_nj(std::uint64_t j, std::uint64_t n, double p);

// Critical third-moment bound b * (n/j)^{3/2}; only proven at p = 1/2
// (regime error for other p).
double moment_bound_m3(std::uint64_t j, std::uint64_t n, double p);

// sum_k k^2 * (1-p)/p * B(k, 1+1/p) for p < 1/2, summed to k_max with an
// integral tail estimate (the closed value is 1/(1-2p)). The tail exponent
// degrades as p -> 1/2; callers should stay at p <= 0.4 for 1e-6 accuracy.
double size_biased_second_moment(double p, std::uint64_t k_max = 10'000'000);

// E[sum_j (X_j^(p))^q] for the supercritical jump sizes, q > 1/p:
// Gamma(q)/Gamma(pq) + q(1-p)Gamma(q)/((pq-1)Gamma(pq)).
double xp_power_sum(double p, double q);

// Calibration of the third-moment constant: runs the dominating recursions
//   U1(m+1) = (1 + 1/(2m)) U1(m)
//   U2(m+1) = (1 + 1/m)    U2(m) + U1(m)/(2m)
//   U3(m+1) = (1 + 3/(2m)) U3(m) + (3 U2(m) + U1(m))/(2m)
// from U*(j) = 1 for each birth index j in {1..j_cap} union {powers of two up
// to 1024}, tracking sup over n <= n_limit of U3(j,n) * (j/n)^{3/2}, with a
// one-step Richardson extrapolation toward the n -> infinity limit.
struct M3Calibration {
    double constant = 0.0;      // extrapolated sup, before safety rounding
    double grid_sup = 0.0;      // raw sup over the finite grid
    std::uint64_t j_cap = 0;
    std::uint64_t n_limit = 0;
};

M3Calibration calibrate_m3_constant(std::uint64_t j_cap = 64,
                                    std::uint64_t n_limit = 1'000'000);

} // namespace rep::oracles
