#pragma once

// The limit objects the reinforced process converges to: the Brownian bridge
// (with the Kolmogorov sup-norm law as its reference distribution) and the
// supercritical pure-jump bridge with exchangeable increments, assembled from
// estimated jump sizes and fresh uniform locations.

#include "rep/empirical.hpp"
#include "rep/errors.hpp"
#include "rep/simon.hpp"

#include <cstdint>
#include <vector>

namespace rep {

struct BridgeSample {
    enum class Kind { brownian, bp };

    Kind kind = Kind::brownian;
    double p = 0.0;  // meaningful only for kind == bp
    std::vector<double> grid;    // make_grid(m)
    std::vector<double> values;  // same length; endpoints exactly 0

    double sup_abs() const;
};

// Brownian bridge on the uniform grid: cumulative N(0, delta) increments of a
// Wiener path W, then G(x) = W(x) - x W(1). Exactly 2(m-1) uniform draws
// (Box-Muller pairs) per sample.
BridgeSample sample_brownian_bridge(std::uint32_t grid_size, std::uint64_t seed);

// P(sup|G| <= x). Alternating series 1 - 2 sum (-1)^{k-1} exp(-2 k^2 x^2) for
// large x; theta-transformed series for small x (the crossover is an accuracy
// choice, made well above the contract's minimum of 0.2). Truncation at 1e-12.
double kolmogorov_cdf(double x);

// Dvoretzky-Kiefer-Wolfowitz half-width: sup-norm band of an n-sample
// empirical CDF at confidence 1 - alpha.
double dkw_epsilon(std::uint64_t n, double alpha);

// Approximate supercritical jump sizes: the J largest N_j(n)/n^p of a fresh
// run, nonincreasing. J = 0 means the default truncation
// min(1024, #{j : N_j(n) >= 2}) (at least 1).
struct XpVector {
    std::vector<double> entries;  // nonincreasing, > 0
    std::uint64_t n_used = 0;
    double p = 0.0;

    void validate() const;
};

XpVector estimate_xp(const ReinforcementParams& params, std::uint64_t n,
                     std::uint64_t trunc = 0);

// B(x) = sum_j xp_j (1{U_j <= x} - x) with fresh i.i.d. uniforms U_j,
// evaluated on the uniform grid. Empty xp gives the zero bridge.
BridgeSample sample_bp_bridge(const XpVector& xp, std::uint32_t grid_size,
                              std::uint64_t seed);

} // namespace rep
