#include "rep/limits.hpp"

#include "rep/kernels.hpp"
#include "rep/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace rep {

double BridgeSample::sup_abs() const {
    return kern::max_abs_f64(values.data(), values.size());
}

BridgeSample sample_brownian_bridge(std::uint32_t grid_size,
                                    std::uint64_t seed) {
    if (grid_size < 2) throw param_error("grid needs at least two points");
    BridgeSample out;
    out.kind = BridgeSample::Kind::brownian;
    out.grid = make_grid(grid_size);

    std::uint32_t const m = grid_size;
    double const sqrt_delta = std::sqrt(1.0 / static_cast<double>(m - 1));
    NormalStream normals(seed);
    std::vector<double> w(m);
    w[0] = 0.0;
    for (std::uint32_t k = 1; k < m; ++k)
        w[k] = w[k - 1] + sqrt_delta * normals.next();

    out.values.resize(m);
    kern::scale_residual_f64(w.data(), out.grid.data(), w[m - 1], 1.0,
                             out.values.data(), m);
    return out;
}

double kolmogorov_cdf(double x) {
    if (!(x >= 0.0)) throw param_error("the sup-norm law lives on [0, inf)");
    if (x == 0.0) return 0.0;
    constexpr double kTol = 1e-12;
    if (x < 0.75) {
        // theta-transformed series: sqrt(2 pi)/x * sum_{j>=0} exp(-(2j+1)^2
        // pi^2 / (8x^2)); free of cancellation where the alternating series
        // loses digits. Underflows cleanly to 0 for tiny x.
        double const a = std::numbers::pi * std::numbers::pi / (8.0 * x * x);
        double sum = 0.0;
        for (int j = 0;; ++j) {
            double const k = 2.0 * j + 1.0;
            double const term = std::exp(-k * k * a);
            sum += term;
            if (term < kTol * sum || term == 0.0) break;
        }
        return std::sqrt(2.0 * std::numbers::pi) / x * sum;
    }
    double sum = 0.0;
    double sign = 1.0;
    for (int k = 1;; ++k) {
        double const term = std::exp(-2.0 * static_cast<double>(k) *
                                     static_cast<double>(k) * x * x);
        sum += sign * term;
        sign = -sign;
        if (term < kTol) break;
    }
    double const cdf = 1.0 - 2.0 * sum;
    return cdf < 0.0 ? 0.0 : (cdf > 1.0 ? 1.0 : cdf);
}

double dkw_epsilon(std::uint64_t n, double alpha) {
    if (n == 0) throw param_error("empty sample has no DKW band");
    if (!(alpha > 0.0 && alpha < 1.0))
        throw param_error("confidence level must lie in (0,1)");
    return std::sqrt(std::log(2.0 / alpha) / (2.0 * static_cast<double>(n)));
}

void XpVector::validate() const {
    if (!(p > 0.5 && p < 1.0))
        throw regime_error("jump-size vectors exist in the supercritical "
                           "regime only");
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (!(entries[i] > 0.0))
            throw param_error("jump sizes must be positive");
        if (i > 0 && entries[i] > entries[i - 1])
            throw param_error("jump sizes must be nonincreasing");
    }
}

XpVector estimate_xp(const ReinforcementParams& params, std::uint64_t n,
                     std::uint64_t trunc) {
    if (!(params.p > 0.5))
        throw regime_error("jump sizes N_j/n^p converge only for p > 1/2");
    if (n < 10'000)
        throw param_error("jump-size estimation needs n >= 10^4 (asymptotic "
                          "regime)");
    ReinforcementParams run = params;
    run.n_max = n;
    SimonState state(run);
    state.advance(n - state.n());

    std::vector<std::uint32_t> sizes(state.counts().begin(),
                                     state.counts().end());
    std::sort(sizes.begin(), sizes.end(), std::greater<>{});
    if (trunc == 0) {
        // Default truncation: the square-summable tail is carried by the big
        // clusters; singletons contribute sum <= n * n^{-2p} -> 0.
        auto const non_singleton = static_cast<std::uint64_t>(
            std::upper_bound(sizes.begin(), sizes.end(), std::uint32_t{1},
                             std::greater<>{}) -
            sizes.begin());
        trunc = std::min<std::uint64_t>(1024, std::max<std::uint64_t>(1, non_singleton));
    }
    trunc = std::min<std::uint64_t>(trunc, sizes.size());

    XpVector xp;
    xp.p = params.p;
    xp.n_used = n;
    double const scale = std::pow(static_cast<double>(n), -params.p);
    xp.entries.reserve(trunc);
    for (std::uint64_t i = 0; i < trunc; ++i)
        xp.entries.push_back(static_cast<double>(sizes[i]) * scale);
    xp.validate();
    return xp;
}

BridgeSample sample_bp_bridge(const XpVector& xp, std::uint32_t grid_size,
                              std::uint64_t seed) {
    xp.validate();
    if (grid_size < 2) throw param_error("grid needs at least two points");
    BridgeSample out;
    out.kind = BridgeSample::Kind::bp;
    out.p = xp.p;
    out.grid = make_grid(grid_size);
    if (xp.entries.empty()) {
        out.values.assign(grid_size, 0.0);
        return out;
    }

    UniformStream stream(seed);
    std::vector<double> locations(xp.entries.size());
    for (double& u : locations) u = stream.next_open01();
    EmpiricalPath const path =
        build_path_weighted(locations, xp.entries, /*norm=*/1.0);
    out.values = evaluate_grid(path, grid_size);
    return out;
}

} // namespace rep
