#pragma once

// Monte Carlo replication and the statistical checks that turn the model's
// limit theorems into pass/fail reports.
//
// Replicates are embarrassingly parallel: replicate r always runs under
// replicate_seed(master_seed, r), each replicate owns its engine state, and
// aggregation folds the recorded values in replicate-index order with
// fixed-shape kernel reductions. A summary is therefore a pure function of
// the plan — bit-identical for any worker count.
//
// Reports produced by the check functions are statistical, not exact: each
// row records an estimate, a target, a tolerance and how they are compared.
// Distribution comparisons use a rejection floor of p >= 1e-3 on a fixed
// seed (a deliberate design choice: limit theorems at finite n carry bias,
// and the floor plus a pinned seed keeps CI deterministic).

#include "rep/empirical.hpp"
#include "rep/simon.hpp"
#include "rep/steps.hpp"

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace rep {

enum class Statistic {
    s2,            // sum of squared cluster sizes
    sup_scaled,    // sup over x of the scaled empirical bridge
    max_cluster,   // largest cluster size
    histogram,     // size frequencies C_k(n) / ((1-p) n), k = 1..k_max
    marginal,      // scaled bridge value at a fixed point x
    walk_endpoint, // scaled step-reinforced walk endpoint
};

const char* statistic_name(Statistic s) noexcept;

// A statistic selector together with its arguments (evaluation point for
// marginal, class cap for histogram, step distribution for walks).
struct StatisticSpec {
    Statistic kind = Statistic::s2;
    double marginal_x = 0.5;
    std::uint32_t k_max = 5;
    std::shared_ptr<const StepSpec> step;

    static StatisticSpec s2();
    static StatisticSpec sup_scaled();
    static StatisticSpec max_cluster();
    static StatisticSpec histogram(std::uint32_t k_max);
    static StatisticSpec marginal(double x);
    static StatisticSpec walk(StepSpec step);

    // Summary components this selector produces per checkpoint: k_max for
    // histogram (one per size class), one otherwise.
    std::uint32_t components() const;
    std::string component_name(std::uint32_t c) const;

    void validate() const;
};

struct McPlan {
    // params.p is the reinforcement probability; params.n_max, when nonzero,
    // must cover the last checkpoint (zero means "use the last checkpoint").
    // params.seed is ignored: replicate r runs under
    // replicate_seed(master_seed, r), and distinct replicates get distinct
    // seeds by the mixing construction.
    ReinforcementParams params;
    std::uint64_t replicates = 100;
    std::vector<std::uint64_t> checkpoints;  // strictly increasing times
    StatisticSpec statistic;
    std::uint64_t master_seed = 0;

    // Path-statistic knobs: grid = 0 takes exact sups, otherwise sups are
    // maxima over make_grid(grid); uniform_norm replaces the regime scaling
    // with norm = n (the Glivenko-Cantelli normalization).
    std::uint32_t grid = 0;
    bool uniform_norm = false;

    void validate() const;
};

struct SummaryCell {
    double mean = 0.0;
    double variance = 0.0;  // unbiased; 0 when replicates < 2
    double se = 0.0;        // sqrt(variance / replicates)
    double min = 0.0;
    double max = 0.0;
    std::uint64_t count = 0;
};

struct McSummary {
    std::vector<std::uint64_t> checkpoints;
    std::vector<std::string> components;
    std::vector<SummaryCell> cells;  // checkpoint-major: [checkpoint][component]
    // Sorted per-cell replicate values, same layout; filled only when the
    // plan was run with keep_samples.
    std::vector<std::vector<double>> samples;
    std::uint64_t replicates = 0;
    std::uint64_t master_seed = 0;
    double wall_seconds = 0.0;

    const SummaryCell& cell(std::size_t checkpoint, std::size_t component = 0) const;
    const std::vector<double>& sample(std::size_t checkpoint,
                                      std::size_t component = 0) const;
};

McSummary run_plan(const McPlan& plan, std::uint32_t workers = 1,
                   bool keep_samples = false);

namespace detail {
// Several statistics evaluated in one engine sweep per replicate; the public
// single-statistic run_plan forwards here (plan.statistic is ignored in
// favor of stats). Component layout follows the selector order.
McSummary run_plan_multi(const McPlan& plan,
                         std::span<const StatisticSpec> stats,
                         std::uint32_t workers, bool keep_samples);
} // namespace detail

// Least-squares slope of log(mean) against log(n). Requires at least four
// checkpoints spanning two decades and strictly positive means.
double growth_exponent(std::span<const std::pair<std::uint64_t, double>> points);

// Classical two-sample Kolmogorov-Smirnov comparison on sorted samples:
// distance sup|F_a - F_b| and the asymptotic p-value
// 1 - kolmogorov_cdf(distance * sqrt(ab/(a+b))).
struct KsResult {
    double distance = 0.0;
    double p_value = 1.0;
};
KsResult two_sample_ks(std::span<const double> a, std::span<const double> b);

struct CheckRow {
    // two_sided: |estimate - target| <= tolerance
    // at_least:  estimate >= target            (tolerance unused)
    // at_most:   estimate <= target + tolerance
    enum class Kind { two_sided, at_least, at_most };

    std::string label;
    double estimate = 0.0;
    double target = 0.0;
    double tolerance = 0.0;
    Kind kind = Kind::two_sided;
    bool pass = false;
};

struct CheckReport {
    std::string name;
    std::uint64_t master_seed = 0;
    double wall_seconds = 0.0;
    std::vector<CheckRow> rows;
    bool pass = true;

    CheckRow& two_sided(std::string label, double estimate, double target,
                        double tolerance);
    CheckRow& at_least(std::string label, double estimate, double floor);
    CheckRow& at_most(std::string label, double estimate, double ceiling,
                      double slack = 0.0);
};

// Monte Carlo mean of S^2(n) against the exact oracle, within 4 SE (plus a
// 1e-9 relative arithmetic floor for deterministic cells such as n = 1),
// over the full (p, n) grid.
CheckReport s2_oracle_check(std::span<const double> ps,
                            std::span<const std::uint64_t> ns,
                            std::uint64_t replicates, std::uint64_t master_seed,
                            std::uint32_t workers = 1);

// Regime-dispatched functional limit check. Subcritical: two-sample KS of
// sqrt(1-2p) * sup|bridge/sqrt(n)| against grid-sups of sampled Brownian
// bridges. Critical: the same under the sqrt(n log n) norm. Supercritical:
// mean of S^2(n)/n^{2p} against sumbeta_constant(p) within 5%, and the
// variance of the marginal at x = 1/2 against sumbeta_constant(p)/4 (the
// tolerance combines 4 SE of a variance estimate with the exact finite-n
// bias |E S^2(n)/n^{2p} - sumbeta|/4, which the moment oracle provides).
// The same grid is used on the empirical and the bridge side, so the
// grid-sup discretization bias is common-mode and cancels from the
// comparison.
CheckReport theorem1_check(double p, std::uint64_t n, std::uint64_t replicates,
                           std::uint64_t master_seed, std::uint32_t workers = 1,
                           std::uint32_t grid = 2048);

// Mean of C_k(n)/((1-p) n) against the Yule-Simon pmf for k = 1..k_max,
// within 4 SE plus a 10/n finite-size allowance, plus the sanity row that
// the observed class frequencies sum to at most 1 + epsilon.
CheckReport yule_frequency_check(double p, std::uint64_t n,
                                 std::uint64_t replicates, std::uint32_t k_max,
                                 std::uint64_t master_seed,
                                 std::uint32_t workers = 1);

// Median of sup|empirical CDF - uniform| (norm = n) per checkpoint: passes
// when the medians decrease along the checkpoint list and the final median
// is below half the first.
CheckReport glivenko_cantelli_check(double p,
                                    std::span<const std::uint64_t> checkpoints,
                                    std::uint64_t replicates,
                                    std::uint64_t master_seed,
                                    std::uint32_t workers = 1);

// Critical-regime largest-cluster tail: estimates P(max_j N_j > eta *
// sqrt(n log n)) for eta in {0.5, 1, 2} at n/100, n/10 and n, and requires
// each tail estimate to be non-increasing in n up to binomial noise; also
// checks mean S^2(n)/(n log n) against 1 within 15% at the last checkpoint.
// Only supported at p = 1/2, where the scaling is calibrated.
CheckReport max_cluster_check(double p, std::uint64_t n,
                              std::uint64_t replicates,
                              std::uint64_t master_seed,
                              std::uint32_t workers = 1);

} // namespace rep
