#pragma once

// The reinforced empirical process as a concrete object: a cadlag bridge
//
//     path(x) = ( sum_j w_j * 1{x_j <= x}  -  drift * x ) * (1 / norm)
//
// held as sorted jump locations with weights (equal locations merged), a
// linear drift, and a normalization. With w_j = N_j(n), drift = n and
// norm = sqrt(n) this is the centered empirical CDF deviation of a reinforced
// sequence; with heavy-tailed jump weights and norm = 1 it is the
// supercritical limit bridge. The drift is always set to the computed total
// jump weight, so every path is pinned to 0 at both endpoints exactly.
// Normalization is applied as multiplication by the reciprocal, consistently
// across every evaluation route, so different routes agree bit for bit.

#include "rep/errors.hpp"
#include "rep/simon.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace rep {

struct EmpiricalPath {
    std::vector<double> locations;   // strictly increasing, in (0, 1]
    std::vector<double> weights;     // positive, aligned with locations
    std::vector<double> cum_weight;  // prefix sums of weights
    double total_weight = 0.0;       // cum_weight.back()
    double drift = 0.0;              // == total_weight (bridge property)
    double norm = 1.0;               // positive divisor

    std::size_t jump_count() const noexcept { return locations.size(); }

    // Right-continuous value at x in [0,1] (binary search; fine for spot
    // checks, use evaluate_grid / GridEvaluator for bulk work).
    double value(double x) const;
};

// Regime classification and the scaling it dictates. The critical regime is
// p == 1/2 under exact floating-point equality: p is a caller-chosen
// constant, not a measured quantity, so exact comparison is the honest rule.
struct RegimeSpec {
    enum class Kind { subcritical, critical, supercritical };

    Kind kind = Kind::critical;
    double p = 0.5;

    static RegimeSpec from_p(double p);

    // sqrt(n), sqrt(n * ln n), n^p respectively (natural log). Critical scale
    // requires n >= 2 (ln 1 = 0 would produce a zero norm).
    double scale(std::uint64_t n) const;

    const char* name() const noexcept;

    // Throws regime_error when kind does not match p.
    void validate() const;
};

// Uniform evaluation grid x_k = k/(m-1), k = 0..m-1. All grid consumers share
// this construction so grid points are bit-identical everywhere.
std::vector<double> make_grid(std::uint32_t m);

// Assemble a path from cluster (value, count) data. counts must sum to n
// (consistency error otherwise); norm must be positive; locations must lie in
// (0, 1]. Equal locations are merged by summing weights.
EmpiricalPath build_path(std::span<const double> values,
                         std::span<const std::uint32_t> counts,
                         std::uint64_t n, double norm);

// Generic positive weights (limit-bridge assembly); drift is the computed
// total weight.
EmpiricalPath build_path_weighted(std::span<const double> locations,
                                  std::span<const double> weights, double norm);

// Exact sup over [0,1] of |path(x)|: at each jump the candidates are the left
// limit and the right value; between jumps the path is linear, so extrema sit
// at those candidates (the endpoint values are 0 by construction).
double sup_norm(const EmpiricalPath& path);

// Values at the make_grid(m) points, right-continuous, endpoints exactly 0.
// A jump at location x contributes to grid index k iff ceil(x*(m-1)) <= k;
// this index rule is shared with GridEvaluator, so both routes agree.
std::vector<double> evaluate_grid(const EmpiricalPath& path, std::uint32_t m);

// Reusable bucket-accumulation grid evaluation: O(#clusters + m) per path,
// no sorting, no per-call allocation. This is what the Monte Carlo harness
// uses per replicate; for integer (cluster-count) weights the bucket sums are
// exact, so results match evaluate_grid(build_path(...)) bit for bit
// regardless of accumulation order.
class GridEvaluator {
  public:
    explicit GridEvaluator(std::uint32_t m);

    std::uint32_t size() const noexcept { return m_; }
    std::span<const double> grid() const noexcept { return x_; }

    // Grid values of the cluster path into out (size m).
    void values(std::span<const double> values,
                std::span<const std::uint32_t> counts, std::uint64_t n,
                double norm, std::span<double> out);

    // Max |grid value| of the cluster path.
    double sup(std::span<const double> values,
               std::span<const std::uint32_t> counts, std::uint64_t n,
               double norm);

  private:
    void accumulate(std::span<const double> values,
                    std::span<const std::uint32_t> counts, std::uint64_t n);

    std::uint32_t m_;
    std::vector<double> x_;        // the grid
    std::vector<double> buckets_;  // scratch: per-bucket weight, then prefix
    std::vector<double> vals_;     // scratch for sup()
};

// Right-continuous path value at a single x straight from unsorted clusters.
double marginal_from_clusters(std::span<const double> values,
                              std::span<const std::uint32_t> counts,
                              std::uint64_t n, double norm, double x);

// Path of the state's process under the regime's normalization
// (norm = spec.scale(n)). Critical regime requires n >= 2.
EmpiricalPath scaled_path(const SimonState& state, const RegimeSpec& spec);

} // namespace rep
