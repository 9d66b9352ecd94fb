#include "rep/empirical.hpp"

#include "rep/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace rep {

namespace {

// Grid index a jump at location x feeds into: smallest k with x <= x_k.
// Locations are validated to (0,1], so the result lies in [1, m-1] — index 0
// never receives weight and the left endpoint stays exactly 0.
inline std::uint32_t bucket_of(double x, std::uint32_t m) noexcept {
    auto b = static_cast<std::uint32_t>(
        std::ceil(x * static_cast<double>(m - 1)));
    return b > m - 1 ? m - 1 : b;
}

void validate_location(double x) {
    if (!(x > 0.0 && x <= 1.0))
        throw param_error("jump location outside (0,1]: " + std::to_string(x));
}

} // namespace

double EmpiricalPath::value(double x) const {
    if (!(x >= 0.0 && x <= 1.0))
        throw param_error("evaluation point outside [0,1]");
    auto it = std::upper_bound(locations.begin(), locations.end(), x);
    auto const k = static_cast<std::size_t>(it - locations.begin());
    double const w = k == 0 ? 0.0 : cum_weight[k - 1];
    return (w - drift * x) * (1.0 / norm);
}

RegimeSpec RegimeSpec::from_p(double p) {
    if (!(p > 0.0 && p < 1.0))
        throw param_error("reinforcement probability must lie strictly in (0,1)");
    RegimeSpec spec;
    spec.p = p;
    spec.kind = p < 0.5   ? Kind::subcritical
                : p == 0.5 ? Kind::critical
                           : Kind::supercritical;
    return spec;
}

void RegimeSpec::validate() const {
    if (!(p > 0.0 && p < 1.0))
        throw param_error("reinforcement probability must lie strictly in (0,1)");
    Kind const expected = p < 0.5   ? Kind::subcritical
                          : p == 0.5 ? Kind::critical
                                     : Kind::supercritical;
    if (kind != expected)
        throw regime_error(std::string("regime label '") + name() +
                           "' contradicts p=" + std::to_string(p));
}

double RegimeSpec::scale(std::uint64_t n) const {
    validate();
    if (n == 0) throw param_error("scale undefined at n=0");
    auto const nd = static_cast<double>(n);
    switch (kind) {
        case Kind::subcritical: return std::sqrt(nd);
        case Kind::critical:
            if (n < 2)
                throw param_error("critical scaling needs n >= 2 (ln 1 = 0)");
            return std::sqrt(nd * std::log(nd));
        case Kind::supercritical: return std::pow(nd, p);
    }
    throw param_error("corrupt regime kind");
}

const char* RegimeSpec::name() const noexcept {
    switch (kind) {
        case Kind::subcritical: return "subcritical";
        case Kind::critical: return "critical";
        case Kind::supercritical: return "supercritical";
    }
    return "unknown";
}

std::vector<double> make_grid(std::uint32_t m) {
    if (m < 2) throw param_error("grid needs at least two points");
    std::vector<double> x(m);
    for (std::uint32_t k = 0; k < m; ++k)
        x[k] = static_cast<double>(k) / static_cast<double>(m - 1);
    return x;
}

namespace {

EmpiricalPath assemble(std::vector<std::pair<double, double>>&& jumps,
                       double norm) {
    if (!(norm > 0.0)) throw param_error("path norm must be positive");
    if (jumps.empty()) throw param_error("a path needs at least one jump");
    std::sort(jumps.begin(), jumps.end());

    EmpiricalPath path;
    path.norm = norm;
    path.locations.reserve(jumps.size());
    path.weights.reserve(jumps.size());
    for (auto const& [x, w] : jumps) {
        if (!path.locations.empty() && path.locations.back() == x)
            path.weights.back() += w;  // merged collision
        else {
            path.locations.push_back(x);
            path.weights.push_back(w);
        }
    }
    path.cum_weight.resize(path.weights.size());
    std::partial_sum(path.weights.begin(), path.weights.end(),
                     path.cum_weight.begin());
    path.total_weight = path.cum_weight.back();
    path.drift = path.total_weight;
    return path;
}

} // namespace

EmpiricalPath build_path(std::span<const double> values,
                         std::span<const std::uint32_t> counts,
                         std::uint64_t n, double norm) {
    if (values.size() != counts.size())
        throw param_error("values/counts size mismatch");
    if (n == 0) throw param_error("n must be positive");
    std::uint64_t total = 0;
    std::vector<std::pair<double, double>> jumps;
    jumps.reserve(values.size());
    for (std::size_t j = 0; j < values.size(); ++j) {
        validate_location(values[j]);
        if (counts[j] == 0) throw param_error("zero cluster count");
        total += counts[j];
        jumps.emplace_back(values[j], static_cast<double>(counts[j]));
    }
    if (total != n)
        throw consistency_error("cluster counts sum to " +
                                std::to_string(total) + ", expected n=" +
                                std::to_string(n));
    return assemble(std::move(jumps), norm);
}

EmpiricalPath build_path_weighted(std::span<const double> locations,
                                  std::span<const double> weights,
                                  double norm) {
    if (locations.size() != weights.size())
        throw param_error("locations/weights size mismatch");
    std::vector<std::pair<double, double>> jumps;
    jumps.reserve(locations.size());
    for (std::size_t j = 0; j < locations.size(); ++j) {
        validate_location(locations[j]);
        if (!(weights[j] > 0.0)) throw param_error("jump weights must be positive");
        jumps.emplace_back(locations[j], weights[j]);
    }
    return assemble(std::move(jumps), norm);
}

double sup_norm(const EmpiricalPath& path) {
    std::size_t const c = path.jump_count();
    if (c == 0) throw param_error("sup_norm of an empty path");
    double const inv = 1.0 / path.norm;

    // Right values (W_k - D x_k)/norm for all k, then left limits
    // (W_{k-1} - D x_k)/norm as the same kernel over shifted cum weights.
    std::vector<double> scratch(c);
    kern::scale_residual_f64(path.cum_weight.data(), path.locations.data(),
                             path.drift, inv, scratch.data(), c);
    double best = kern::max_abs_f64(scratch.data(), c);

    double const first_left = (0.0 - path.drift * path.locations[0]) * inv;
    if (std::fabs(first_left) > best) best = std::fabs(first_left);
    if (c > 1) {
        kern::scale_residual_f64(path.cum_weight.data(),
                                 path.locations.data() + 1, path.drift, inv,
                                 scratch.data(), c - 1);
        double const left_max = kern::max_abs_f64(scratch.data(), c - 1);
        if (left_max > best) best = left_max;
    }
    return best;
}

std::vector<double> evaluate_grid(const EmpiricalPath& path, std::uint32_t m) {
    if (m < 2) throw param_error("grid needs at least two points");
    std::vector<double> const x = make_grid(m);
    std::vector<double> buckets(m, 0.0);
    for (std::size_t j = 0; j < path.jump_count(); ++j)
        buckets[bucket_of(path.locations[j], m)] += path.weights[j];
    for (std::uint32_t k = 1; k < m; ++k) buckets[k] += buckets[k - 1];
    // Every jump lands in buckets 1..m-1, so the last cumulative bucket is
    // total_weight in real arithmetic — but the bucket-grouped sum can round
    // differently than the jump-ordered cum_weight sum for non-integer
    // weights, leaving the right endpoint an ulp off zero. Force the
    // identity so (total - drift * 1) vanishes exactly.
    buckets[m - 1] = path.total_weight;

    std::vector<double> out(m);
    kern::scale_residual_f64(buckets.data(), x.data(), path.drift,
                             1.0 / path.norm, out.data(), m);
    return out;
}

GridEvaluator::GridEvaluator(std::uint32_t m)
    : m_(m), x_(make_grid(m)), buckets_(m, 0.0), vals_(m, 0.0) {}

void GridEvaluator::accumulate(std::span<const double> values,
                               std::span<const std::uint32_t> counts,
                               std::uint64_t n) {
    if (values.size() != counts.size())
        throw param_error("values/counts size mismatch");
    std::fill(buckets_.begin(), buckets_.end(), 0.0);
    std::uint64_t total = 0;
    for (std::size_t j = 0; j < values.size(); ++j) {
        validate_location(values[j]);
        buckets_[bucket_of(values[j], m_)] += static_cast<double>(counts[j]);
        total += counts[j];
    }
    if (total != n)
        throw consistency_error("cluster counts do not sum to n");
    for (std::uint32_t k = 1; k < m_; ++k) buckets_[k] += buckets_[k - 1];
}

void GridEvaluator::values(std::span<const double> values,
                           std::span<const std::uint32_t> counts,
                           std::uint64_t n, double norm,
                           std::span<double> out) {
    if (out.size() < m_) throw param_error("output span smaller than grid");
    if (!(norm > 0.0)) throw param_error("path norm must be positive");
    accumulate(values, counts, n);
    kern::scale_residual_f64(buckets_.data(), x_.data(),
                             static_cast<double>(n), 1.0 / norm, out.data(),
                             m_);
}

double GridEvaluator::sup(std::span<const double> values,
                          std::span<const std::uint32_t> counts,
                          std::uint64_t n, double norm) {
    this->values(values, counts, n, norm, vals_);
    return kern::max_abs_f64(vals_.data(), m_);
}

double marginal_from_clusters(std::span<const double> values,
                              std::span<const std::uint32_t> counts,
                              std::uint64_t n, double norm, double x) {
    if (values.size() != counts.size())
        throw param_error("values/counts size mismatch");
    if (!(x >= 0.0 && x <= 1.0)) throw param_error("marginal point outside [0,1]");
    if (!(norm > 0.0)) throw param_error("path norm must be positive");
    std::uint64_t below = 0;
    for (std::size_t j = 0; j < values.size(); ++j)
        if (values[j] <= x) below += counts[j];
    return (static_cast<double>(below) - static_cast<double>(n) * x) *
           (1.0 / norm);
}

EmpiricalPath scaled_path(const SimonState& state, const RegimeSpec& spec) {
    spec.validate();
    if (spec.p != state.params().p)
        throw regime_error("regime spec p does not match the run's p");
    double const norm = spec.scale(state.n());
    return build_path(state.values(), state.counts(), state.n(), norm);
}

} // namespace rep
