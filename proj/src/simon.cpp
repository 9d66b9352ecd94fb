#include "rep/simon.hpp"

#include "rep/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace rep {

void ReinforcementParams::validate() const {
    // p = 0 and p = 1 are degenerate (pure innovation / single cluster) and
    // outside the model; rejected rather than special-cased.
    if (!(p > 0.0 && p < 1.0))
        throw param_error("reinforcement probability must lie strictly in "
                          "(0,1), got " + std::to_string(p));
    if (n_max == 0) throw param_error("n_max must be positive");
    if (n_max >= (std::uint64_t{1} << 32))
        throw param_error("n_max must be below 2^32 (32-bit cluster ids)");
}

SimonState::SimonState(const ReinforcementParams& params)
    : params_(params), stream_(params.seed) {
    params_.validate();
    owner_.reserve(params_.n_max);
    // Innovations are 1 + Binomial(n-1, 1-p); reserve mean + 5 sigma so the
    // value/count vectors essentially never reallocate mid-run.
    double const mean = (1.0 - params_.p) * static_cast<double>(params_.n_max);
    double const slack = 5.0 * std::sqrt(static_cast<double>(params_.n_max)) + 64.0;
    auto const hint = static_cast<std::uint64_t>(
        std::min(mean + slack, static_cast<double>(params_.n_max)));
    counts_.reserve(hint);
    values_.reserve(hint);

    // Time 1: the first item always innovates (one draw).
    owner_.push_back(0);
    counts_.push_back(1);
    values_.push_back(stream_.next_open01());
    s2_ = 1;
}

void SimonState::step() {
    // Fixed draw order: payload first, Bernoulli decision second. The payload
    // becomes the copy index on repetition and the innovation value otherwise.
    double const payload = stream_.next_u53();
    double const decision = stream_.next_u53();
    std::uint64_t const n = owner_.size();
    if (decision < params_.p) {
        auto idx = static_cast<std::uint64_t>(payload * static_cast<double>(n));
        if (idx >= n) idx = n - 1;  // round-to-nearest corner, see rng.hpp
        std::uint32_t const j = owner_[idx];
        std::uint32_t const c = ++counts_[j];
        s2_ += 2 * std::uint64_t{c} - 1;
        owner_.push_back(j);
    } else {
        auto const j = static_cast<std::uint32_t>(counts_.size());
        counts_.push_back(1);
        values_.push_back(payload == 0.0 ? 0x1.0p-54 : payload);
        s2_ += 1;
        owner_.push_back(j);
    }
}

void SimonState::advance(std::uint64_t k) {
    if (owner_.size() + k > params_.n_max)
        throw state_error("advance would exceed declared capacity n_max=" +
                          std::to_string(params_.n_max));
    for (std::uint64_t i = 0; i < k; ++i) step();
}

std::vector<ClusterSnapshot> SimonState::run_to(
    std::span<const std::uint64_t> targets) {
    std::vector<ClusterSnapshot> out;
    out.reserve(targets.size());
    std::uint64_t prev = 0;
    for (std::uint64_t t : targets) {
        if (t <= prev || t < n())
            throw param_error("checkpoints must be ascending and reach at "
                              "least the current time");
        if (t > params_.n_max)
            throw param_error("checkpoint beyond declared capacity");
        advance(t - n());
        out.push_back(snapshot());
        prev = t;
    }
    return out;
}

ClusterSnapshot SimonState::snapshot() const {
    ClusterSnapshot s;
    s.n = n();
    s.innovations = counts_.size();
    s.sum_sq = s2_;
    s.counts = counts_;
    std::sort(s.counts.begin(), s.counts.end(), std::greater<>{});
    s.max_count = s.counts.empty() ? 0 : s.counts.front();
    for (std::uint32_t c : s.counts) ++s.histogram[c];

    // Accounting cross-checks; cheap next to any run long enough to matter.
    std::uint64_t total = 0;
    std::uint64_t hist_total = 0;
    std::uint64_t hist_sq = 0;
    for (std::uint32_t c : s.counts) total += c;
    for (auto [k, cnt] : s.histogram) {
        hist_total += std::uint64_t{k} * cnt;
        hist_sq += std::uint64_t{k} * k * cnt;
    }
    if (total != s.n || hist_total != s.n)
        throw consistency_error("cluster sizes do not partition the sequence");
    if (hist_sq != s2_ ||
        kern::sum_sq_u32(s.counts.data(), s.counts.size()) != s2_)
        throw consistency_error("incremental sum of squares drifted from its "
                                "recomputation");
    return s;
}

std::uint32_t SimonState::max_count() const noexcept {
    return kern::max_u32(counts_.data(), counts_.size());
}

std::vector<std::pair<double, std::uint32_t>> SimonState::cluster_values() const {
    std::vector<std::pair<double, std::uint32_t>> out;
    out.reserve(counts_.size());
    for (std::size_t j = 0; j < counts_.size(); ++j)
        out.emplace_back(values_[j], counts_[j]);
    return out;
}

} // namespace rep
