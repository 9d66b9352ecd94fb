#pragma once

// Linear-reinforcement ("rich get richer") dynamics on a growing sequence.
// Time n starts at 1 with a single item carrying a fresh uniform value. At
// each later step, with probability p the new item copies the value of a
// uniformly chosen earlier item (joining that item's cluster); otherwise it
// innovates with a fresh uniform value, opening a new cluster. The first item
// is always an innovation.
//
// Representation: a flat step -> cluster-id array (owner_), so "copy a uniform
// past item" is one uniform index draw plus one array read, O(1) per step with
// sequential-friendly memory. Cluster ids are 32-bit (the engine caps runs
// below 2^32 items); the sum of squared cluster sizes is tracked incrementally
// in a u64, which cannot overflow since sum(N_j^2) <= n^2 < 2^64.
//
// Randomness: one dedicated counter-based stream; exactly one u53 at
// initialization (the first value) and exactly two per step, payload first
// (the would-be innovation value / copy index) and the Bernoulli decision
// second. This fixed draw order is part of the engine's reproducibility
// contract: identical (params, seed) gives bit-identical runs.

#include "rep/errors.hpp"
#include "rep/rng.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace rep {

struct ReinforcementParams {
    double p = 0.5;            // reinforcement (copy) probability, in (0,1)
    std::uint64_t n_max = 0;   // declared capacity; runs may not exceed it
    std::uint64_t seed = 0;    // base seed of the engine's stream

    void validate() const;
};

// Cluster bookkeeping at a fixed time, sizes sorted in decreasing order.
// histogram[k] is the raw number of clusters of exact size k (C_k(n)).
struct ClusterSnapshot {
    std::uint64_t n = 0;            // items so far
    std::uint64_t innovations = 0;  // number of clusters
    std::uint64_t sum_sq = 0;       // sum of squared cluster sizes
    std::uint32_t max_count = 0;
    std::vector<std::uint32_t> counts;             // decreasing
    std::map<std::uint32_t, std::uint64_t> histogram;  // size k -> C_k(n)
};

class SimonState {
  public:
    explicit SimonState(const ReinforcementParams& params);

    // Advance by k steps. Throws state_error past the declared capacity.
    void advance(std::uint64_t k);

    // Advance through a nondecreasing list of target times (each >= current n)
    // and return the snapshot at each one.
    std::vector<ClusterSnapshot> run_to(std::span<const std::uint64_t> targets);

    // Full snapshot at the current time (validates internal accounting).
    ClusterSnapshot snapshot() const;

    std::uint64_t n() const noexcept { return owner_.size(); }
    std::uint64_t innovations() const noexcept { return counts_.size(); }
    std::uint64_t sum_sq() const noexcept { return s2_; }
    std::uint32_t max_count() const noexcept;

    // Unsorted cluster sizes, indexed by cluster id (creation order).
    std::span<const std::uint32_t> counts() const noexcept { return counts_; }

    // Innovation values U_j, indexed by cluster id; all strictly inside (0,1).
    std::span<const double> values() const noexcept { return values_; }

    // (U_j, N_j(n)) pairs in creation order; counts sum to n.
    std::vector<std::pair<double, std::uint32_t>> cluster_values() const;

    // Flat step -> cluster-id map (the v(n) lookup structure).
    std::span<const std::uint32_t> owner() const noexcept { return owner_; }

    const ReinforcementParams& params() const noexcept { return params_; }

  private:
    void step();

    ReinforcementParams params_;
    UniformStream stream_;
    std::vector<std::uint32_t> owner_;   // step -> cluster id
    std::vector<std::uint32_t> counts_;  // cluster id -> size
    std::vector<double> values_;         // cluster id -> value
    std::uint64_t s2_ = 0;
};

} // namespace rep
