#pragma once

// Step-reinforced random walks driven by the reinforcement engine. Each
// cluster j carries one step draw xi_j = m_bar(U_j) - mu built from the
// cluster's stored uniform value, so the walk identity
//
//     S_hat(n) = sum_j N_j(n) * xi_j
//
// holds literally: the per-item and per-cluster accumulations consume the
// same randomness. Rademacher (+/-1) steps recover the elephant random walk.

#include "rep/harness.hpp"
#include "rep/simon.hpp"
#include "rep/steps.hpp"

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace rep {

// One trajectory observed at strictly increasing checkpoints; returns raw
// (n, S_hat(n)) pairs. params.seed is used as given (single-run semantics;
// Monte Carlo replication goes through the harness).
std::vector<std::pair<std::uint64_t, double>> run_walk(
    const ReinforcementParams& params, const StepSpec& spec,
    std::span<const std::uint64_t> checkpoints);

// Regime-dispatched endpoint checks over R replicates.
//   p < 1/2: Var(S_hat/sqrt(n)) against sigma^2/(1-2p) within 5%, plus a
//            two-sample KS against Gaussian samples of that variance.
//   p = 1/2: the same under the sqrt(n log n) norm against sigma^2, 15%
//            (the convergence rate is logarithmic, hence the wider band).
//   p > 1/2: Var(S_hat/n^p) against sigma^2 * sumbeta_constant(p) within
//            10% (for centered steps independent of cluster sizes,
//            E[S_hat^2] = sigma^2 * E[sum_j N_j^2]); the distributional form
//            of the supercritical fluctuations is left open, so no KS row.
// Every report also carries the centering row: mean of S_hat(n)/n within
// 4 SE of 0.
CheckReport regime_report(double p, const StepSpec& spec, std::uint64_t n,
                          std::uint64_t replicates, std::uint64_t master_seed,
                          std::uint32_t workers = 1);

} // namespace rep
