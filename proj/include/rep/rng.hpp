#pragma once

// Counter-based randomness. A stream is a pure function of (seed, draw index):
//
//     word(seed, i) = mix64(seed + (i + 1) * GOLDEN)      i = 0, 1, 2, ...
//     u53(seed, i)  = (word >> 11) * 2^-53                in [0, 1)
//
// where mix64 is the SplitMix64 finalizer. Consumers draw sequentially through
// UniformStream, which expands the counter in vectorized blocks; because the
// stream is counter-based, any draw is also addressable at random, which the
// determinism tests exploit. Seeds for replicates and sub-streams are derived
// by mixing, never by offsetting the counter, so streams cannot overlap by
// construction of distinct base seeds.
//
// Draw-order contract (relied on by reproducibility tests and the CLI's
// byte-identical-output guarantee):
//   * the reinforcement engine consumes exactly two u53 per step
//     (payload first, Bernoulli decision second) and one at initialization;
//   * Box-Muller consumes exactly two u53 per normal pair;
//   * replicate r of a Monte Carlo plan uses replicate_seed(master, r), and
//     each purpose within a replicate (engine, bridge, ...) its own sub-stream.

#include "rep/kernels.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>

namespace rep {

// Stream seed for replicate r under a master seed (bijective in r for fixed
// master, so replicate streams are pairwise distinct).
inline std::uint64_t replicate_seed(std::uint64_t master, std::uint64_t r) noexcept {
    return kern::detail::mix64(master ^ ((r + 1) * kern::detail::kGolden));
}

// Sub-stream within one replicate, keyed by purpose.
enum class StreamPurpose : std::uint64_t {
    engine = 1,      // reinforcement dynamics
    bridge = 2,      // Brownian bridge sampling
    xp_bridge = 3,   // fresh uniforms for discrete-bridge assembly
    generic = 4,     // anything else (calibration trials, synthetic samples)
};

inline std::uint64_t substream_seed(std::uint64_t seed, StreamPurpose purpose) noexcept {
    return kern::detail::mix64(
        seed ^ kern::detail::mix64(static_cast<std::uint64_t>(purpose)));
}

// Sequential view of one counter stream with block-expanded buffering.
class UniformStream {
  public:
    explicit UniformStream(std::uint64_t seed) noexcept : seed_(seed) {}

    std::uint64_t seed() const noexcept { return seed_; }

    // Number of u53 draws consumed so far.
    std::uint64_t consumed() const noexcept { return base_ + pos_; }

    double next_u53() noexcept {
        if (pos_ == filled_) refill();
        return buf_[pos_++];
    }

    // Strict comparison: P(true) = (number of 53-bit grid points below p)/2^53,
    // within 2^-53 of p for p in [0,1].
    bool next_bernoulli(double p) noexcept { return next_u53() < p; }

    // Uniform index in [0, m). m must be positive. The clamp covers the
    // round-to-nearest corner where u*m lands exactly on m (largest uniform,
    // m a power of two).
    std::uint64_t next_index(std::uint64_t m) noexcept {
        auto idx = static_cast<std::uint64_t>(next_u53() * static_cast<double>(m));
        return idx < m ? idx : m - 1;
    }

    // Value in (0,1): an exact 0.0 draw (prob 2^-53) is nudged to 2^-54, which
    // stays below every other representable draw, so relative order among draws
    // is unchanged. Used for innovation payloads so jump locations never sit on
    // the endpoints of [0,1].
    double next_open01() noexcept {
        double const u = next_u53();
        return u == 0.0 ? 0x1.0p-54 : u;
    }

  private:
    void refill() noexcept {
        base_ += filled_;
        filled_ = kBlock;
        kern::fill_u53(seed_, base_, buf_.data(), kBlock);
        pos_ = 0;
    }

    static constexpr std::size_t kBlock = 1024;
    std::uint64_t seed_;
    std::uint64_t base_ = 0;   // draw index of buf_[0]
    std::size_t filled_ = 0;
    std::size_t pos_ = 0;
    std::array<double, kBlock> buf_;
};

// Standard normals via Box-Muller on top of a UniformStream; exactly two
// uniforms per generated pair. log(1-u) is safe because u < 1 strictly.
class NormalStream {
  public:
    explicit NormalStream(std::uint64_t seed) noexcept : u_(seed) {}

    double next() noexcept {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double const u1 = u_.next_u53();
        double const u2 = u_.next_u53();
        double const r = std::sqrt(-2.0 * std::log1p(-u1));
        double const a = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

  private:
    UniformStream u_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace rep
