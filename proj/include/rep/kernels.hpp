#pragma once

// Data-parallel kernels with a scalar reference implementation and an AVX2
// variant selected at runtime. Every floating-point reduction follows a fixed
// four-accumulator association: lane L accumulates elements L, L+4, L+8, ...;
// lanes combine as (acc0 + acc1) + (acc2 + acc3); the tail (n % 4 elements)
// folds into the combined value in index order. Because scalar and SIMD
// variants share this association (and the build disables FMA contraction),
// they produce bit-identical results, so runtime dispatch can never change
// program output. The equivalence is enforced by tests, not assumed.

#include <cstddef>
#include <cstdint>

namespace rep::kern {

enum class Isa { scalar = 0, avx2 = 1 };

const char* isa_name(Isa isa) noexcept;
bool isa_supported(Isa isa) noexcept;

// Currently active implementation set (highest supported by default).
Isa active_isa() noexcept;

// Force a specific implementation (tests, or the CLI --isa flag).
// Throws rep::param_error if the host does not support it.
void force_isa(Isa isa);

// ---- u32 reductions (cluster count vectors) -------------------------------

// sum of x[i]^2 as u64 (exact; no overflow for n < 2^32 and sum(x) < 2^32)
std::uint64_t sum_sq_u32(const std::uint32_t* x, std::size_t n) noexcept;

std::uint32_t max_u32(const std::uint32_t* x, std::size_t n) noexcept;

// ---- f64 reductions (paths, bridges, statistic folds) ---------------------

double sum_f64(const double* x, std::size_t n) noexcept;
double sum_sq_f64(const double* x, std::size_t n) noexcept;
double max_abs_f64(const double* x, std::size_t n) noexcept;

// out[i] = (a[i] - scale * b[i]) * mul
// (bridge assembly: cumulative sum minus drift/endpoint share, then
// normalization; elementwise, so association does not arise)
void scale_residual_f64(const double* a, const double* b, double scale,
                        double mul, double* out, std::size_t n) noexcept;

// ---- counter-based uniform expansion --------------------------------------

// Raw SplitMix64 words: out[i] = mix64(seed + (base + i + 1) * GOLDEN).
void fill_u64(std::uint64_t seed, std::uint64_t base, std::uint64_t* out,
              std::size_t n) noexcept;

// 53-bit uniforms in [0,1): out[i] = (word >> 11) * 2^-53 for the same words.
void fill_u53(std::uint64_t seed, std::uint64_t base, double* out,
              std::size_t n) noexcept;

// ---- implementation tables (internal; exposed for equivalence tests) ------

struct KernelTable {
    std::uint64_t (*sum_sq_u32)(const std::uint32_t*, std::size_t) noexcept;
    std::uint32_t (*max_u32)(const std::uint32_t*, std::size_t) noexcept;
    double (*sum_f64)(const double*, std::size_t) noexcept;
    double (*sum_sq_f64)(const double*, std::size_t) noexcept;
    double (*max_abs_f64)(const double*, std::size_t) noexcept;
    void (*scale_residual_f64)(const double*, const double*, double, double,
                               double*, std::size_t) noexcept;
    void (*fill_u64)(std::uint64_t, std::uint64_t, std::uint64_t*,
                     std::size_t) noexcept;
    void (*fill_u53)(std::uint64_t, std::uint64_t, double*,
                     std::size_t) noexcept;
};

// Table for a specific ISA; throws rep::param_error if unsupported.
const KernelTable& table_for(Isa isa);

namespace detail {
// SplitMix64 increment and finalizer, shared by scalar and SIMD paths.
inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

inline constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}

// Canonical 53-bit uniform in [0,1).
inline constexpr double u53_from_word(std::uint64_t w) noexcept {
    return static_cast<double>(w >> 11) * 0x1.0p-53;
}
} // namespace detail

} // namespace rep::kern
