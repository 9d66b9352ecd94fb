// Scalar reference kernels. These define the numeric contract: every other
// implementation must reproduce them bit for bit. Keep them boring.

#include "kernels_internal.hpp"

#include <cmath>

namespace rep::kern::scalar {

using detail::kGolden;
using detail::mix64;
using detail::u53_from_word;

std::uint64_t sum_sq_u32(const std::uint32_t* x, std::size_t n) noexcept {
    std::uint64_t acc[4] = {0, 0, 0, 0};
    std::size_t const body = n - n % 4;
    for (std::size_t i = 0; i < body; i += 4) {
        for (std::size_t l = 0; l < 4; ++l) {
            std::uint64_t const v = x[i + l];
            acc[l] += v * v;
        }
    }
    std::uint64_t total = (acc[0] + acc[1]) + (acc[2] + acc[3]);
    for (std::size_t i = body; i < n; ++i) {
        std::uint64_t const v = x[i];
        total += v * v;
    }
    return total;
}

std::uint32_t max_u32(const std::uint32_t* x, std::size_t n) noexcept {
    std::uint32_t m = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (x[i] > m) m = x[i];
    return m;
}

double sum_f64(const double* x, std::size_t n) noexcept {
    double acc[4] = {0.0, 0.0, 0.0, 0.0};
    std::size_t const body = n - n % 4;
    for (std::size_t i = 0; i < body; i += 4)
        for (std::size_t l = 0; l < 4; ++l) acc[l] += x[i + l];
    double total = (acc[0] + acc[1]) + (acc[2] + acc[3]);
    for (std::size_t i = body; i < n; ++i) total += x[i];
    return total;
}

double sum_sq_f64(const double* x, std::size_t n) noexcept {
    double acc[4] = {0.0, 0.0, 0.0, 0.0};
    std::size_t const body = n - n % 4;
    for (std::size_t i = 0; i < body; i += 4)
        for (std::size_t l = 0; l < 4; ++l) acc[l] += x[i + l] * x[i + l];
    double total = (acc[0] + acc[1]) + (acc[2] + acc[3]);
    for (std::size_t i = body; i < n; ++i) total += x[i] * x[i];
    return total;
}

double max_abs_f64(const double* x, std::size_t n) noexcept {
    // max(|x|) is association-free; a plain running max suffices for
    // bit-equivalence as long as NaN handling matches (we propagate the
    // max of the non-NaN prefix; inputs are never NaN in this codebase).
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double const a = std::fabs(x[i]);
        if (a > m) m = a;
    }
    return m;
}

void scale_residual_f64(const double* a, const double* b, double scale,
                        double mul, double* out, std::size_t n) noexcept {
    for (std::size_t i = 0; i < n; ++i) out[i] = (a[i] - scale * b[i]) * mul;
}

void fill_u64(std::uint64_t seed, std::uint64_t base, std::uint64_t* out,
              std::size_t n) noexcept {
    for (std::size_t i = 0; i < n; ++i)
        out[i] = mix64(seed + (base + i + 1) * kGolden);
}

void fill_u53(std::uint64_t seed, std::uint64_t base, double* out,
              std::size_t n) noexcept {
    for (std::size_t i = 0; i < n; ++i)
        out[i] = u53_from_word(mix64(seed + (base + i + 1) * kGolden));
}

const KernelTable kTable = {
    &sum_sq_u32, &max_u32,           &sum_f64,  &sum_sq_f64,
    &max_abs_f64, &scale_residual_f64, &fill_u64, &fill_u53,
};

} // namespace rep::kern::scalar
