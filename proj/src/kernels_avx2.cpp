// AVX2 kernel variants. This translation unit is compiled with -mavx2 and is
// only reachable through the runtime dispatcher, which checks CPU support
// first. Reductions keep the scalar reference's four-accumulator association
// (one __m256d register holds the four accumulators, combined as
// (a0+a1)+(a2+a3)), so results are bit-identical to the scalar kernels. The
// unit is built without -mfma on purpose: no fused multiply-add may appear,
// or the f64 reductions would stop matching the reference.

#include "kernels_internal.hpp"

#if REP_KERNELS_AVX2

#include <immintrin.h>

namespace rep::kern::avx2 {
namespace {

using detail::kGolden;
using detail::mix64;
using detail::u53_from_word;

// (a0+a1)+(a2+a3) with the adds in exactly that order.
inline double hsum4(__m256d acc) noexcept {
    __m128d lo = _mm256_castpd256_pd128(acc);     // a0 a1
    __m128d hi = _mm256_extractf128_pd(acc, 1);   // a2 a3
    __m128d s01 = _mm_add_sd(lo, _mm_unpackhi_pd(lo, lo));
    __m128d s23 = _mm_add_sd(hi, _mm_unpackhi_pd(hi, hi));
    return _mm_cvtsd_f64(_mm_add_sd(s01, s23));
}

// Full 64x64->64 multiply by a constant, from 32x32->64 partial products.
inline __m256i mul64_const(__m256i a, std::uint64_t c) noexcept {
    const __m256i c_lo = _mm256_set1_epi64x(static_cast<long long>(c & 0xFFFFFFFFull));
    const __m256i c_hi = _mm256_set1_epi64x(static_cast<long long>(c >> 32));
    __m256i lo_lo = _mm256_mul_epu32(a, c_lo);            // lo(a)*lo(c)
    __m256i hi_lo = _mm256_mul_epu32(_mm256_srli_epi64(a, 32), c_lo);
    __m256i lo_hi = _mm256_mul_epu32(a, c_hi);
    __m256i cross = _mm256_slli_epi64(_mm256_add_epi64(hi_lo, lo_hi), 32);
    return _mm256_add_epi64(lo_lo, cross);
}

inline __m256i mix64_vec(__m256i z) noexcept {
    z = _mm256_xor_si256(z, _mm256_srli_epi64(z, 30));
    z = mul64_const(z, 0xBF58476D1CE4E5B9ull);
    z = _mm256_xor_si256(z, _mm256_srli_epi64(z, 27));
    z = mul64_const(z, 0x94D049BB133111EBull);
    z = _mm256_xor_si256(z, _mm256_srli_epi64(z, 31));
    return z;
}

// Exact u64 -> f64 for values < 2^53, matching the scalar cast bit for bit.
// Split into 32-bit halves, reinterpret each against a power-of-two exponent,
// and recombine; every intermediate is exact in this range.
inline __m256d cvt_u53_pd(__m256i k) noexcept {
    const __m256i exp84 = _mm256_set1_epi64x(0x4530000000000000ll);
    const __m256i exp52 = _mm256_set1_epi64x(0x4330000000000000ll);
    const __m256d bias = _mm256_set1_pd(0x1.00000001p+84); // 2^84 + 2^52
    __m256i hi = _mm256_or_si256(_mm256_srli_epi64(k, 32), exp84);
    __m256i lo = _mm256_or_si256(
        _mm256_and_si256(k, _mm256_set1_epi64x(0xFFFFFFFFll)), exp52);
    return _mm256_add_pd(_mm256_sub_pd(_mm256_castsi256_pd(hi), bias),
                         _mm256_castsi256_pd(lo));
}

std::uint64_t sum_sq_u32(const std::uint32_t* x, std::size_t n) noexcept {
    __m256i acc = _mm256_setzero_si256();
    std::size_t const body = n - n % 4;
    for (std::size_t i = 0; i < body; i += 4) {
        __m128i v32 = _mm_loadu_si128(reinterpret_cast<const __m128i*>(x + i));
        __m256i v = _mm256_cvtepu32_epi64(v32);
        // values fit in 32 bits, so the low-half product is the full square
        acc = _mm256_add_epi64(acc, _mm256_mul_epu32(v, v));
    }
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    std::uint64_t total = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
    for (std::size_t i = body; i < n; ++i) {
        std::uint64_t const v = x[i];
        total += v * v;
    }
    return total;
}

std::uint32_t max_u32(const std::uint32_t* x, std::size_t n) noexcept {
    std::uint32_t m = 0;
    std::size_t const body = n - n % 8;
    if (body) {
        __m256i acc = _mm256_setzero_si256();
        for (std::size_t i = 0; i < body; i += 8)
            acc = _mm256_max_epu32(
                acc, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i)));
        alignas(32) std::uint32_t lanes[8];
        _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
        for (std::uint32_t v : lanes)
            if (v > m) m = v;
    }
    for (std::size_t i = body; i < n; ++i)
        if (x[i] > m) m = x[i];
    return m;
}

double sum_f64(const double* x, std::size_t n) noexcept {
    __m256d acc = _mm256_setzero_pd();
    std::size_t const body = n - n % 4;
    for (std::size_t i = 0; i < body; i += 4)
        acc = _mm256_add_pd(acc, _mm256_loadu_pd(x + i));
    double total = hsum4(acc);
    for (std::size_t i = body; i < n; ++i) total += x[i];
    return total;
}

double sum_sq_f64(const double* x, std::size_t n) noexcept {
    __m256d acc = _mm256_setzero_pd();
    std::size_t const body = n - n % 4;
    for (std::size_t i = 0; i < body; i += 4) {
        __m256d v = _mm256_loadu_pd(x + i);
        acc = _mm256_add_pd(acc, _mm256_mul_pd(v, v));
    }
    double total = hsum4(acc);
    for (std::size_t i = body; i < n; ++i) total += x[i] * x[i];
    return total;
}

double max_abs_f64(const double* x, std::size_t n) noexcept {
    const __m256d abs_mask =
        _mm256_castsi256_pd(_mm256_set1_epi64x(0x7FFFFFFFFFFFFFFFll));
    __m256d acc = _mm256_setzero_pd();
    std::size_t const body = n - n % 4;
    for (std::size_t i = 0; i < body; i += 4)
        acc = _mm256_max_pd(acc, _mm256_and_pd(abs_mask, _mm256_loadu_pd(x + i)));
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double m = 0.0;
    for (double v : lanes)
        if (v > m) m = v;
    for (std::size_t i = body; i < n; ++i) {
        double const a = x[i] < 0.0 ? -x[i] : x[i];
        if (a > m) m = a;
    }
    return m;
}

void scale_residual_f64(const double* a, const double* b, double scale,
                        double mul, double* out, std::size_t n) noexcept {
    const __m256d vs = _mm256_set1_pd(scale);
    const __m256d vm = _mm256_set1_pd(mul);
    std::size_t const body = n - n % 4;
    for (std::size_t i = 0; i < body; i += 4) {
        __m256d va = _mm256_loadu_pd(a + i);
        __m256d vb = _mm256_loadu_pd(b + i);
        __m256d r = _mm256_mul_pd(_mm256_sub_pd(va, _mm256_mul_pd(vs, vb)), vm);
        _mm256_storeu_pd(out + i, r);
    }
    for (std::size_t i = body; i < n; ++i) out[i] = (a[i] - scale * b[i]) * mul;
}

void fill_u64(std::uint64_t seed, std::uint64_t base, std::uint64_t* out,
              std::size_t n) noexcept {
    std::size_t const body = n - n % 4;
    if (body) {
        // counter_i = seed + (base+i+1)*GOLDEN advances by 4*GOLDEN per block
        __m256i ctr = _mm256_set_epi64x(
            static_cast<long long>(seed + (base + 4) * kGolden),
            static_cast<long long>(seed + (base + 3) * kGolden),
            static_cast<long long>(seed + (base + 2) * kGolden),
            static_cast<long long>(seed + (base + 1) * kGolden));
        const __m256i step = _mm256_set1_epi64x(static_cast<long long>(4 * kGolden));
        for (std::size_t i = 0; i < body; i += 4) {
            _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i),
                                mix64_vec(ctr));
            ctr = _mm256_add_epi64(ctr, step);
        }
    }
    for (std::size_t i = body; i < n; ++i)
        out[i] = mix64(seed + (base + i + 1) * kGolden);
}

void fill_u53(std::uint64_t seed, std::uint64_t base, double* out,
              std::size_t n) noexcept {
    const __m256d scale = _mm256_set1_pd(0x1.0p-53);
    std::size_t const body = n - n % 4;
    if (body) {
        __m256i ctr = _mm256_set_epi64x(
            static_cast<long long>(seed + (base + 4) * kGolden),
            static_cast<long long>(seed + (base + 3) * kGolden),
            static_cast<long long>(seed + (base + 2) * kGolden),
            static_cast<long long>(seed + (base + 1) * kGolden));
        const __m256i step = _mm256_set1_epi64x(static_cast<long long>(4 * kGolden));
        for (std::size_t i = 0; i < body; i += 4) {
            __m256i w = _mm256_srli_epi64(mix64_vec(ctr), 11);
            _mm256_storeu_pd(out + i, _mm256_mul_pd(cvt_u53_pd(w), scale));
            ctr = _mm256_add_epi64(ctr, step);
        }
    }
    for (std::size_t i = body; i < n; ++i)
        out[i] = u53_from_word(mix64(seed + (base + i + 1) * kGolden));
}

} // namespace

const KernelTable kTable = {
    &sum_sq_u32, &max_u32,           &sum_f64,  &sum_sq_f64,
    &max_abs_f64, &scale_residual_f64, &fill_u64, &fill_u53,
};

} // namespace rep::kern::avx2

#endif // REP_KERNELS_AVX2
