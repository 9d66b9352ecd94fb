#include "kernels_internal.hpp"

#include "rep/errors.hpp"

#include <atomic>

namespace rep::kern {

namespace {

bool cpu_has_avx2() noexcept {
#if REP_KERNELS_AVX2 && defined(__GNUC__)
    return __builtin_cpu_supports("avx2") > 0;
#else
    return false;
#endif
}

Isa detect_best() noexcept { return cpu_has_avx2() ? Isa::avx2 : Isa::scalar; }

std::atomic<Isa> g_isa{detect_best()};

const KernelTable& active_table() noexcept {
    return table_for(g_isa.load(std::memory_order_relaxed));
}

} // namespace

const char* isa_name(Isa isa) noexcept {
    switch (isa) {
        case Isa::scalar: return "scalar";
        case Isa::avx2: return "avx2";
    }
    return "unknown";
}

bool isa_supported(Isa isa) noexcept {
    switch (isa) {
        case Isa::scalar: return true;
        case Isa::avx2: return cpu_has_avx2();
    }
    return false;
}

Isa active_isa() noexcept { return g_isa.load(std::memory_order_relaxed); }

void force_isa(Isa isa) {
    if (!isa_supported(isa))
        throw param_error(std::string("kernel ISA not supported on this host: ") +
                          isa_name(isa));
    g_isa.store(isa, std::memory_order_relaxed);
}

const KernelTable& table_for(Isa isa) {
    switch (isa) {
        case Isa::scalar: return scalar::kTable;
        case Isa::avx2:
#if REP_KERNELS_AVX2
            if (cpu_has_avx2()) return avx2::kTable;
#endif
            throw param_error("AVX2 kernels unavailable on this host");
    }
    throw param_error("unknown kernel ISA");
}

std::uint64_t sum_sq_u32(const std::uint32_t* x, std::size_t n) noexcept {
    return active_table().sum_sq_u32(x, n);
}
std::uint32_t max_u32(const std::uint32_t* x, std::size_t n) noexcept {
    return active_table().max_u32(x, n);
}
double sum_f64(const double* x, std::size_t n) noexcept {
    return active_table().sum_f64(x, n);
}
double sum_sq_f64(const double* x, std::size_t n) noexcept {
    return active_table().sum_sq_f64(x, n);
}
double max_abs_f64(const double* x, std::size_t n) noexcept {
    return active_table().max_abs_f64(x, n);
}
void scale_residual_f64(const double* a, const double* b, double scale,
                        double mul, double* out, std::size_t n) noexcept {
    active_table().scale_residual_f64(a, b, scale, mul, out, n);
}
void fill_u64(std::uint64_t seed, std::uint64_t base, std::uint64_t* out,
              std::size_t n) noexcept {
    active_table().fill_u64(seed, base, out, n);
}
void fill_u53(std::uint64_t seed, std::uint64_t base, double* out,
              std::size_t n) noexcept {
    active_table().fill_u53(seed, base, out, n);
}

} // namespace rep::kern
