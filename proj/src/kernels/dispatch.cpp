#include <atomic>
#include <cstdlib>
#include <string_view>

#include "kernels_impl.hpp"

namespace wkbres::kernels {

namespace {

constexpr Table kScalar{
    scalar::log_derivative, scalar::riccati_slope, scalar::riccati_residual,
    scalar::numerov_residual, scalar::max_abs,
};

#if defined(WKBRES_HAVE_AVX2_KERNELS)
constexpr Table kAvx2{
    avx2::log_derivative, avx2::riccati_slope, avx2::riccati_residual,
    avx2::numerov_residual, avx2::max_abs,
};
#endif

bool cpu_has_avx2() noexcept {
#if defined(WKBRES_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Backend initial_backend() noexcept {
    if (const char* env = std::getenv("WKBRES_KERNELS"); env && std::string_view(env) == "scalar")
        return Backend::Scalar;
    return cpu_has_avx2() ? Backend::Avx2 : Backend::Scalar;
}

std::atomic<Backend>& current() noexcept {
    static std::atomic<Backend> backend{initial_backend()};
    return backend;
}

}  // namespace

std::string_view to_string(Backend b) noexcept {
    return b == Backend::Avx2 ? "avx2" : "scalar";
}

bool available(Backend b) noexcept {
    return b == Backend::Scalar || cpu_has_avx2();
}

Backend active() noexcept { return current().load(std::memory_order_relaxed); }

bool select(Backend b) noexcept {
    if (!available(b)) return false;
    current().store(b, std::memory_order_relaxed);
    return true;
}

const Table& table(Backend b) noexcept {
#if defined(WKBRES_HAVE_AVX2_KERNELS)
    if (b == Backend::Avx2 && cpu_has_avx2()) return kAvx2;
#endif
    (void)b;
    return kScalar;
}

const Table& table() noexcept { return table(active()); }

}  // namespace wkbres::kernels
