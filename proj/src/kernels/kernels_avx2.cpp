// Compiled with -mavx2 -mfma; only reached after the dispatcher has seen
// both feature bits.

#include <immintrin.h>

#include <algorithm>
#include <cmath>

#include "kernels_impl.hpp"

namespace wkbres::kernels::avx2 {

namespace {

// Two interleaved complex values per register: [re0, im0, re1, im1].
inline __m256d load2(const cplx* p) { return _mm256_loadu_pd(reinterpret_cast<const double*>(p)); }
inline void store2(cplx* p, __m256d x) { _mm256_storeu_pd(reinterpret_cast<double*>(p), x); }

inline __m256d cmul(__m256d a, __m256d b) {
    const __m256d a_re = _mm256_movedup_pd(a);
    const __m256d a_im = _mm256_permute_pd(a, 0xF);
    const __m256d b_swap = _mm256_permute_pd(b, 0x5);
    return _mm256_fmaddsub_pd(a_re, b, _mm256_mul_pd(a_im, b_swap));
}

// |z|^2 broadcast into both slots of each complex.
inline __m256d norm2(__m256d a) {
    const __m256d sq = _mm256_mul_pd(a, a);
    return _mm256_add_pd(sq, _mm256_permute_pd(sq, 0x5));
}

inline __m256d conj(__m256d a) { return _mm256_xor_pd(a, _mm256_setr_pd(0.0, -0.0, 0.0, -0.0)); }

// [v0, 0, v1, 0]
inline __m256d real_pair(const double* v) {
    const __m256d d = _mm256_castpd128_pd256(_mm_loadu_pd(v));
    const __m256d dup = _mm256_permute4x64_pd(d, _MM_SHUFFLE(1, 1, 0, 0));
    return _mm256_blend_pd(dup, _mm256_setzero_pd(), 0b1010);
}

inline __m256d broadcast(cplx z) { return _mm256_setr_pd(z.real(), z.imag(), z.real(), z.imag()); }

inline double hmax(__m256d x) {
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, x);
    return std::max(std::max(lanes[0], lanes[1]), std::max(lanes[2], lanes[3]));
}

}  // namespace

void log_derivative(std::span<const cplx> psi, std::span<const cplx> dpsi, std::span<cplx> out) {
    const std::size_t n = out.size();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d p = load2(&psi[i]);
        const __m256d num = cmul(load2(&dpsi[i]), conj(p));
        const __m256d neg_inv = _mm256_div_pd(_mm256_set1_pd(-1.0), norm2(p));
        store2(&out[i], _mm256_mul_pd(num, neg_inv));
    }
    if (i < n) scalar::log_derivative(psi.subspan(i), dpsi.subspan(i), out.subspan(i));
}

void riccati_slope(std::span<const cplx> beta, std::span<const double> v, cplx eps, std::span<cplx> out) {
    const std::size_t n = out.size();
    const __m256d e = broadcast(eps);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d b = load2(&beta[i]);
        const __m256d shift = _mm256_sub_pd(real_pair(&v[i]), e);
        store2(&out[i], _mm256_sub_pd(cmul(b, b), shift));
    }
    if (i < n) scalar::riccati_slope(beta.subspan(i), v.subspan(i), eps, out.subspan(i));
}

double riccati_residual(std::span<const cplx> beta, std::span<const double> v, cplx eps, double h) {
    const std::size_t n = beta.size();
    if (n < 3) return 0.0;
    const __m256d e = broadcast(eps);
    const __m256d inv2h = _mm256_set1_pd(0.5 / h);
    __m256d worst = _mm256_setzero_pd();
    std::size_t i = 1;
    for (; i + 2 < n; i += 2) {
        const __m256d b = load2(&beta[i]);
        const __m256d slope = _mm256_mul_pd(_mm256_sub_pd(load2(&beta[i + 1]), load2(&beta[i - 1])), inv2h);
        const __m256d shift = _mm256_sub_pd(real_pair(&v[i]), e);
        const __m256d r = _mm256_sub_pd(_mm256_sub_pd(cmul(b, b), slope), shift);
        worst = _mm256_max_pd(worst, norm2(r));
    }
    double result = std::sqrt(hmax(worst));
    if (i + 1 < n) {
        // Remaining interior node i needs beta[i-1 .. i+1].
        const std::size_t lo = i - 1;
        result = std::max(result, scalar::riccati_residual(beta.subspan(lo), v.subspan(lo), eps, h));
    }
    return result;
}

double numerov_residual(std::span<const cplx> psi, std::span<const double> v, cplx eps, double h) {
    const std::size_t n = psi.size();
    if (n < 3) return 0.0;
    const __m256d e = broadcast(eps);
    const __m256d h2 = _mm256_set1_pd(h * h);
    const __m256d two = _mm256_set1_pd(2.0);
    __m256d worst = _mm256_setzero_pd();
    std::size_t i = 1;
    for (; i + 2 < n; i += 2) {
        const __m256d p = load2(&psi[i]);
        const __m256d lap = _mm256_add_pd(_mm256_fnmadd_pd(two, p, load2(&psi[i - 1])), load2(&psi[i + 1]));
        const __m256d shift = _mm256_mul_pd(_mm256_sub_pd(real_pair(&v[i]), e), h2);
        worst = _mm256_max_pd(worst, norm2(_mm256_sub_pd(lap, cmul(shift, p))));
    }
    double result = std::sqrt(hmax(worst));
    if (i + 1 < n) {
        const std::size_t lo = i - 1;
        result = std::max(result, scalar::numerov_residual(psi.subspan(lo), v.subspan(lo), eps, h));
    }
    return result;
}

double max_abs(std::span<const cplx> z) {
    const std::size_t n = z.size();
    __m256d worst = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) worst = _mm256_max_pd(worst, norm2(load2(&z[i])));
    double result = hmax(worst);
    if (i < n) result = std::max(result, std::norm(z[i]));
    return std::sqrt(result);
}

}  // namespace wkbres::kernels::avx2
