#include <algorithm>
#include <cmath>

#include "kernels_impl.hpp"

namespace wkbres::kernels::scalar {

namespace {
// |z| via the norm, matching the vector path's reduction.
inline double magnitude_sq(cplx z) { return z.real() * z.real() + z.imag() * z.imag(); }
}  // namespace

void log_derivative(std::span<const cplx> psi, std::span<const cplx> dpsi, std::span<cplx> out) {
    for (std::size_t i = 0; i < out.size(); ++i) {
        const cplx p = psi[i];
        const double inv = 1.0 / magnitude_sq(p);
        const cplx num = dpsi[i] * std::conj(p);
        out[i] = cplx(-num.real() * inv, -num.imag() * inv);
    }
}

void riccati_slope(std::span<const cplx> beta, std::span<const double> v, cplx eps, std::span<cplx> out) {
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = beta[i] * beta[i] - (v[i] - eps);
}

double riccati_residual(std::span<const cplx> beta, std::span<const double> v, cplx eps, double h) {
    const double inv2h = 0.5 / h;
    double worst = 0.0;
    for (std::size_t i = 1; i + 1 < beta.size(); ++i) {
        const cplx slope = (beta[i + 1] - beta[i - 1]) * inv2h;
        worst = std::max(worst, magnitude_sq(-slope + beta[i] * beta[i] - (v[i] - eps)));
    }
    return std::sqrt(worst);
}

double numerov_residual(std::span<const cplx> psi, std::span<const double> v, cplx eps, double h) {
    const double h2 = h * h;
    double worst = 0.0;
    for (std::size_t i = 1; i + 1 < psi.size(); ++i) {
        const cplx r = psi[i - 1] - 2.0 * psi[i] + psi[i + 1] - h2 * (v[i] - eps) * psi[i];
        worst = std::max(worst, magnitude_sq(r));
    }
    return std::sqrt(worst);
}

double max_abs(std::span<const cplx> z) {
    double worst = 0.0;
    for (const cplx& x : z) worst = std::max(worst, magnitude_sq(x));
    return std::sqrt(worst);
}

}  // namespace wkbres::kernels::scalar
