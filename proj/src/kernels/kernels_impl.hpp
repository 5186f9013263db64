#pragma once

#include "wkbres/kernels.hpp"

namespace wkbres::kernels {

namespace scalar {
void log_derivative(std::span<const cplx> psi, std::span<const cplx> dpsi, std::span<cplx> out);
void riccati_slope(std::span<const cplx> beta, std::span<const double> v, cplx eps, std::span<cplx> out);
double riccati_residual(std::span<const cplx> beta, std::span<const double> v, cplx eps, double h);
double numerov_residual(std::span<const cplx> psi, std::span<const double> v, cplx eps, double h);
double max_abs(std::span<const cplx> z);
}  // namespace scalar

#if defined(WKBRES_HAVE_AVX2_KERNELS)
namespace avx2 {
void log_derivative(std::span<const cplx> psi, std::span<const cplx> dpsi, std::span<cplx> out);
void riccati_slope(std::span<const cplx> beta, std::span<const double> v, cplx eps, std::span<cplx> out);
double riccati_residual(std::span<const cplx> beta, std::span<const double> v, cplx eps, double h);
double numerov_residual(std::span<const cplx> psi, std::span<const double> v, cplx eps, double h);
double max_abs(std::span<const cplx> z);
}  // namespace avx2
#endif

}  // namespace wkbres::kernels
