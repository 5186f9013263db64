#pragma once

// Grid-wise complex kernels used by the shooting and Darboux stages.
//
// Every kernel has a scalar reference implementation and, on x86-64, an
// AVX2/FMA variant operating on interleaved std::complex<double> storage.
// The variant is chosen once at first use from the CPU feature flags; the
// environment variable WKBRES_KERNELS=scalar forces the reference path.

#include <complex>
#include <span>
#include <string_view>

namespace wkbres::kernels {

using cplx = std::complex<double>;

enum class Backend { Scalar, Avx2 };

std::string_view to_string(Backend b) noexcept;

bool available(Backend b) noexcept;
Backend active() noexcept;

/// Switches the process-wide backend; returns false if it is unavailable here.
bool select(Backend b) noexcept;

struct Table {
    // out_i = -dpsi_i / psi_i
    void (*log_derivative)(std::span<const cplx> psi, std::span<const cplx> dpsi, std::span<cplx> out);
    // out_i = beta_i^2 - (v_i - eps)
    void (*riccati_slope)(std::span<const cplx> beta, std::span<const double> v, cplx eps, std::span<cplx> out);
    // max over 0 < i < n-1 of |-(beta_{i+1} - beta_{i-1}) / 2h + beta_i^2 - (v_i - eps)|
    double (*riccati_residual)(std::span<const cplx> beta, std::span<const double> v, cplx eps, double h);
    // max over 0 < i < n-1 of |psi_{i-1} - 2 psi_i + psi_{i+1} - h^2 (v_i - eps) psi_i|
    double (*numerov_residual)(std::span<const cplx> psi, std::span<const double> v, cplx eps, double h);
    double (*max_abs)(std::span<const cplx> z);
};

/// Kernels of the active backend.
const Table& table() noexcept;

/// Kernels of a specific backend (the scalar table if b is unavailable).
const Table& table(Backend b) noexcept;

}  // namespace wkbres::kernels
