#pragma once

#include <complex>
#include <vector>

#include "wkbres/potential.hpp"
#include "wkbres/quadrature.hpp"

namespace wkbres {

/// Entries whose tau * Gamma reaches this bound are reported but flagged invalid.
inline constexpr double kValidityBound = 8.0;

struct WidthEstimate {
    TurningPair turning;
    PhaseIntegrals integrals;
    double half_width = 0.0;      // Gamma / 2 = exp(-2 Omega) / tau
    double log_half_width = 0.0;  // ln(Gamma / 2), finite even when half_width underflows
};

struct Resonance {
    int index = 0;
    double position = 0.0;
    double half_width = 0.0;
    double log_half_width = 0.0;
    double period = 0.0;
    double barrier_integral = 0.0;
    double validity_ratio = 0.0;  // tau * Gamma
    double lifetime = 0.0;        // 1 / Gamma
    bool valid = false;

    /// |exp(-2 Omega) / 4|, which equals tau * Gamma / 8.
    double smallness() const noexcept { return validity_ratio / 8.0; }
    std::complex<double> eigenvalue() const noexcept { return {position, -half_width}; }
};

/// Resonance count for V0 r^2 exp(-r): n such that V0(n-1) <= V0 < V0(n),
/// V0(n) = beta_0 (n + 3/4)^2.
int count_resonances(double v0);

/// BBJS potentials are reduced to lambda = 1 (V0 -> V0 / lambda^4); other
/// models are counted by enumerating quantization roots.
int count_resonances(const Potential& p);

/// Root of W(0, a(E)) = (n + 3/4) pi below the summit.
double locate_position(const Potential& p, int n, const QuadratureOptions& opt = {});

WidthEstimate compute_width(const Potential& p, double energy, const QuadratureOptions& opt = {});

Resonance make_resonance(const Potential& p, int n, double energy, const QuadratureOptions& opt = {});

std::vector<Resonance> resonance_spectrum(const Potential& p, const QuadratureOptions& opt = {});

}  // namespace wkbres
