#pragma once

// Phase integrals over classically allowed and forbidden intervals.
//
// Every integral is split at the interval midpoint and each half is mapped
// with x = endpoint +/- t^2, which turns the sqrt(|x - turning point|)
// behaviour of the integrands into smooth functions of t before the
// Gauss-Kronrod panels see them.

#include "wkbres/potential.hpp"
#include "wkbres/turning_points.hpp"

namespace wkbres {

struct QuadratureOptions {
    double rel_tol = 1e-13;
    unsigned max_depth = 6;  // bisection depth of the adaptive rule
};

struct PhaseIntegrals {
    double w_0a = 0.0;      // W(0, a), radians
    double omega_ab = 0.0;  // Omega(a, b)
    double tau = 0.0;       // classical period in the inner well
};

double kinetic_parameter(const Potential& p, double energy, double r);

/// W(c, r) = integral of sqrt(E - V) over [c, r]; the interval must be classically allowed.
double action_w(const Potential& p, double energy, double c, double r, const QuadratureOptions& opt = {});

/// Omega(a, b) = integral of sqrt(V - E) over [a, b]; the interval must be classically forbidden.
double barrier_omega(const Potential& p, double energy, double a, double b, const QuadratureOptions& opt = {});

/// tau = 2 * integral over [0, a] of dr / sqrt(E - V).
double classical_period(const Potential& p, double energy, double a, const QuadratureOptions& opt = {});

PhaseIntegrals phase_integrals(const Potential& p, const TurningPair& tp, const QuadratureOptions& opt = {});

/// gamma = integral over [0, 1] of sqrt(1 - z^2 exp(2(1 - z))) dz, computed once.
double gamma_constant();

/// beta_0 = (pi e / (4 gamma))^2.
double beta0_constant();

}  // namespace wkbres
