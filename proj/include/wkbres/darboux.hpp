#pragma once

// First- and second-order Darboux partners generated by a Siegert solution.

#include <complex>
#include <vector>

#include "wkbres/siegert.hpp"

namespace wkbres {

/// Nodes closer to the origin than this many steps are dropped (beta ~ -1/r there).
inline constexpr std::size_t kOriginExclusionSteps = 5;

/// beta = -psi'/psi on a uniform grid, together with the potential samples and
/// the factorization energy it solves the Riccati equation for.
struct BetaProfile {
    double h = 0.0;
    std::vector<double> r;
    std::vector<double> v;
    std::vector<std::complex<double>> beta;
    ComplexEnergy energy;
};

struct PartnerPotential {
    std::vector<double> r;
    std::vector<double> v;
    std::vector<std::complex<double>> first_order;
    std::vector<double> second_order;
    ComplexEnergy seed_energy;
};

/// Uses the integrator's psi' samples; throws InteriorNode if psi vanishes on the grid.
BetaProfile beta_function(const WaveSolution& w);

/// V + 2 beta' with beta' = beta^2 - (V - eps).
std::vector<std::complex<double>> first_partner(const BetaProfile& beta);

/// max |-beta'_fd + beta^2 - (V - eps)| over interior nodes with r >= r_audit,
/// beta'_fd being the central difference.
double riccati_residual(const BetaProfile& beta, double r_audit = 1.0);

/// V + 2 (beta + conj(beta))' = V + 4 Re(beta'); throws RealityViolation if the
/// composed values carry an imaginary part above 1e-8 max |V2|.
std::vector<double> second_partner(const BetaProfile& beta);

PartnerPotential build_partner(const WaveSolution& w);

}  // namespace wkbres
