#pragma once

#include <complex>
#include <vector>

#include "wkbres/potential.hpp"

namespace wkbres {

/// eps = E - i Gamma/2; resonances sit in the lower half plane.
using ComplexEnergy = std::complex<double>;

/// Root of eps with Re k > 0 (fourth quadrant for resonances).
std::complex<double> outgoing_momentum(ComplexEnergy eps);

struct ShootingOptions {
    double r_max = 40.0;
    double h = 1e-3;
    double r_match = 0.0;  // 0 selects r_max
    double renorm_cap = 1e100;
    double residual_tol = 1e-6;  // plug-back residual relative to max |psi|
    int max_iterations = 50;
};

/// Samples of the regular solution psi(0) = 0, psi'(0) = 1 on r_i = i h.
/// The physical value at node i is psi[i] * exp(log_norm[i]).
struct WaveSolution {
    double h = 0.0;
    std::vector<double> r;
    std::vector<double> v;
    std::vector<std::complex<double>> psi;
    std::vector<std::complex<double>> dpsi;
    std::vector<double> log_norm;
    ComplexEnergy energy;
    double residual = 0.0;  // plug-back residual relative to max |psi|

    std::size_t size() const noexcept { return r.size(); }

    /// psi on a common scale (that of the last node), optionally divided by max |psi|.
    std::vector<std::complex<double>> common_scale(bool unit_max = false) const;
};

/// Potential samples on the half-step grid shared by repeated integrations.
class RadialGrid {
public:
    RadialGrid(const Potential& p, double r_max, double h);

    double h() const noexcept { return h_; }
    std::size_t steps() const noexcept { return steps_; }
    double r_max() const noexcept { return h_ * static_cast<double>(steps_); }
    /// V at r = j h / 2.
    double v_half(std::size_t j) const noexcept { return v_half_[j]; }

private:
    double h_;
    std::size_t steps_;
    std::vector<double> v_half_;
};

/// Fixed-step RK4 march of psi'' = (V - eps) psi; throws StepTooCoarse when
/// the plug-back residual exceeds opt.residual_tol.
WaveSolution integrate_radial(const RadialGrid& grid, ComplexEnergy eps, const ShootingOptions& opt = {});
WaveSolution integrate_radial(const Potential& p, ComplexEnergy eps, double r_max, double h);

/// psi'/psi - i k at r_match.
std::complex<double> siegert_mismatch(const Potential& p, ComplexEnergy eps, double r_match,
                                      const ShootingOptions& opt = {});

struct RefineStep {
    ComplexEnergy energy;
    double mismatch = 0.0;  // |psi'/psi - i k|
};

struct RefineResult {
    ComplexEnergy energy;
    double mismatch = 0.0;
    std::vector<RefineStep> trajectory;
};

/// Complex secant iteration from a WKB seed onto the outgoing-wave eigenvalue.
RefineResult refine_resonance(const Potential& p, ComplexEnergy seed, const ShootingOptions& opt = {});

}  // namespace wkbres
