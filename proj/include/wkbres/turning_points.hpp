#pragma once

#include "wkbres/potential.hpp"

namespace wkbres {

/// Inner and outer roots of V(r) = E around the barrier summit.
struct TurningPair {
    double energy = 0.0;
    double inner = 0.0;
    double outer = 0.0;
};

/// Energies within this fraction of v_max are treated as the degenerate top.
inline constexpr double kSummitExclusion = 1e-9;

/// Requires V(0) < E < v_max; throws EnergyAboveBarrier or EnergyNonPositive otherwise.
TurningPair find_turning_points(const Potential& p, double energy);
TurningPair find_turning_points(const Potential& p, const BarrierSummit& summit, double energy);

}  // namespace wkbres
