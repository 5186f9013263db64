#pragma once

#include <cmath>
#include <vector>

#include "wkbres/potential.hpp"

namespace wkbres::testing {

/// V = 0 on [0, r_end], as tabulated data.
inline Potential free_potential(double r_end = 60.0) {
    std::vector<Sample> s;
    for (int i = 0; i <= 64; ++i) s.push_back({r_end * i / 64.0, 0.0});
    return Potential(Tabulated(std::move(s)));
}

inline double rel_err(double x, double ref) { return std::abs(x - ref) / std::abs(ref); }

}  // namespace wkbres::testing
