#include "wkbres/turning_points.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include <boost/math/tools/roots.hpp>
#include <fmt/format.h>

#include "wkbres/error.hpp"

namespace wkbres {

namespace {

double refine_root(const Potential& p, double energy, double lo, double hi) {
    auto f = [&](double r) { return evaluate(p, r) - energy; };
    const double f_lo = f(lo);
    const double f_hi = f(hi);
    if (f_lo == 0.0) return lo;
    if (f_hi == 0.0) return hi;
    std::uintmax_t iters = 200;
    auto [a, b] = boost::math::tools::toms748_solve(f, lo, hi, f_lo, f_hi,
                                                    boost::math::tools::eps_tolerance<double>(52), iters);
    const double root = std::abs(f(a)) <= std::abs(f(b)) ? a : b;
    const double residual = std::abs(f(root));
    if (residual > 1e-12 * std::max(energy, 1.0))
        throw Error(ErrorCode::NoConvergence,
                    fmt::format("turning point at r = {} has residual {:.3e}", root, residual));
    return root;
}

}  // namespace

TurningPair find_turning_points(const Potential& p, double energy) {
    return find_turning_points(p, barrier_summit(p), energy);
}

TurningPair find_turning_points(const Potential& p, const BarrierSummit& summit, double energy) {
    if (!(energy < summit.v_max * (1.0 - kSummitExclusion)))
        throw Error(ErrorCode::EnergyAboveBarrier,
                    fmt::format("E = {} not below the summit v_max = {}", energy, summit.v_max));
    if (!(energy > evaluate(p, 0.0)))
        throw Error(ErrorCode::EnergyNonPositive, fmt::format("E = {} not above V(0)", energy));

    const double inner = refine_root(p, energy, 0.0, summit.r_top);

    const double end = p.domain_end();
    double r_cut = 2.0 * summit.r_top;
    while (evaluate(p, std::min(r_cut, end)) >= energy) {
        if (r_cut >= end)
            throw Error(ErrorCode::OutOfRange,
                        fmt::format("no outer turning point for E = {} inside the tabulated range", energy));
        r_cut *= 2.0;
    }
    const double outer = refine_root(p, energy, summit.r_top, std::min(r_cut, end));
    return TurningPair{energy, inner, outer};
}

}  // namespace wkbres
