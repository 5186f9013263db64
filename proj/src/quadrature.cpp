#include "wkbres/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <fmt/format.h>

#include "wkbres/error.hpp"

namespace wkbres {

namespace {

using GaussKronrod = boost::math::quadrature::gauss_kronrod<double, 31>;

template <class F>
double integrate(F&& f, double lo, double hi, const QuadratureOptions& opt) {
    if (hi <= lo) return 0.0;
    return GaussKronrod::integrate(f, lo, hi, opt.max_depth, opt.rel_tol);
}

// Integral of g over [c, r] after mapping each half onto t with x = c + t^2
// and x = r - t^2.
template <class G>
double integrate_sqrt_mapped(G&& g, double c, double r, const QuadratureOptions& opt) {
    if (r <= c) return 0.0;
    const double half = std::sqrt(0.5 * (r - c));
    const double left = integrate([&](double t) { return 2.0 * t * g(c + t * t); }, 0.0, half, opt);
    const double right = integrate([&](double t) { return 2.0 * t * g(r - t * t); }, 0.0, half, opt);
    return left + right;
}

// sign = +1 checks E >= V (allowed), -1 checks E <= V (forbidden).
void check_interval(const Potential& p, double energy, double c, double r, int sign, ErrorCode code) {
    constexpr int kProbes = 512;
    const double slack = 1e-10 * std::max(std::abs(energy), 1.0);
    for (int i = 1; i < kProbes; ++i) {
        const double x = c + (r - c) * i / kProbes;
        if (sign * (energy - evaluate(p, x)) < -slack)
            throw Error(code, fmt::format("E = {} has the wrong sign of E - V at r = {} inside [{}, {}]",
                                          energy, x, c, r));
    }
}

void check_order(double c, double r) {
    if (!(c >= 0.0) || !(r >= c))
        throw Error(ErrorCode::InvalidArgument, fmt::format("bad integration interval [{}, {}]", c, r));
}

}  // namespace

double kinetic_parameter(const Potential& p, double energy, double r) {
    return std::sqrt(std::abs(energy - evaluate(p, r)));
}

double action_w(const Potential& p, double energy, double c, double r, const QuadratureOptions& opt) {
    check_order(c, r);
    check_interval(p, energy, c, r, +1, ErrorCode::IntervalNotAllowed);
    return integrate_sqrt_mapped([&](double x) { return std::sqrt(std::max(energy - evaluate(p, x), 0.0)); },
                                 c, r, opt);
}

double barrier_omega(const Potential& p, double energy, double a, double b, const QuadratureOptions& opt) {
    check_order(a, b);
    check_interval(p, energy, a, b, -1, ErrorCode::IntervalNotForbidden);
    return integrate_sqrt_mapped([&](double x) { return std::sqrt(std::max(evaluate(p, x) - energy, 0.0)); },
                                 a, b, opt);
}

double classical_period(const Potential& p, double energy, double a, const QuadratureOptions& opt) {
    check_order(0.0, a);
    check_interval(p, energy, 0.0, a, +1, ErrorCode::IntervalNotAllowed);
    // Mapped nodes never sit on the endpoint, so T > 0 wherever the integrand is sampled.
    const double period = 2.0 * integrate_sqrt_mapped(
                                    [&](double x) {
                                        const double t = energy - evaluate(p, x);
                                        return t > 0.0 ? 1.0 / std::sqrt(t) : 0.0;
                                    },
                                    0.0, a, opt);
    return period;
}

PhaseIntegrals phase_integrals(const Potential& p, const TurningPair& tp, const QuadratureOptions& opt) {
    return PhaseIntegrals{
        action_w(p, tp.energy, 0.0, tp.inner, opt),
        barrier_omega(p, tp.energy, tp.inner, tp.outer, opt),
        classical_period(p, tp.energy, tp.inner, opt),
    };
}

double gamma_constant() {
    static const double gamma = [] {
        auto f = [](double z) { return std::sqrt(std::max(1.0 - z * z * std::exp(2.0 * (1.0 - z)), 0.0)); };
        return GaussKronrod::integrate(f, 0.0, 1.0, 20, 1e-14);
    }();
    return gamma;
}

double beta0_constant() {
    const double x = std::numbers::pi * std::numbers::e / (4.0 * gamma_constant());
    return x * x;
}

}  // namespace wkbres
