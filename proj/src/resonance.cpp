#include "wkbres/resonance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <variant>

#include <boost/math/tools/roots.hpp>
#include <fmt/format.h>

#include "wkbres/error.hpp"

namespace wkbres {

namespace {

struct Bracket {
    double lo = 0.0;
    double hi = 0.0;
};

// Lowest energy with both turning points inside the model's domain.
Bracket search_bracket(const Potential& p, const BarrierSummit& summit) {
    double floor_v = evaluate(p, 0.0);
    if (std::isfinite(p.domain_end())) floor_v = std::max(floor_v, evaluate(p, p.domain_end()));
    return {floor_v + 1e-8 * (summit.v_max - floor_v), summit.v_max * (1.0 - 2.0 * kSummitExclusion)};
}

double quantization_mismatch(const Potential& p, const BarrierSummit& summit, int n, double energy,
                             const QuadratureOptions& opt) {
    const auto tp = find_turning_points(p, summit, energy);
    return action_w(p, energy, 0.0, tp.inner, opt) - (n + 0.75) * std::numbers::pi;
}

double locate(const Potential& p, const BarrierSummit& summit, int n, const QuadratureOptions& opt) {
    if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative resonance index");
    const auto [lo, hi] = search_bracket(p, summit);
    auto f = [&](double e) { return quantization_mismatch(p, summit, n, e, opt); };
    const double f_lo = f(lo);
    const double f_hi = f(hi);
    if (f_lo > 0.0 || f_hi < 0.0)
        throw Error(ErrorCode::NoSuchResonance,
                    fmt::format("W(0,a) = ({} + 3/4) pi has no root below the summit {}", n, summit.v_max));
    std::uintmax_t iters = 200;
    auto tol = [](double a, double b) { return std::abs(b - a) <= 1e-11 * std::max(std::abs(a), 1.0); };
    auto [a, b] = boost::math::tools::toms748_solve(f, lo, hi, f_lo, f_hi, tol, iters);
    return 0.5 * (a + b);
}

}  // namespace

int count_resonances(double v0) {
    if (!(v0 > 0.0)) throw Error(ErrorCode::InvalidArgument, "V0 must be positive");
    const double x = std::sqrt(v0 / beta0_constant()) - 0.75;
    if (x < 0.0) return 0;
    return static_cast<int>(std::floor(x)) + 1;
}

int count_resonances(const Potential& p) {
    if (const auto* m = std::get_if<Bbjs>(&p.model()))
        return count_resonances(m->v0 / std::pow(m->lambda, 4));
    const auto summit = barrier_summit(p);
    const auto [lo, hi] = search_bracket(p, summit);
    (void)lo;
    // W(0, a(E)) grows monotonically up to the summit, so the count is the
    // number of quantization levels below W at the top of the bracket.
    const double w_top = action_w(p, hi, 0.0, find_turning_points(p, summit, hi).inner);
    const double x = w_top / std::numbers::pi - 0.75;
    return x < 0.0 ? 0 : static_cast<int>(std::floor(x)) + 1;
}

double locate_position(const Potential& p, int n, const QuadratureOptions& opt) {
    return locate(p, barrier_summit(p), n, opt);
}

WidthEstimate compute_width(const Potential& p, double energy, const QuadratureOptions& opt) {
    WidthEstimate w;
    w.turning = find_turning_points(p, energy);
    w.integrals = phase_integrals(p, w.turning, opt);
    w.log_half_width = -2.0 * w.integrals.omega_ab - std::log(w.integrals.tau);
    w.half_width = std::exp(w.log_half_width);
    return w;
}

Resonance make_resonance(const Potential& p, int n, double energy, const QuadratureOptions& opt) {
    const auto w = compute_width(p, energy, opt);
    Resonance r;
    r.index = n;
    r.position = energy;
    r.half_width = w.half_width;
    r.log_half_width = w.log_half_width;
    r.period = w.integrals.tau;
    r.barrier_integral = w.integrals.omega_ab;
    // tau * Gamma = 2 exp(-2 Omega), independent of tau.
    r.validity_ratio = 2.0 * std::exp(-2.0 * w.integrals.omega_ab);
    // tau_life = (tau / 2) exp(2 Omega)
    r.lifetime = 1.0 / (2.0 * r.half_width);
    r.valid = r.validity_ratio < kValidityBound;
    return r;
}

std::vector<Resonance> resonance_spectrum(const Potential& p, const QuadratureOptions& opt) {
    const auto summit = barrier_summit(p);
    std::vector<Resonance> out;
    for (int n = 0;; ++n) {
        double e = 0.0;
        try {
            e = locate(p, summit, n, opt);
        } catch (const Error& err) {
            if (err.code() == ErrorCode::NoSuchResonance) break;
            throw;
        }
        out.push_back(make_resonance(p, n, e, opt));
    }
    return out;
}

}  // namespace wkbres
