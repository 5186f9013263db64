#include "wkbres/siegert.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "wkbres/error.hpp"
#include "wkbres/kernels.hpp"

namespace wkbres {

namespace {

using cplx = std::complex<double>;
constexpr cplx kI{0.0, 1.0};

double match_radius(const ShootingOptions& opt) { return opt.r_match > 0.0 ? opt.r_match : opt.r_max; }

std::size_t step_count(double r_max, double h) {
    if (!(h > 0.0) || !(r_max > h))
        throw Error(ErrorCode::InvalidArgument, fmt::format("need 0 < h < r_max (h = {}, r_max = {})", h, r_max));
    return static_cast<std::size_t>(std::llround(r_max / h));
}

// Node at or just past r_match whose psi is not (numerically) a zero.
std::size_t match_node(const WaveSolution& w, double r_match) {
    auto i = static_cast<std::size_t>(std::llround(r_match / w.h));
    i = std::min(i, w.size() - 1);
    const double k_abs = std::abs(outgoing_momentum(w.energy));
    for (std::size_t tries = 0; tries < 2 && i < w.size(); ++tries, ++i) {
        if (std::abs(w.psi[i]) * std::max(k_abs, 1.0) > 1e-12 * std::abs(w.dpsi[i])) return i;
    }
    throw Error(ErrorCode::NodeAtMatchPoint, fmt::format("psi vanishes at r_match = {}", r_match));
}

cplx mismatch_at(const WaveSolution& w, std::size_t i) {
    return w.dpsi[i] / w.psi[i] - kI * outgoing_momentum(w.energy);
}

// Amplitude of exp(-ikr) in psi at node i. Analytic in eps with the same
// zeros as the mismatch, but without its exp(-2ikr) weighting.
cplx incoming_amplitude(const WaveSolution& w, std::size_t i) {
    const cplx k = outgoing_momentum(w.energy);
    const cplx ik = kI * k;
    return std::exp(w.log_norm[i] + ik * w.r[i]) * (ik * w.psi[i] - w.dpsi[i]) / (2.0 * ik);
}

// Thresholds on |V(r)| / |eps|: full wave solutions need the tail settled to
// 1e-12, matching points only need to lie in the asymptotic region.
constexpr double kTailThreshold = 1e-12;
constexpr double kMatchThreshold = 1e-8;

void check_asymptotic(const Potential& p, ComplexEnergy eps, double r, double threshold) {
    if (r > p.domain_end())
        throw Error(ErrorCode::OutOfRange, fmt::format("r = {} beyond the potential's domain", r));
    const double v = std::abs(evaluate(p, r));
    if (!(v < threshold * std::abs(eps)))
        throw Error(ErrorCode::InvalidArgument,
                    fmt::format("|V({})| = {:.3e} is not negligible against |eps| = {:.3e}", r, v, std::abs(eps)));
}

}  // namespace

cplx outgoing_momentum(ComplexEnergy eps) {
    cplx k = std::sqrt(eps);
    if (k.real() < 0.0) k = -k;
    return k;
}

std::vector<cplx> WaveSolution::common_scale(bool unit_max) const {
    std::vector<cplx> out(psi.size());
    const double ref = log_norm.empty() ? 0.0 : log_norm.back();
    for (std::size_t i = 0; i < psi.size(); ++i) out[i] = psi[i] * std::exp(log_norm[i] - ref);
    if (unit_max) {
        const double m = kernels::table().max_abs(out);
        if (m > 0.0)
            for (auto& z : out) z /= m;
    }
    return out;
}

RadialGrid::RadialGrid(const Potential& p, double r_max, double h)
    : h_(h), steps_(step_count(r_max, h)), v_half_(sample_uniform(p, 0.5 * h, 2 * steps_ + 1)) {}

WaveSolution integrate_radial(const RadialGrid& grid, ComplexEnergy eps, const ShootingOptions& opt) {
    const std::size_t n = grid.steps();
    const double h = grid.h();

    WaveSolution w;
    w.h = h;
    w.energy = eps;
    w.r.resize(n + 1);
    w.v.resize(n + 1);
    w.psi.resize(n + 1);
    w.dpsi.resize(n + 1);
    w.log_norm.resize(n + 1);

    cplx y{0.0, 0.0};
    cplx d{1.0, 0.0};
    double log_scale = 0.0;
    w.r[0] = 0.0;
    w.v[0] = grid.v_half(0);
    w.psi[0] = y;
    w.dpsi[0] = d;
    w.log_norm[0] = 0.0;

    for (std::size_t i = 0; i < n; ++i) {
        const cplx q0 = grid.v_half(2 * i) - eps;
        const cplx qm = grid.v_half(2 * i + 1) - eps;
        const cplx q1 = grid.v_half(2 * i + 2) - eps;

        const cplx k1y = d;
        const cplx k1d = q0 * y;
        const cplx k2y = d + 0.5 * h * k1d;
        const cplx k2d = qm * (y + 0.5 * h * k1y);
        const cplx k3y = d + 0.5 * h * k2d;
        const cplx k3d = qm * (y + 0.5 * h * k2y);
        const cplx k4y = d + h * k3d;
        const cplx k4d = q1 * (y + h * k3y);
        y += h / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y);
        d += h / 6.0 * (k1d + 2.0 * k2d + 2.0 * k3d + k4d);

        const double m = std::max(std::abs(y), std::abs(d));
        if (m > opt.renorm_cap) {
            y /= m;
            d /= m;
            log_scale += std::log(m);
        }
        w.r[i + 1] = h * static_cast<double>(i + 1);
        w.v[i + 1] = grid.v_half(2 * i + 2);
        w.psi[i + 1] = y;
        w.dpsi[i + 1] = d;
        w.log_norm[i + 1] = log_scale;
    }

    const auto scaled = w.common_scale();
    const auto& k = kernels::table();
    const double peak = k.max_abs(scaled);
    w.residual = peak > 0.0 ? k.numerov_residual(scaled, w.v, eps, h) / peak : 0.0;
    if (!(w.residual <= opt.residual_tol))
        throw Error(ErrorCode::StepTooCoarse,
                    fmt::format("plug-back residual {:.3e} exceeds {:.1e} at h = {}", w.residual, opt.residual_tol, h));
    return w;
}

WaveSolution integrate_radial(const Potential& p, ComplexEnergy eps, double r_max, double h) {
    check_asymptotic(p, eps, r_max, kTailThreshold);
    ShootingOptions opt;
    opt.r_max = r_max;
    opt.h = h;
    return integrate_radial(RadialGrid(p, r_max, h), eps, opt);
}

cplx siegert_mismatch(const Potential& p, ComplexEnergy eps, double r_match, const ShootingOptions& opt) {
    check_asymptotic(p, eps, r_match, kMatchThreshold);
    // One spare step so a node exactly at r_match can be stepped over.
    const RadialGrid grid(p, r_match + opt.h, opt.h);
    const auto w = integrate_radial(grid, eps, opt);
    return mismatch_at(w, match_node(w, r_match));
}

RefineResult refine_resonance(const Potential& p, ComplexEnergy seed, const ShootingOptions& opt) {
    const double r_match = match_radius(opt);
    check_asymptotic(p, seed, r_match, kMatchThreshold);
    const RadialGrid grid(p, std::max(opt.r_max, r_match) + opt.h, opt.h);

    struct Probe {
        cplx energy;
        cplx amplitude;
        double mismatch;
    };
    auto probe = [&](cplx eps) {
        const auto w = integrate_radial(grid, eps, opt);
        const std::size_t i = match_node(w, r_match);
        return Probe{eps, incoming_amplitude(w, i), std::abs(mismatch_at(w, i))};
    };

    RefineResult result;
    Probe prev = probe(seed);
    Probe cur = probe(seed * (1.0 + 1e-4));
    result.trajectory.push_back({prev.energy, prev.mismatch});
    result.trajectory.push_back({cur.energy, cur.mismatch});

    for (int it = 0; it < opt.max_iterations; ++it) {
        const cplx denom = cur.amplitude - prev.amplitude;
        if (denom == cplx{0.0, 0.0}) break;
        const cplx next_energy = cur.energy - cur.amplitude * (cur.energy - prev.energy) / denom;
        prev = cur;
        cur = probe(next_energy);
        result.trajectory.push_back({cur.energy, cur.mismatch});

        const double step = std::abs(cur.energy - prev.energy);
        if (step < 1e-10 * std::max(std::abs(cur.energy), 1.0) && cur.mismatch < 1e-8) {
            if (std::abs(cur.energy.real() - seed.real()) > 0.25 * std::abs(seed.real()))
                throw Error(ErrorCode::WrongBasin,
                            fmt::format("converged to {}{:+}i, too far from seed {}{:+}i", cur.energy.real(),
                                        cur.energy.imag(), seed.real(), seed.imag()));
            result.energy = cur.energy;
            result.mismatch = cur.mismatch;
            return result;
        }
    }
    throw Error(ErrorCode::NoConvergence,
                fmt::format("secant did not converge in {} iterations from seed {}{:+}i (last |F| = {:.3e})",
                            opt.max_iterations, seed.real(), seed.imag(), cur.mismatch));
}

}  // namespace wkbres
