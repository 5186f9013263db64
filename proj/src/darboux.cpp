#include "wkbres/darboux.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "wkbres/error.hpp"
#include "wkbres/kernels.hpp"

namespace wkbres {

using cplx = std::complex<double>;

BetaProfile beta_function(const WaveSolution& w) {
    if (w.size() <= kOriginExclusionSteps + 2)
        throw Error(ErrorCode::InvalidArgument, "wave solution too short for a beta profile");
    const std::size_t first = kOriginExclusionSteps;
    const std::size_t n = w.size() - first;

    for (std::size_t i = first; i < w.size(); ++i) {
        if (!(std::abs(w.psi[i]) > 1e-12 * w.h * std::abs(w.dpsi[i])))
            throw Error(ErrorCode::InteriorNode, fmt::format("psi vanishes near r = {}", w.r[i]));
    }

    BetaProfile b;
    b.h = w.h;
    b.energy = w.energy;
    b.r.assign(w.r.begin() + first, w.r.end());
    b.v.assign(w.v.begin() + first, w.v.end());
    b.beta.resize(n);
    kernels::table().log_derivative(std::span(w.psi).subspan(first), std::span(w.dpsi).subspan(first), b.beta);
    return b;
}

std::vector<cplx> first_partner(const BetaProfile& beta) {
    std::vector<cplx> out(beta.beta.size());
    kernels::table().riccati_slope(beta.beta, beta.v, beta.energy, out);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = beta.v[i] + 2.0 * out[i];
    return out;
}

double riccati_residual(const BetaProfile& beta, double r_audit) {
    const auto start = std::lower_bound(beta.r.begin(), beta.r.end(), r_audit) - beta.r.begin();
    const auto first = static_cast<std::size_t>(std::max<std::ptrdiff_t>(start - 1, 0));
    if (beta.beta.size() < first + 3) return 0.0;
    return kernels::table().riccati_residual(std::span(beta.beta).subspan(first), std::span(beta.v).subspan(first),
                                             beta.energy, beta.h);
}

std::vector<double> second_partner(const BetaProfile& beta) {
    std::vector<cplx> slope(beta.beta.size());
    kernels::table().riccati_slope(beta.beta, beta.v, beta.energy, slope);

    std::vector<double> out(slope.size());
    double worst_imag = 0.0;
    double peak = 0.0;
    for (std::size_t i = 0; i < slope.size(); ++i) {
        const cplx raw = beta.v[i] + 2.0 * slope[i] + 2.0 * std::conj(slope[i]);
        out[i] = raw.real();
        worst_imag = std::max(worst_imag, std::abs(raw.imag()));
        peak = std::max(peak, std::abs(raw.real()));
    }
    if (worst_imag > 1e-8 * peak)
        throw Error(ErrorCode::RealityViolation,
                    fmt::format("second partner has |Im| = {:.3e} against max |V2| = {:.3e}", worst_imag, peak));
    return out;
}

PartnerPotential build_partner(const WaveSolution& w) {
    const auto beta = beta_function(w);
    PartnerPotential out;
    out.r = beta.r;
    out.v = beta.v;
    out.first_order = first_partner(beta);
    out.second_order = second_partner(beta);
    out.seed_energy = w.energy;
    return out;
}

}  // namespace wkbres
