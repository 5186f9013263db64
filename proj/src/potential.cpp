#include "wkbres/potential.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/interpolators/makima.hpp>
#include <boost/math/tools/minima.hpp>
#include <fmt/format.h>

#include "wkbres/error.hpp"

namespace wkbres {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void validate(const Bbjs& m) {
    if (!(m.v0 > 0.0) || !(m.lambda > 0.0))
        throw Error(ErrorCode::InvalidArgument,
                    fmt::format("BBJS requires V0 > 0 and lambda > 0 (got {}, {})", m.v0, m.lambda));
}

void validate(const Anharmonic& m) {
    if (!(m.k > 0.0) || !(m.g > 0.0) || m.n < 3 || m.n % 2 == 0)
        throw Error(ErrorCode::InvalidArgument,
                    fmt::format("anharmonic oscillator requires k, g > 0 and odd N >= 3 (got {}, {}, {})",
                                m.k, m.g, m.n));
}

}  // namespace

struct Tabulated::Interpolant {
    boost::math::interpolators::makima<std::vector<double>> spline;
};

Tabulated::Tabulated(std::vector<Sample> samples) : samples_(std::move(samples)) {
    if (samples_.size() < 4)
        throw Error(ErrorCode::InvalidArgument, "tabulated potential needs at least 4 samples");
    if (samples_.front().r != 0.0)
        throw Error(ErrorCode::InvalidArgument, "tabulated potential must start at r = 0");
    for (std::size_t i = 1; i < samples_.size(); ++i) {
        if (!(samples_[i].r > samples_[i - 1].r))
            throw Error(ErrorCode::InvalidArgument,
                        fmt::format("tabulated radii not strictly increasing at index {}", i));
    }
    std::vector<double> r(samples_.size()), v(samples_.size());
    std::transform(samples_.begin(), samples_.end(), r.begin(), [](const Sample& s) { return s.r; });
    std::transform(samples_.begin(), samples_.end(), v.begin(), [](const Sample& s) { return s.v; });
    interp_ = std::make_shared<const Interpolant>(
        Interpolant{boost::math::interpolators::makima<std::vector<double>>(std::move(r), std::move(v))});
}

double Tabulated::operator()(double r) const {
    if (r < r_min() || r > r_max())
        throw Error(ErrorCode::OutOfRange,
                    fmt::format("r = {} outside tabulated range [{}, {}]", r, r_min(), r_max()));
    return interp_->spline(r);
}

Potential::Potential(Bbjs m) : model_(m) { validate(m); }
Potential::Potential(Anharmonic m) : model_(m) { validate(m); }
Potential::Potential(Tabulated m) : model_(std::move(m)) {}

std::string Potential::describe() const {
    return std::visit(
        Overloaded{
            [](const Bbjs& m) { return fmt::format("bbjs(V0={}, lambda={})", m.v0, m.lambda); },
            [](const Anharmonic& m) { return fmt::format("anharmonic(k={}, g={}, N={})", m.k, m.g, m.n); },
            [](const Tabulated& m) {
                return fmt::format("tabulated({} samples, r <= {})", m.samples().size(), m.r_max());
            },
        },
        model_);
}

double Potential::domain_end() const noexcept {
    if (const auto* t = std::get_if<Tabulated>(&model_)) return t->r_max();
    return std::numeric_limits<double>::infinity();
}

double evaluate(const Potential& p, double r) {
    if (!(r >= 0.0)) throw Error(ErrorCode::OutOfRange, fmt::format("negative radius {}", r));
    return std::visit(Overloaded{
                          [r](const Bbjs& m) { return m.v0 * r * r * std::exp(-m.lambda * r); },
                          [r](const Anharmonic& m) { return 0.5 * m.k * r * r - m.g * std::pow(r, m.n); },
                          [r](const Tabulated& m) { return m(r); },
                      },
                      p.model());
}

double effective_potential(const Potential& p, int ell, double r) {
    if (ell < 0) throw Error(ErrorCode::InvalidArgument, "negative angular momentum");
    if (ell == 0) return evaluate(p, r);
    if (!(r > 0.0)) throw Error(ErrorCode::OutOfRange, "centrifugal term needs r > 0");
    return evaluate(p, r) + ell * (ell + 1.0) / (r * r);
}

BarrierSummit barrier_summit(const Potential& p) {
    return std::visit(
        Overloaded{
            [](const Bbjs& m) {
                const double r_top = 2.0 / m.lambda;
                return BarrierSummit{r_top, 4.0 * m.v0 / std::pow(m.lambda * std::exp(1.0), 2)};
            },
            [](const Anharmonic& m) {
                const double n = m.n;
                const double r_top = std::pow(m.k / (m.g * n), 1.0 / (n - 2.0));
                const double v_max =
                    (n - 2.0) / (2.0 * n) * std::pow(m.k, n / (n - 2.0)) * std::pow(m.g * n, -2.0 / (n - 2.0));
                return BarrierSummit{r_top, v_max};
            },
            [](const Tabulated& m) {
                const auto s = m.samples();
                const auto top = std::max_element(s.begin(), s.end(),
                                                  [](const Sample& a, const Sample& b) { return a.v < b.v; });
                if (top == s.begin() || top == std::prev(s.end()))
                    throw Error(ErrorCode::NoInteriorMaximum, "tabulated potential peaks at a boundary sample");
                const double lo = std::prev(top)->r;
                const double hi = std::next(top)->r;
                auto [r_top, neg_v] = boost::math::tools::brent_find_minima(
                    [&m](double r) { return -m(r); }, lo, hi, std::numeric_limits<double>::digits / 2);
                return BarrierSummit{r_top, -neg_v};
            },
        },
        p.model());
}

std::vector<double> sample_uniform(const Potential& p, double step, std::size_t count) {
    std::vector<double> v(count);
    for (std::size_t i = 0; i < count; ++i) v[i] = evaluate(p, static_cast<double>(i) * step);
    return v;
}

}  // namespace wkbres
