#pragma once

// Radial barrier models in the reduced units hbar^2/2m = 1 (E = k^2).

#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace wkbres {

struct Bbjs {
    double v0 = 15.0;
    double lambda = 1.0;
};

/// V(r) = k r^2 / 2 - g r^N with odd N >= 3.
struct Anharmonic {
    double k = 800.0;
    double g = 400.0;
    int n = 3;
};

struct Sample {
    double r = 0.0;
    double v = 0.0;
};

class Tabulated {
public:
    explicit Tabulated(std::vector<Sample> samples);

    std::span<const Sample> samples() const noexcept { return samples_; }
    double r_min() const noexcept { return samples_.front().r; }
    double r_max() const noexcept { return samples_.back().r; }
    double operator()(double r) const;

private:
    struct Interpolant;
    std::vector<Sample> samples_;
    std::shared_ptr<const Interpolant> interp_;
};

class Potential {
public:
    using Model = std::variant<Bbjs, Anharmonic, Tabulated>;

    Potential(Bbjs m);
    Potential(Anharmonic m);
    Potential(Tabulated m);

    const Model& model() const noexcept { return model_; }
    std::string describe() const;

    /// Largest radius at which the potential may be evaluated.
    double domain_end() const noexcept;

private:
    Model model_;
};

struct BarrierSummit {
    double r_top = 0.0;
    double v_max = 0.0;
};

double evaluate(const Potential& p, double r);

double effective_potential(const Potential& p, int ell, double r);

/// Analytic for BBJS and the anharmonic oscillator; bracketed numeric
/// maximization for tabulated data.
BarrierSummit barrier_summit(const Potential& p);

/// V on r_i = i * step for i in [0, count).
std::vector<double> sample_uniform(const Potential& p, double step, std::size_t count);

}  // namespace wkbres
