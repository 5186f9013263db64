#include "wkbres/cli.hpp"

#include <filesystem>
#include <fstream>
#include <future>
#include <ostream>
#include <sstream>
#include <vector>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "wkbres/darboux.hpp"
#include "wkbres/error.hpp"
#include "wkbres/io.hpp"
#include "wkbres/resonance.hpp"
#include "wkbres/siegert.hpp"

namespace wkbres::cli {

namespace {

namespace fs = std::filesystem;

std::ofstream open_output(const RunConfig& cfg, const std::string& name) {
    const fs::path dir(cfg.out_dir);
    fs::create_directories(dir);
    const auto path = dir / name;
    std::ofstream f(path);
    if (!f) throw Error(ErrorCode::InvalidArgument, fmt::format("cannot write {}", path.string()));
    return f;
}

void print_spectrum(std::ostream& out, const std::vector<Resonance>& spectrum) {
    fmt::print(out, "{:>3}  {:>13}  {:>13}  {:>13}  {:>13}  {}\n", "n", "Re(eps)", "Gamma/2", "tau", "tau*Gamma",
               "valid");
    for (const auto& r : spectrum)
        fmt::print(out, "{:>3}  {:>13.5e}  {:>13.5e}  {:>13.5e}  {:>13.5e}  {}\n", r.index, r.position, r.half_width,
                   r.period, r.validity_ratio, r.valid ? "yes" : "FLAGGED");
}

Resonance pick(const Potential& p, const RunConfig& cfg) {
    const int n = cfg.index.value_or(0);
    return make_resonance(p, n, locate_position(p, n, cfg.quadrature()), cfg.quadrature());
}

ComplexEnergy seed_energy(const Potential& p, const RunConfig& cfg) {
    const auto res = pick(p, cfg);
    if (cfg.energy == "wkb") return res.eigenvalue();
    return refine_resonance(p, res.eigenvalue(), cfg.shooting()).energy;
}

int cmd_summit(const Potential& p, std::ostream& out) {
    const auto s = barrier_summit(p);
    fmt::print(out, "r_top={:.6g}, v_max={:.6g}\n", s.r_top, s.v_max);
    return 0;
}

int cmd_wkb(const Potential& p, const RunConfig& cfg, std::ostream& out) {
    const auto spectrum = resonance_spectrum(p, cfg.quadrature());
    print_spectrum(out, spectrum);
    auto f = open_output(cfg, "spectrum.csv");
    io::write_spectrum(f, spectrum);
    return 0;
}

int cmd_refine(const Potential& p, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    std::vector<Resonance> targets;
    if (cfg.index) {
        targets.push_back(pick(p, cfg));
    } else {
        targets = resonance_spectrum(p, cfg.quadrature());
    }
    int status = 0;
    for (const auto& r : targets) {
        const auto seed = r.eigenvalue();
        try {
            const auto refined = refine_resonance(p, seed, cfg.shooting());
            fmt::print(out, "n={} wkb={:.6g}{:+.6g}i -> siegert={:.6g}{:+.6g}i |F|={:.2e} iterations={}\n", r.index,
                       seed.real(), seed.imag(), refined.energy.real(), refined.energy.imag(), refined.mismatch,
                       refined.trajectory.size() - 2);
        } catch (const Error& e) {
            fmt::print(err, "n={}: {}\n", r.index, e.what());
            status = 1;
        }
    }
    return status;
}

int cmd_siegert(const Potential& p, const RunConfig& cfg, std::ostream& out) {
    const auto eps = seed_energy(p, cfg);
    const auto w = integrate_radial(p, eps, cfg.r_max, cfg.h);
    auto f = open_output(cfg, "wavefunction.csv");
    io::write_wavefunction(f, w, cfg.normalize);
    fmt::print(out, "eps={:.10g}{:+.10g}i nodes={} residual={:.2e} -> {}\n", eps.real(), eps.imag(), w.size(),
               w.residual, (fs::path(cfg.out_dir) / "wavefunction.csv").string());
    return 0;
}

int cmd_darboux(const Potential& p, const RunConfig& cfg, std::ostream& out) {
    const auto eps = seed_energy(p, cfg);
    const auto w = integrate_radial(p, eps, cfg.r_max, cfg.h);
    const auto beta = beta_function(w);
    const auto partner = build_partner(w);
    auto f = open_output(cfg, "partner.csv");
    io::write_partner(f, partner);
    fmt::print(out, "eps={:.10g}{:+.10g}i riccati_residual={:.2e} |V2-V|(rmax)={:.2e} -> {}\n", eps.real(),
               eps.imag(), riccati_residual(beta), std::abs(partner.second_order.back() - partner.v.back()),
               (fs::path(cfg.out_dir) / "partner.csv").string());
    return 0;
}

std::string table1(const RunConfig& cfg) {
    std::ostringstream s;
    fmt::print(s, "V0,v_max,re_e,half_width,tau,tau_gamma,siegert_re,siegert_im\n");
    for (double v0 : {15.0, 30.0, 45.0}) {
        const Potential p(Bbjs{v0, 1.0});
        const auto r = make_resonance(p, 0, locate_position(p, 0, cfg.quadrature()), cfg.quadrature());
        const auto refined = refine_resonance(p, r.eigenvalue(), cfg.shooting());
        fmt::print(s, "{},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g}\n", v0, barrier_summit(p).v_max,
                   r.position, r.half_width, r.period, r.validity_ratio, refined.energy.real(), refined.energy.imag());
    }
    return s.str();
}

std::string table2(const RunConfig& cfg) {
    std::ostringstream s;
    io::write_spectrum(s, resonance_spectrum(Potential(Bbjs{350.0, 1.0}), cfg.quadrature()));
    return s.str();
}

std::string table3(const RunConfig& cfg) {
    std::ostringstream s;
    fmt::print(s, "V0,count,v_max,re_e0,half_width0\n");
    for (double v0 : {15.0, 60.0, 150.0, 250.0, 350.0}) {
        const Potential p(Bbjs{v0, 1.0});
        const auto r = make_resonance(p, 0, locate_position(p, 0, cfg.quadrature()), cfg.quadrature());
        fmt::print(s, "{},{},{:.17g},{:.17g},{:.17g}\n", v0, count_resonances(v0), barrier_summit(p).v_max,
                   r.position, r.half_width);
    }
    return s.str();
}

std::string anharmonic_case(const RunConfig& cfg) {
    const Potential p(Anharmonic{800.0, 400.0, 3});
    std::ostringstream s;
    fmt::print(s, "v_max,n,re_e,half_width,tau,tau_gamma,valid\n");
    const double v_max = barrier_summit(p).v_max;
    for (const auto& r : resonance_spectrum(p, cfg.quadrature()))
        fmt::print(s, "{:.17g},{},{:.17g},{:.17g},{:.17g},{:.17g},{}\n", v_max, r.index, r.position, r.half_width,
                   r.period, r.validity_ratio, r.valid ? 1 : 0);
    return s.str();
}

int cmd_tables(const RunConfig& cfg, std::ostream& out) {
    struct Job {
        const char* file;
        std::string (*make)(const RunConfig&);
    };
    const Job jobs[] = {{"table1.csv", table1}, {"table2.csv", table2}, {"table3.csv", table3},
                        {"anharmonic.csv", anharmonic_case}};
    std::vector<std::future<std::string>> pending;
    for (const auto& job : jobs) pending.push_back(std::async(std::launch::async, job.make, std::cref(cfg)));
    for (std::size_t i = 0; i < pending.size(); ++i) {
        const auto text = pending[i].get();
        auto f = open_output(cfg, jobs[i].file);
        f << text;
        fmt::print(out, "wrote {}\n", (fs::path(cfg.out_dir) / jobs[i].file).string());
    }
    return 0;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (cfg.command == "tables") return cmd_tables(cfg, out);
        const Potential p = cfg.make_potential();
        if (cfg.command == "summit") return cmd_summit(p, out);
        if (cfg.command == "count") {
            fmt::print(out, "{}\n", count_resonances(p));
            return 0;
        }
        if (cfg.command == "wkb") return cmd_wkb(p, cfg, out);
        if (cfg.command == "refine") return cmd_refine(p, cfg, out, err);
        if (cfg.command == "siegert") return cmd_siegert(p, cfg, out);
        if (cfg.command == "darboux") return cmd_darboux(p, cfg, out);
        fmt::print(err, "error: unknown command '{}'\n", cfg.command);
        return 2;
    } catch (const Error& e) {
        fmt::print(err, "error: {}\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        fmt::print(err, "error: {}\n", e.what());
        return 1;
    }
}

}  // namespace wkbres::cli
