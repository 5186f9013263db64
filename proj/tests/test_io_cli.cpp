#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "wkbres/cli.hpp"
#include "wkbres/config.hpp"
#include "wkbres/error.hpp"
#include "wkbres/io.hpp"

using namespace wkbres;
namespace fs = std::filesystem;

namespace {
fs::path scratch(const std::string& name) {
    const auto dir = fs::temp_directory_path() / ("wkbres_test_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p);
    std::stringstream s;
    s << f.rdbuf();
    return s.str();
}

struct Outcome {
    int status;
    std::string out;
    std::string err;
};

Outcome run_command(RunConfig cfg, const std::string& command) {
    cfg.command = command;
    std::ostringstream out, err;
    const int status = cli::run(cfg, out, err);
    return {status, out.str(), err.str()};
}

std::string error_text(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.what();
    }
    return {};
}
}  // namespace

TEST_CASE("csv reading") {
    std::istringstream in("a,b\n1,2.5\n-3e-2,4\n");
    const auto t = io::read_csv(in);
    REQUIRE(t.rows.size() == 2);
    CHECK(t.column("b") == 1);
    CHECK(t.rows[1][0] == -3e-2);
    CHECK_THROWS_AS(t.column("c"), Error);

    std::istringstream ragged("a,b\n1\n");
    CHECK_THROWS_AS(io::read_csv(ragged), Error);
    std::istringstream junk("a\nx\n");
    CHECK_THROWS_AS(io::read_csv(junk), Error);
}

TEST_CASE("spectrum round trip") {
    const auto s = resonance_spectrum(Potential(Bbjs{350.0, 1.0}));
    std::ostringstream out;
    io::write_spectrum(out, s);
    CHECK(out.str().rfind(std::string(io::kSpectrumHeader) + "\n", 0) == 0);
    CHECK(out.str().back() == '\n');
    std::istringstream in(out.str());
    const auto t = io::read_csv(in);
    REQUIRE(t.rows.size() == s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        CHECK(t.rows[i][t.column("n")] == s[i].index);
        CHECK(t.rows[i][t.column("re_e")] == s[i].position);
        CHECK(t.rows[i][t.column("half_width")] == s[i].half_width);
        CHECK(t.rows[i][t.column("tau")] == s[i].period);
        CHECK(t.rows[i][t.column("tau_gamma")] == s[i].validity_ratio);
        CHECK(t.rows[i][t.column("valid")] == 1.0);
    }
}

TEST_CASE("wavefunction file") {
    const Potential p(Bbjs{15.0, 1.0});
    const auto w = integrate_radial(p, {6.852780620, -0.025548961}, 40.0, 1e-2);
    std::ostringstream out;
    io::write_wavefunction(out, w);
    std::istringstream in(out.str());
    const auto t = io::read_csv(in);
    REQUIRE(t.rows.size() == w.size());
    CHECK(t.header == std::vector<std::string>{"r", "re_psi", "im_psi", "log_norm"});
    double peak = 0.0;
    for (const auto& row : t.rows) peak = std::max(peak, std::hypot(row[1], row[2]));
    CHECK(peak == doctest::Approx(1.0).epsilon(1e-12));
    // psi * exp(log_norm) reproduces the physical samples
    for (std::size_t i = 100; i < w.size(); i += 700) {
        const auto& row = t.rows[i];
        const std::complex<double> phys = w.psi[i] * std::exp(w.log_norm[i]);
        const std::complex<double> file = std::complex<double>(row[1], row[2]) * std::exp(row[3]);
        CHECK(std::abs(file - phys) < 1e-12 * std::abs(phys));
    }
}

TEST_CASE("partner file") {
    const Potential p(Bbjs{15.0, 1.0});
    const auto partner = build_partner(integrate_radial(p, {6.852780620, -0.025548961}, 40.0, 1e-2));
    std::ostringstream out;
    io::write_partner(out, partner);
    std::istringstream in(out.str());
    const auto t = io::read_csv(in);
    REQUIRE(t.rows.size() == partner.r.size());
    CHECK(t.rows[7][t.column("V2")] == partner.second_order[7]);
    CHECK(t.rows[7][t.column("im_V1")] == partner.first_order[7].imag());
}

TEST_CASE("tabulated input") {
    std::ostringstream csv;
    csv << "r,V\n";
    for (int i = 0; i <= 400; ++i) {
        const double r = 0.05 * i;
        csv << r << ',' << 15.0 * r * r * std::exp(-r) << '\n';
    }
    std::istringstream in(csv.str());
    const Potential p(io::read_tabulated(in));
    CHECK(barrier_summit(p).r_top == doctest::Approx(2.0).epsilon(1e-3));
    CHECK(barrier_summit(p).v_max == doctest::Approx(60.0 / (std::exp(1.0) * std::exp(1.0))).epsilon(1e-6));
    CHECK(locate_position(p, 0) == doctest::Approx(7.01129).epsilon(1e-5));

    std::istringstream bad("x,V\n0,0\n1,1\n2,2\n3,3\n");
    CHECK(error_text([&] { io::read_tabulated(bad); }).find("header") != std::string::npos);
}

TEST_CASE("config parsing") {
    RunConfig cfg;
    std::istringstream in("# comment\npotential = anharmonic\nk = 800\n g=400 \nN = 3\nh = 5e-4\nindex = 0\n");
    parse_config(in, cfg);
    CHECK(cfg.potential == "anharmonic");
    CHECK(cfg.h == 5e-4);
    CHECK(cfg.index == 0);
    CHECK(std::holds_alternative<Anharmonic>(cfg.make_potential().model()));

    CHECK(error_text([&] { cfg.set("V0", "-1"); }).find("V0") != std::string::npos);
    CHECK(error_text([&] { cfg.set("bogus", "1"); }).find("bogus") != std::string::npos);
    CHECK(error_text([&] { cfg.set("h", "abc"); }).find("h") != std::string::npos);
    CHECK(error_text([&] { cfg.set("energy", "exact"); }).find("energy") != std::string::npos);
    std::istringstream no_eq("V0 15\n");
    CHECK_THROWS_AS(parse_config(no_eq, cfg), Error);

    RunConfig tab;
    tab.set("potential", "tabulated");
    CHECK(error_text([&] { tab.make_potential(); }).find("table") != std::string::npos);
}

TEST_CASE("cli commands") {
    RunConfig cfg;
    cfg.out_dir = scratch("cli").string();

    auto r = run_command(cfg, "summit");
    CHECK(r.status == 0);
    CHECK(r.out == "r_top=2, v_max=8.12012\n");

    r = run_command(cfg, "count");
    CHECK(r.out == "1\n");

    cfg.v0 = 350.0;
    r = run_command(cfg, "wkb");
    CHECK(r.status == 0);
    CHECK(r.out.find("tau*Gamma") != std::string::npos);
    CHECK(r.out.find("valid") != std::string::npos);
    CHECK(r.out.find("FLAGGED") == std::string::npos);
    std::istringstream spec(slurp(fs::path(cfg.out_dir) / "spectrum.csv"));
    CHECK(io::read_csv(spec).rows.size() == 5);

    cfg.v0 = 15.0;
    r = run_command(cfg, "refine");
    CHECK(r.status == 0);
    CHECK(r.out.find("siegert=6.85278") != std::string::npos);

    r = run_command(cfg, "siegert");
    CHECK(r.status == 0);
    CHECK(slurp(fs::path(cfg.out_dir) / "wavefunction.csv").rfind(io::kWavefunctionHeader, 0) == 0);

    r = run_command(cfg, "darboux");
    CHECK(r.status == 0);
    CHECK(slurp(fs::path(cfg.out_dir) / "partner.csv").rfind(io::kPartnerHeader, 0) == 0);

    SUBCASE("errors become one-line diagnostics") {
        cfg.v0 = 5.0;
        r = run_command(cfg, "wkb");
        CHECK(r.status == 0);
        cfg.index = 3;
        r = run_command(cfg, "refine");
        CHECK(r.status != 0);
        CHECK(r.err.rfind("error: NoSuchResonance", 0) == 0);
        CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
    }
}

TEST_CASE("tables are deterministic") {
    RunConfig cfg;
    const auto a = scratch("tables_a");
    const auto b = scratch("tables_b");
    cfg.out_dir = a.string();
    REQUIRE(run_command(cfg, "tables").status == 0);
    cfg.out_dir = b.string();
    REQUIRE(run_command(cfg, "tables").status == 0);
    for (const char* f : {"table1.csv", "table2.csv", "table3.csv", "anharmonic.csv"}) {
        CAPTURE(f);
        const auto text = slurp(a / f);
        CHECK(!text.empty());
        CHECK(text == slurp(b / f));
        std::istringstream in(text);
        CHECK_NOTHROW(io::read_csv(in));
    }
    std::istringstream t3(slurp(a / "table3.csv"));
    const auto rows = io::read_csv(t3).rows;
    REQUIRE(rows.size() == 5);
    for (std::size_t i = 0; i < 5; ++i) CHECK(rows[i][1] == static_cast<double>(i + 1));
}

#ifdef WKBRES_CLI_PATH
TEST_CASE("command-line binary") {
    const std::string exe = WKBRES_CLI_PATH;
    const auto dir = scratch("binary");
    const auto cfg_path = dir / "run.cfg";
    std::ofstream(cfg_path) << "V0 = 15\n";
    const auto sh = [&](const std::string& args) {
        return std::system((exe + " " + args + " > " + (dir / "out.txt").string() + " 2> " +
                            (dir / "err.txt").string())
                               .c_str());
    };
    CHECK(sh("summit --config " + cfg_path.string()) == 0);
    CHECK(slurp(dir / "out.txt") == "r_top=2, v_max=8.12012\n");
    CHECK(sh("count --config " + cfg_path.string() + " --V0 350") == 0);
    CHECK(slurp(dir / "out.txt") == "5\n");
    CHECK(sh("frobnicate") != 0);
    CHECK(sh("count --V0 -3") != 0);
    CHECK(slurp(dir / "err.txt").find("V0") != std::string::npos);
    std::ofstream(cfg_path) << "colour = blue\n";
    CHECK(sh("count --config " + cfg_path.string()) != 0);
    CHECK(slurp(dir / "err.txt").find("colour") != std::string::npos);
}
#endif
