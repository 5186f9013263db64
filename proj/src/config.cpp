#include "wkbres/config.hpp"

#include <charconv>
#include <fstream>
#include <istream>

#include <fmt/format.h>

#include "wkbres/error.hpp"
#include "wkbres/io.hpp"

namespace wkbres {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

template <class T>
T parse_value(const std::string& key, const std::string& value) {
    T x{};
    const auto* end = value.data() + value.size();
    auto [ptr, ec] = std::from_chars(value.data(), end, x);
    if (ec != std::errc{} || ptr != end)
        throw Error(ErrorCode::ConfigError, fmt::format("key '{}': cannot parse '{}'", key, value));
    return x;
}

double positive(const std::string& key, const std::string& value) {
    const double x = parse_value<double>(key, value);
    if (!(x > 0.0)) throw Error(ErrorCode::ConfigError, fmt::format("key '{}': must be positive, got {}", key, value));
    return x;
}

}  // namespace

void RunConfig::set(const std::string& key, const std::string& value) {
    if (key == "potential") {
        if (value != "bbjs" && value != "anharmonic" && value != "tabulated")
            throw Error(ErrorCode::ConfigError, fmt::format("key 'potential': unknown model '{}'", value));
        potential = value;
    } else if (key == "V0") {
        v0 = positive(key, value);
    } else if (key == "lambda") {
        lambda = positive(key, value);
    } else if (key == "k") {
        k = positive(key, value);
    } else if (key == "g") {
        g = positive(key, value);
    } else if (key == "N") {
        power = parse_value<int>(key, value);
        if (power < 3 || power % 2 == 0)
            throw Error(ErrorCode::ConfigError, fmt::format("key 'N': must be odd and >= 3, got {}", value));
    } else if (key == "table") {
        table = value;
    } else if (key == "h") {
        h = positive(key, value);
    } else if (key == "rmax") {
        r_max = positive(key, value);
    } else if (key == "rmatch") {
        r_match = positive(key, value);
    } else if (key == "quad_tol") {
        quad_tol = positive(key, value);
    } else if (key == "index") {
        const int n = parse_value<int>(key, value);
        if (n < 0) throw Error(ErrorCode::ConfigError, fmt::format("key 'index': must be >= 0, got {}", value));
        index = n;
    } else if (key == "energy") {
        if (value != "refined" && value != "wkb")
            throw Error(ErrorCode::ConfigError, fmt::format("key 'energy': expected refined or wkb, got '{}'", value));
        energy = value;
    } else if (key == "normalize") {
        if (value != "0" && value != "1")
            throw Error(ErrorCode::ConfigError, fmt::format("key 'normalize': expected 0 or 1, got '{}'", value));
        normalize = value == "1";
    } else if (key == "out") {
        out_dir = value;
    } else {
        throw Error(ErrorCode::ConfigError, fmt::format("unknown key '{}'", key));
    }
}

Potential RunConfig::make_potential() const {
    if (potential == "anharmonic") return Potential(Anharmonic{k, g, power});
    if (potential == "tabulated") {
        if (table.empty()) throw Error(ErrorCode::ConfigError, "key 'table': required for potential = tabulated");
        return Potential(io::read_tabulated_file(table));
    }
    return Potential(Bbjs{v0, lambda});
}

ShootingOptions RunConfig::shooting() const {
    ShootingOptions opt;
    opt.h = h;
    opt.r_max = r_max;
    opt.r_match = r_match.value_or(0.0);
    return opt;
}

QuadratureOptions RunConfig::quadrature() const {
    QuadratureOptions opt;
    opt.rel_tol = quad_tol;
    return opt;
}

void parse_config(std::istream& in, RunConfig& cfg) {
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto text = trim(line.substr(0, line.find('#')));
        if (text.empty()) continue;
        const auto eq = text.find('=');
        if (eq == std::string::npos)
            throw Error(ErrorCode::ConfigError, fmt::format("line {}: expected 'key = value'", line_no));
        cfg.set(trim(text.substr(0, eq)), trim(text.substr(eq + 1)));
    }
}

void parse_config_file(const std::string& path, RunConfig& cfg) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ConfigError, fmt::format("cannot open config file {}", path));
    parse_config(in, cfg);
}

}  // namespace wkbres
