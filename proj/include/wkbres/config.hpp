#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "wkbres/potential.hpp"
#include "wkbres/quadrature.hpp"
#include "wkbres/siegert.hpp"

namespace wkbres {

inline constexpr const char* kCommands[] = {"summit", "count", "wkb", "refine", "siegert", "darboux", "tables"};

/// Flat `key = value` run description. Lines starting with '#' are comments.
///
/// Keys: potential (bbjs | anharmonic | tabulated), V0, lambda, k, g, N,
/// table (CSV path), h, rmax, rmatch, quad_tol, index, energy (refined | wkb),
/// normalize (0 | 1), out.
struct RunConfig {
    std::string command;
    std::string potential = "bbjs";
    double v0 = 15.0;
    double lambda = 1.0;
    double k = 800.0;
    double g = 400.0;
    int power = 3;
    std::string table;
    double h = 1e-3;
    double r_max = 40.0;
    std::optional<double> r_match;
    double quad_tol = 1e-13;
    std::optional<int> index;
    std::string energy = "refined";
    bool normalize = true;
    std::string out_dir = ".";

    /// Applies one key; throws ConfigError naming the key on unknown keys or bad values.
    void set(const std::string& key, const std::string& value);

    Potential make_potential() const;
    ShootingOptions shooting() const;
    QuadratureOptions quadrature() const;
};

/// Reads `key = value` lines into cfg (later keys override earlier ones).
void parse_config(std::istream& in, RunConfig& cfg);
void parse_config_file(const std::string& path, RunConfig& cfg);

}  // namespace wkbres
