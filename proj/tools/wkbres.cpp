#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "wkbres/cli.hpp"
#include "wkbres/config.hpp"
#include "wkbres/error.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Extended-WKB resonance solver for radial barriers"};
    app.set_help_flag("--help", "Print this help message and exit");

    std::string command;
    std::string config_path;
    std::map<std::string, std::string> overrides;

    app.add_option("command", command, "summit | count | wkb | refine | siegert | darboux | tables")
        ->required()
        ->check(CLI::IsMember({"summit", "count", "wkb", "refine", "siegert", "darboux", "tables"}));
    app.add_option("--config", config_path, "key = value run configuration file");
    for (const char* key : {"V0", "lambda", "h", "rmax", "out", "index", "rmatch", "energy"}) {
        app.add_option_function<std::string>(
            std::string("--") + key, [key, &overrides](const std::string& v) { overrides[key] = v; },
            std::string("override '") + key + "' from the config file");
    }

    CLI11_PARSE(app, argc, argv);

    wkbres::RunConfig cfg;
    try {
        if (!config_path.empty()) wkbres::parse_config_file(config_path, cfg);
        for (const auto& [key, value] : overrides) cfg.set(key, value);
    } catch (const wkbres::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    cfg.command = command;
    return wkbres::cli::run(cfg, std::cout, std::cerr);
}
