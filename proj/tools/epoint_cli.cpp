// epoint <find-ep|vector|sweep|encircle> --config <path> [--out <path>] [--seed N]

#include "epoint/epoint.h"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

int exit_code(epoint_status s) {
    switch (s) {
        case EPOINT_OK: return 0;
        case EPOINT_E_DEGENERATE_MODEL: return 2;
        case EPOINT_E_DISAGREEMENT: return 3;
        case EPOINT_E_PATH_DEGENERACY:
        case EPOINT_E_TRACKING_FAILURE: return 4;
        default: return 1;
    }
}

bool write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    f << text;
    return static_cast<bool>(f);
}

struct Options {
    std::string config;
    std::string out;
    std::string summary;
    std::optional<std::uint64_t> seed;
};

int run(const std::string& command, const Options& opt) {
    std::ifstream in(opt.config, std::ios::binary);
    if (!in) {
        std::cerr << "epoint: cannot read config file " << opt.config << "\n";
        return 1;
    }
    std::ostringstream buf;
    buf << in.rdbuf();

    epoint_report* report = nullptr;
    const epoint_status status =
        epoint_run(command.c_str(), buf.str().c_str(), opt.seed ? 1 : 0, opt.seed.value_or(0), &report);
    if (!report) {
        std::cerr << "epoint: " << epoint_last_error() << "\n";
        return exit_code(status);
    }

    const std::string primary = epoint_report_primary(report);
    const std::string secondary = epoint_report_secondary(report);
    const std::string message = epoint_report_message(report);
    epoint_report_destroy(report);

    int code = exit_code(status);
    if (!primary.empty()) {
        if (opt.out.empty())
            std::cout << primary;
        else if (!write_text(opt.out, primary)) {
            std::cerr << "epoint: cannot write " << opt.out << "\n";
            code = 1;
        }
    }
    if (!secondary.empty()) {
        if (!opt.summary.empty()) {
            if (!write_text(opt.summary, secondary)) {
                std::cerr << "epoint: cannot write " << opt.summary << "\n";
                code = 1;
            }
        } else if (!opt.out.empty()) {
            std::cout << secondary;
        } else {
            std::cerr << secondary;
        }
    }
    if (status != EPOINT_OK) std::cerr << "epoint: " << message << "\n";
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exceptional points of two-level non-Hermitian Hamiltonians"};
    app.require_subcommand(1);

    Options opt;
    std::uint64_t seed = 0;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", opt.config, "Model/run configuration (JSON)")->required();
        sub->add_option("--out", opt.out, "Output path (default: stdout)");
        sub->add_option("--seed", seed, "Seed for randomized property sweeps");
    };
    auto* find_ep = app.add_subcommand("find-ep", "Locate both EPs by every applicable route and cross-check them");
    auto* vector = app.add_subcommand("vector", "Coalesced eigenvectors, phases and polarization at the EPs");
    auto* sweep = app.add_subcommand("sweep", "Grid sweep over tau0, tau1, phi0, phi1 (CSV)");
    auto* encircle = app.add_subcommand("encircle", "Track eigenvalue branches around a loop (CSV + JSON summary)");
    for (auto* sub : {find_ep, vector, sweep, encircle}) add_common(sub);
    encircle->add_option("--summary", opt.summary, "JSON summary path (default: stdout when --out is given)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    for (auto* sub : {find_ep, vector, sweep, encircle}) {
        if (sub->parsed()) {
            if (sub->count("--seed") > 0) opt.seed = seed;
            return run(sub->get_name(), opt);
        }
    }
    return 1;
}
