#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "adslen/errors.hpp"
#include "config.hpp"
#include "scenarios.hpp"

namespace fs = std::filesystem;
using namespace adslen::cli;

namespace {

void write_file(const fs::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + p.string());
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Length functions, Mess representations and pleated surfaces on the punctured torus"};
    std::string scenario, config_path, out_dir = ".";
    bool plot = false;
    Overrides ov;
    app.add_option("scenario", scenario, "convexity | earthquake | kerckhoff | shearbend | ineq | minimize")
        ->required()
        ->check(CLI::IsMember(scenario_names()));
    app.add_option("--config", config_path, "experiment config (INI-style, one section per scenario)")
        ->required()
        ->check(CLI::ExistingFile);
    app.add_option("--out", out_dir, "output directory");
    app.add_flag("--plot", plot, "write SVG plots for the section's plot key");
    app.add_option("--radius", ov.radius, "word radius override")->check(CLI::PositiveNumber);
    app.add_option("--density", ov.density, "sample density override")->check(CLI::PositiveNumber);
    app.add_option("--seed", ov.seed, "random seed override");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Outcome res;
    std::vector<std::string> plots;
    std::string csv_name;
    try {
        auto cfg = Config::load(config_path);
        auto sec = cfg.section(scenario);
        csv_name = sec.str("csv", scenario + ".csv");
        if (sec.has("plot")) plots = sec.list("plot");
        res = run_scenario(scenario, sec, ov);
        for (const auto& p : plots)
            if (res.table.column(p) < 0) sec.fail("plot", "no column '" + p + "' in the " + scenario + " table");
    } catch (const ConfigError& e) {
        std::cerr << "adslen: " << e.what() << '\n';
        return 2;
    } catch (const adslen::Error& e) {
        std::cerr << "adslen: " << scenario << " aborted: " << e.what() << '\n';
        return 1;
    }

    try {
        fs::create_directories(out_dir);
        fs::path csv = fs::path(out_dir) / csv_name;
        write_file(csv, to_csv(res.table));
        std::cout << scenario << ": " << res.table.rows.size() << " rows -> " << csv.string() << '\n';
        if (plot)
            for (const auto& p : plots) {
                fs::path svg = fs::path(out_dir) / (scenario + "_" + p + ".svg");
                write_file(svg, to_svg(res.table, res.x_column, p, res.series));
                std::cout << "plot " << p << " -> " << svg.string() << '\n';
            }
    } catch (const std::exception& e) {
        std::cerr << "adslen: " << e.what() << '\n';
        return 2;
    }

    for (const auto& w : res.warnings) std::cerr << "warning: " << w << '\n';
    for (const auto& f : res.failures) std::cerr << "FAIL " << f << '\n';
    if (!res.failures.empty()) {
        std::cerr << scenario << ": " << res.failures.size() << " assertion failure(s)\n";
        return 1;
    }
    std::cout << scenario << ": all assertions hold\n";
    return 0;
}
