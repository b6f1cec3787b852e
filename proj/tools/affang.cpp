// affang: compute affine angles, isoptic loci, hyperbolic powers and the
// related constructions from the command line.
//
// Exit status: 0 success, 1 usage or parse error, 2 domain error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "cli_run.hpp"

namespace {

int emit(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return std::cout ? 0 : 1;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "cannot open " << path << " for writing\n";
        return 1;
    }
    out << text;
    return out ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace affang::cli;

    CLI::App app{"Affine angles relative to a pair of reference directions, and their isoptic hyperbolas"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string output = "json";
    std::string out_path;
    std::uint64_t seed = 0;
    std::string viewport;
    app.add_option("--output", output, "json or svg (svg: isoptic only)")->check(CLI::IsMember({"json", "svg"}));
    app.add_option("--out", out_path, "write to PATH instead of standard output");
    app.add_option("--seed", seed, "seed for random sampling (mt19937_64)");
    app.add_option("--viewport", viewport, "SVG bounds xmin,ymin,xmax,ymax (default: fit with 5% margin)");

    std::map<std::string, std::map<std::string, std::string>> raw;
    std::map<CLI::App*, Subcommand> which;
    for (const auto& [name, sub] : subcommand_names()) {
        CLI::App* cmd = app.add_subcommand(name, summary_of(sub));
        which[cmd] = sub;
        for (const auto& spec : params_for(sub)) {
            std::string help = spec.help;
            if (spec.fallback) help += " (default " + *spec.fallback + ")";
            cmd->add_option_function<std::string>(
                "--" + spec.name, [&raw, name = name, key = spec.name](const std::string& v) { raw[name][key] = v; }, help);
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    RunConfig cfg;
    for (const auto& [cmd, sub] : which) {
        if (cmd->parsed()) {
            cfg.subcommand = sub;
            cfg.params = raw[cmd->get_name()];
        }
    }
    cfg.format = output == "svg" ? Format::Svg : Format::Json;
    cfg.seed = seed;
    if (!viewport.empty()) cfg.viewport = viewport;

    std::string text;
    try {
        text = run(cfg);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const affang::GeometryError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return emit(text, out_path);
}
