#include "perspec/csv.hpp"
#include "perspec/runconfig.hpp"
#include "perspec/runner.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <map>
#include <string>
#include <vector>

namespace {

using perspec::cli::KeyValues;

struct OptionSpec {
    const char* key;
    const char* desc;
    bool flag = false;
};

const std::vector<OptionSpec> kCommonOptions = {
    {"out", "output directory (default ./out)"},
    {"seed", "seed for randomized suites"},
    {"svg", "also render SVG plots", true},
};

const std::map<std::string, std::vector<OptionSpec>> kCommandOptions = {
    {"cylinder-sweep",
     {{"y-over-r", "lateral offset of the cylinder center, in radii"},
      {"x-start", "first along-track position, in radii"},
      {"x-end", "last along-track position, in radii"},
      {"step", "along-track step, in radii"}}},
    {"corner-sweep",
     {{"preset", "corner orientation: convexV | Lshape | concave"},
      {"y-over-r", "lateral offset of the vertex, in wall lengths"},
      {"x-start", "first along-track position"},
      {"x-end", "last along-track position"},
      {"step", "along-track step"}}},
    {"angle-field",
     {{"baseline-d", "viewpoint separation d"},
      {"half-extent-over-d", "half extent of the grid, in units of d"},
      {"resolution", "grid nodes per axis"}}},
    {"voxel-bounds",
     {{"n-min", "smallest cell count across the diameter"},
      {"n-max", "largest cell count across the diameter"}}},
    {"oracle-validate",
     {{"rays", "rays per scan (the convergence check doubles this)"},
      {"views", "randomized views per object"},
      {"tolerance-over-r", "max allowed |analytic - sampled| / R"}}},
    {"scanmatch-demo",
     {{"demo-rays", "rays per scan"},
      {"radius-m", "object radius in meters, applied at output"},
      {"cell-size", "voxel edge length, in radii"}}},
};

const std::map<std::string, std::string> kCommandHelp = {
    {"cylinder-sweep", "drive-by perspective-error curve for a cylinder"},
    {"corner-sweep", "drive-by perspective-error curve for a dual-wall corner"},
    {"angle-field", "viewing-angle-change map for a short along-track move"},
    {"voxel-bounds", "worst-case per-voxel error bounds vs. grid resolution"},
    {"oracle-validate", "cross-check analytic means against ray-cast scans"},
    {"scanmatch-demo", "bias propagation through a mean-alignment matcher"},
};

void add_options(CLI::App* cmd, const std::vector<OptionSpec>& specs, KeyValues& flags) {
    for (const OptionSpec& spec : specs) {
        const std::string name = std::string("--") + spec.key;
        const std::string key = spec.key;
        if (spec.flag) {
            cmd->add_flag_callback(name, [&flags, key] { flags[key] = "true"; }, spec.desc);
        } else {
            cmd->add_option_function<std::string>(
                name, [&flags, key](const std::string& v) { flags[key] = v; }, spec.desc);
        }
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Analytic models and simulations of lidar self-occlusion bias in voxel scan matching"};
    app.require_subcommand(0, 1);

    KeyValues flag_values;
    std::string config_path;
    add_options(&app, kCommonOptions, flag_values, config_path);

    for (const auto& [name, options] : kCommandOptions) {
        CLI::App* sub = app.add_subcommand(name, kCommandHelp.at(name));
        add_options(sub, options, flag_values, config_path);
        add_options(sub, kCommonOptions, flag_values, config_path);
        sub->callback([&flag_values, name = name] { flag_values["command"] = name; });
    }

    CLI11_PARSE(app, argc, argv);

    try {
        KeyValues file_values;
        if (!config_path.empty())
            file_values = perspec::cli::parse_config_text(perspec::report::read_file(config_path));

        const perspec::cli::RunConfig config = perspec::cli::build_config(file_values, flag_values);
        const perspec::cli::ReportBundle bundle = perspec::cli::run(config);

        for (const auto& path : bundle.csv_paths) std::printf("wrote %s\n", path.c_str());
        for (const auto& path : bundle.svg_paths) std::printf("wrote %s\n", path.c_str());
        for (const auto& check : bundle.summary)
            std::printf("[%s] %s = %.6g (threshold %.6g)\n", check.pass ? "pass" : "FAIL",
                        check.name.c_str(), check.value, check.threshold);

        if (config.command == perspec::cli::Command::kOracleValidate && !bundle.all_checks_pass())
            return 2;
        return 0;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
