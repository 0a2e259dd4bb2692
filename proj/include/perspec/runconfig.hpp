#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>

namespace perspec::cli {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Command {
    kCylinderSweep,
    kCornerSweep,
    kAngleField,
    kVoxelBounds,
    kOracleValidate,
    kScanmatchDemo,
};

Command parse_command(const std::string& name);
std::string command_name(Command command);

/// Full run description. One struct covers every command; each command reads
/// the fields it needs. Lengths are in units of the object size unless a
/// field says meters.
struct RunConfig {
    Command command = Command::kCylinderSweep;
    std::filesystem::path out_dir = "./out";
    bool svg = false;
    std::uint64_t seed = 12345;

    // drive-by sweeps
    double y_over_r = 1.0;
    double x_start = -15.0;
    double x_end = 15.0;
    double step = 0.05;
    std::string preset = "convexV";  // corner-sweep: convexV | Lshape | concave

    // angle-field
    double baseline_d = 1.0;
    double half_extent_over_d = 2.0;
    int resolution = 81;

    // voxel-bounds
    int n_min = 2;
    int n_max = 4;

    // oracle-validate
    long long rays = 1000000;
    int views = 50;
    double tolerance_over_r = 5e-3;

    // scanmatch-demo
    double radius_m = 0.2;
    double cell_size = 4.0;
    long long demo_rays = 1000000;
};

using KeyValues = std::map<std::string, std::string>;

/// Parses a flat `key = value` document (one pair per line, '#' comments).
KeyValues parse_config_text(const std::string& text);

/// Builds a RunConfig from a config-file map and a flag map; flag entries
/// override file entries. Unknown keys, malformed values, and a missing
/// command are reported by key name.
RunConfig build_config(const KeyValues& file_values, const KeyValues& flag_values);

}  // namespace perspec::cli
