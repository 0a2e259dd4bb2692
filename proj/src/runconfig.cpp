#include "perspec/runconfig.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <functional>
#include <sstream>

namespace perspec::cli {
namespace {

constexpr std::array<std::pair<Command, const char*>, 6> kCommands{{
    {Command::kCylinderSweep, "cylinder-sweep"},
    {Command::kCornerSweep, "corner-sweep"},
    {Command::kAngleField, "angle-field"},
    {Command::kVoxelBounds, "voxel-bounds"},
    {Command::kOracleValidate, "oracle-validate"},
    {Command::kScanmatchDemo, "scanmatch-demo"},
}};

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

double to_double(const std::string& key, const std::string& value) {
    char* end = nullptr;
    const double v = std::strtod(value.c_str(), &end);
    if (end == value.c_str() || *end != '\0')
        throw ConfigError("key '" + key + "': expected a number, got '" + value + "'");
    return v;
}

long long to_int(const std::string& key, const std::string& value) {
    char* end = nullptr;
    const long long v = std::strtoll(value.c_str(), &end, 10);
    if (end == value.c_str() || *end != '\0')
        throw ConfigError("key '" + key + "': expected an integer, got '" + value + "'");
    return v;
}

bool to_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1" || value == "yes") return true;
    if (value == "false" || value == "0" || value == "no") return false;
    throw ConfigError("key '" + key + "': expected a boolean, got '" + value + "'");
}

using Setter = std::function<void(RunConfig&, const std::string&, const std::string&)>;

const std::map<std::string, Setter>& setters() {
    static const std::map<std::string, Setter> table = {
        {"command", [](RunConfig& c, const std::string&, const std::string& v) { c.command = parse_command(v); }},
        {"out", [](RunConfig& c, const std::string&, const std::string& v) { c.out_dir = v; }},
        {"svg", [](RunConfig& c, const std::string& k, const std::string& v) { c.svg = to_bool(k, v); }},
        {"seed",
         [](RunConfig& c, const std::string& k, const std::string& v) {
             c.seed = static_cast<std::uint64_t>(to_int(k, v));
         }},
        {"y-over-r", [](RunConfig& c, const std::string& k, const std::string& v) { c.y_over_r = to_double(k, v); }},
        {"x-start", [](RunConfig& c, const std::string& k, const std::string& v) { c.x_start = to_double(k, v); }},
        {"x-end", [](RunConfig& c, const std::string& k, const std::string& v) { c.x_end = to_double(k, v); }},
        {"step", [](RunConfig& c, const std::string& k, const std::string& v) { c.step = to_double(k, v); }},
        {"preset",
         [](RunConfig& c, const std::string& k, const std::string& v) {
             if (v != "convexV" && v != "Lshape" && v != "concave")
                 throw ConfigError("key '" + k + "': expected convexV, Lshape, or concave, got '" + v + "'");
             c.preset = v;
         }},
        {"baseline-d",
         [](RunConfig& c, const std::string& k, const std::string& v) { c.baseline_d = to_double(k, v); }},
        {"half-extent-over-d",
         [](RunConfig& c, const std::string& k, const std::string& v) { c.half_extent_over_d = to_double(k, v); }},
        {"resolution",
         [](RunConfig& c, const std::string& k, const std::string& v) {
             c.resolution = static_cast<int>(to_int(k, v));
         }},
        {"n-min",
         [](RunConfig& c, const std::string& k, const std::string& v) { c.n_min = static_cast<int>(to_int(k, v)); }},
        {"n-max",
         [](RunConfig& c, const std::string& k, const std::string& v) { c.n_max = static_cast<int>(to_int(k, v)); }},
        {"rays", [](RunConfig& c, const std::string& k, const std::string& v) { c.rays = to_int(k, v); }},
        {"views",
         [](RunConfig& c, const std::string& k, const std::string& v) { c.views = static_cast<int>(to_int(k, v)); }},
        {"tolerance-over-r",
         [](RunConfig& c, const std::string& k, const std::string& v) { c.tolerance_over_r = to_double(k, v); }},
        {"radius-m",
         [](RunConfig& c, const std::string& k, const std::string& v) { c.radius_m = to_double(k, v); }},
        {"cell-size",
         [](RunConfig& c, const std::string& k, const std::string& v) { c.cell_size = to_double(k, v); }},
        {"demo-rays", [](RunConfig& c, const std::string& k, const std::string& v) { c.demo_rays = to_int(k, v); }},
    };
    return table;
}

void apply(RunConfig& config, const KeyValues& values) {
    for (const auto& [key, value] : values) {
        const auto it = setters().find(key);
        if (it == setters().end()) throw ConfigError("unknown key '" + key + "'");
        it->second(config, key, value);
    }
}

}  // namespace

Command parse_command(const std::string& name) {
    for (const auto& [command, text] : kCommands)
        if (name == text) return command;
    throw ConfigError("unknown command '" + name + "'");
}

std::string command_name(Command command) {
    for (const auto& [cmd, text] : kCommands)
        if (cmd == command) return text;
    return "?";
}

KeyValues parse_config_text(const std::string& text) {
    KeyValues out;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto comment = line.find('#');
        if (comment != std::string::npos) line.erase(comment);
        const std::string stripped = trim(line);
        if (stripped.empty()) continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(line_no) + ": expected 'key = value'");
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key.empty())
            throw ConfigError("config line " + std::to_string(line_no) + ": empty key");
        out[key] = value;  // last occurrence wins
    }
    return out;
}

RunConfig build_config(const KeyValues& file_values, const KeyValues& flag_values) {
    if (!file_values.count("command") && !flag_values.count("command"))
        throw ConfigError("missing required key 'command'");
    RunConfig config;
    apply(config, file_values);
    apply(config, flag_values);
    return config;
}

}  // namespace perspec::cli
