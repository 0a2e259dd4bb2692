#pragma once

#include "perspec/runconfig.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace perspec::cli {

struct CheckRecord {
    std::string name;
    double value;
    double threshold;
    bool pass;
};

struct ReportBundle {
    std::vector<std::filesystem::path> csv_paths;
    std::vector<std::filesystem::path> svg_paths;
    std::vector<CheckRecord> summary;

    bool all_checks_pass() const {
        for (const auto& c : summary)
            if (!c.pass) return false;
        return true;
    }
};

/// Executes the configured command and writes its outputs under
/// config.out_dir. Configuration mistakes surface as ConfigError or
/// std::invalid_argument; failed validation landmarks are reported in the
/// summary, not thrown.
ReportBundle run(const RunConfig& config);

}  // namespace perspec::cli
