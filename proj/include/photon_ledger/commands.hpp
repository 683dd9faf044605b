#pragma once

#include <exception>
#include <string>
#include <vector>

#include "photon_ledger/config.hpp"

namespace photon_ledger {

inline constexpr const char* kToolVersion = "1.0.0";

struct CommandOptions {
    std::string out_dir = ".";
    std::string config_path;
    bool oracle = false;
    int threads = 1;
};

struct Check {
    std::string name;
    bool passed = false;
    double value = 0.0;      // measured quantity (usually a relative error)
    double threshold = 0.0;
    std::string detail;
};

/// The invariant suite behind `validate`. Which checks run depends on the
/// source: closed-form checks need a thin static loop, oracle and field
/// checks need probes.
std::vector<Check> run_validation(const RunConfig& config, int threads);

/// Runs one of photon-density, summary, field-map, amplitude, validate and
/// writes its outputs plus <command>.manifest.json into options.out_dir.
/// Returns the process exit code; module errors propagate as exceptions.
int run_command(const std::string& command, const RunConfig& config, const CommandOptions& options);

const std::vector<std::string>& command_names();

/// Machine-readable description of an error for stderr.
std::string error_json(const std::exception& e);

/// Shortest round-trip text for a double (%.17g).
std::string format_double(double v);

}  // namespace photon_ledger
