#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "photon_ledger/current_model.hpp"
#include "photon_ledger/field_reconstruction.hpp"
#include "photon_ledger/kgrid.hpp"

namespace photon_ledger {

/// Tolerances used by `validate`; every entry can be overridden from the
/// config's "tolerances" object.
std::map<std::string, double> default_tolerances();

struct RunConfig {
    CurrentSource source;
    KGridSpec grid;
    double time = 0.0;  // s
    double eps = 0.0;   // 1/s
    std::vector<Vec3> probes;
    std::vector<double> times;
    FieldOptions field;
    std::map<std::string, double> tolerances;
    nlohmann::json echo;  // the document as loaded
};

/// Strict parse: unknown keys, missing required keys, wrong types and
/// physically invalid values are collected and thrown together as one
/// ValidationError.
RunConfig parse_config(const nlohmann::json& doc);
RunConfig load_config(const std::string& path);

/// Closest candidate by edit distance, empty when nothing is close.
std::string nearest_key(const std::string& key, const std::vector<std::string>& candidates);

}  // namespace photon_ledger
