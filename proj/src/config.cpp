#include "photon_ledger/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>

#include "photon_ledger/errors.hpp"

namespace photon_ledger {

using nlohmann::json;

std::map<std::string, double> default_tolerances() {
    return {
        {"transversality", 1e-12},   {"hermiticity", 1e-12},    {"projector", 1e-14},
        {"linearity", 1e-12},        {"virial", 1e-12},         {"phase", 1e-10},
        {"photon_number", 5e-3},     {"photon_density", 1e-12}, {"reality", 1e-10},
        {"static_time", 1e-10},      {"divergence", 1e-3},      {"biot_savart", 1e-2},
        {"potential_identity", 1e-10}, {"static_e_perp", 1e-8}, {"retarded", 2e-2},
        {"causality", 1e-8},         {"faraday", 1e-2},
    };
}

std::string nearest_key(const std::string& key, const std::vector<std::string>& candidates) {
    auto distance = [](const std::string& a, const std::string& b) {
        std::vector<std::size_t> row(b.size() + 1);
        for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
        for (std::size_t i = 1; i <= a.size(); ++i) {
            std::size_t diag = row[0];
            row[0] = i;
            for (std::size_t j = 1; j <= b.size(); ++j) {
                const std::size_t up = row[j];
                row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
                diag = up;
            }
        }
        return row[b.size()];
    };
    std::string best;
    std::size_t best_d = std::max<std::size_t>(2, key.size() / 3) + 1;
    for (const auto& c : candidates) {
        const std::size_t d = distance(key, c);
        if (d < best_d) {
            best_d = d;
            best = c;
        }
    }
    return best;
}

namespace {

// Collects every problem instead of stopping at the first one.
class Reader {
public:
    std::vector<std::string> errors;

    bool object(const json& j, const std::string& path) {
        if (j.is_object()) return true;
        errors.push_back(path + ": expected an object");
        return false;
    }

    void allow(const json& obj, const std::string& path, const std::vector<std::string>& keys) {
        for (const auto& [k, v] : obj.items()) {
            (void)v;
            if (std::find(keys.begin(), keys.end(), k) != keys.end()) continue;
            std::string msg = join(path, k) + ": unknown key";
            if (auto s = nearest_key(k, keys); !s.empty()) msg += " (did you mean '" + s + "'?)";
            errors.push_back(msg);
        }
    }

    std::optional<double> number(const json& obj, const std::string& path, const std::string& key, bool required) {
        if (!obj.contains(key)) {
            if (required) errors.push_back(join(path, key) + ": missing required key");
            return std::nullopt;
        }
        const json& v = obj.at(key);
        if (!v.is_number()) {
            errors.push_back(join(path, key) + ": expected a number");
            return std::nullopt;
        }
        return v.get<double>();
    }

    double number_or(const json& obj, const std::string& path, const std::string& key, double fallback) {
        return number(obj, path, key, false).value_or(fallback);
    }

    std::optional<std::size_t> count(const json& obj, const std::string& path, const std::string& key) {
        if (!obj.contains(key)) return std::nullopt;
        const json& v = obj.at(key);
        if (!v.is_number_integer() || v.get<long long>() < 0) {
            errors.push_back(join(path, key) + ": expected a non-negative integer");
            return std::nullopt;
        }
        return v.get<std::size_t>();
    }

    std::optional<Vec3> vec3(const json& v, const std::string& where) {
        if (!v.is_array() || v.size() != 3 || !std::all_of(v.begin(), v.end(), [](const json& e) { return e.is_number(); })) {
            errors.push_back(where + ": expected an array of 3 numbers");
            return std::nullopt;
        }
        return Vec3(v[0].get<double>(), v[1].get<double>(), v[2].get<double>());
    }

    std::optional<Vec3> vec3(const json& obj, const std::string& path, const std::string& key, bool required) {
        if (!obj.contains(key)) {
            if (required) errors.push_back(join(path, key) + ": missing required key");
            return std::nullopt;
        }
        return vec3(obj.at(key), join(path, key));
    }

    std::optional<std::string> string(const json& obj, const std::string& path, const std::string& key, bool required) {
        if (!obj.contains(key)) {
            if (required) errors.push_back(join(path, key) + ": missing required key");
            return std::nullopt;
        }
        if (!obj.at(key).is_string()) {
            errors.push_back(join(path, key) + ": expected a string");
            return std::nullopt;
        }
        return obj.at(key).get<std::string>();
    }

    static std::string join(const std::string& path, const std::string& key) {
        return path.empty() ? key : path + "." + key;
    }
};

TemporalProfile read_profile(Reader& r, const json& src) {
    if (!src.contains("profile")) return StaticProfile{};
    const std::string path = "source.profile";
    const json& p = src.at("profile");
    if (!r.object(p, path)) return StaticProfile{};
    const auto type = r.string(p, path, "type", true);
    if (!type) return StaticProfile{};
    if (*type == "static") {
        r.allow(p, path, {"type"});
        return StaticProfile{};
    }
    if (*type == "gaussian_pulse") {
        r.allow(p, path, {"type", "t0", "sigma"});
        GaussianPulse g;
        g.t0 = r.number_or(p, path, "t0", 0.0);
        g.sigma = r.number(p, path, "sigma", true).value_or(1.0);
        return g;
    }
    if (*type == "truncated_harmonic") {
        r.allow(p, path, {"type", "omega", "t_on", "ramp_sigma"});
        TruncatedHarmonic h;
        h.omega = r.number(p, path, "omega", true).value_or(1.0);
        h.t_on = r.number_or(p, path, "t_on", 0.0);
        h.ramp_sigma = r.number(p, path, "ramp_sigma", true).value_or(1.0);
        return h;
    }
    r.errors.push_back(path + ".type: unknown profile '" + *type +
                       "' (expected static, gaussian_pulse or truncated_harmonic)");
    return StaticProfile{};
}

struct SourceInfo {
    bool parsed = false;     // type recognized, geometry filled in
    bool has_scale = false;  // loop-like source: default cutoffs come from the radius
    double scale = 0.0;
};

SourceInfo read_source(Reader& r, const json& doc, CurrentSource& out) {
    const std::string path = "source";
    if (!doc.contains("source")) {
        r.errors.push_back("source: missing required key");
        return {};
    }
    const json& s = doc.at("source");
    if (!r.object(s, path)) return {};
    const auto type = r.string(s, path, "type", true);
    if (!type) return {};
    out.profile = read_profile(r, s);

    if (*type == "circular_loop") {
        r.allow(s, path, {"type", "current", "radius", "center", "axis", "core_radius", "profile"});
        CircularLoop l;
        l.current = r.number(s, path, "current", true).value_or(1.0);
        l.radius = r.number(s, path, "radius", true).value_or(1.0);
        l.center = r.vec3(s, path, "center", false).value_or(Vec3::Zero());
        l.axis = r.vec3(s, path, "axis", false).value_or(Vec3::UnitZ());
        l.core_radius = r.number_or(s, path, "core_radius", 0.0);
        out.geometry = l;
        return {true, true, l.radius};
    }
    if (*type == "hertzian_dipole") {
        r.allow(s, path, {"type", "moment", "position", "profile"});
        HertzianDipole d;
        d.moment = r.vec3(s, path, "moment", true).value_or(Vec3::Zero());
        d.position = r.vec3(s, path, "position", false).value_or(Vec3::Zero());
        out.geometry = d;
        return {true, false, 0.0};
    }
    if (*type == "sampled_loop") {
        r.allow(s, path, {"type", "current", "radius", "samples", "half_width", "width_cells", "profile"});
        const double current = r.number(s, path, "current", true).value_or(1.0);
        const double radius = r.number(s, path, "radius", true).value_or(1.0);
        const std::size_t n = r.count(s, path, "samples").value_or(64);
        const double half_width = r.number_or(s, path, "half_width", 1.5 * radius);
        const double width_cells = r.number_or(s, path, "width_cells", 2.0);
        if (!(radius > 0.0) || !(half_width > radius) || n < 2 || n > 512 || !(width_cells > 0.0)) {
            r.errors.push_back("source: sampled_loop needs radius > 0, half_width > radius, 2 <= samples <= 512, "
                               "width_cells > 0");
            return {false, true, radius};
        }
        out.geometry = sample_regularized_loop(current, radius, n, half_width, width_cells);
        return {true, true, radius};
    }
    r.errors.push_back("source.type: unknown source '" + *type +
                       "' (expected circular_loop, hertzian_dipole or sampled_loop)");
    return {};
}

}  // namespace

RunConfig parse_config(const json& doc) {
    Reader r;
    RunConfig cfg;
    cfg.echo = doc;
    cfg.tolerances = default_tolerances();
    if (!doc.is_object()) throw ValidationError({"config: expected a JSON object at top level"});
    r.allow(doc, "", {"source", "grid", "time", "eps", "probes", "times", "field", "tolerances"});

    const SourceInfo src = read_source(r, doc, cfg.source);
    // A bad radius is reported by the source checks; fall back to placeholder
    // cutoffs instead of also claiming they are missing.
    const double scale = src.has_scale && src.scale > 0.0 && std::isfinite(src.scale) ? src.scale : 0.0;

    const json grid = doc.contains("grid") ? doc.at("grid") : json::object();
    if (r.object(grid, "grid")) {
        r.allow(grid, "grid", {"k_min", "k_max", "n_k", "n_theta", "n_phi", "radial_map"});
        const bool required = src.parsed && !src.has_scale;
        const auto kmin = r.number(grid, "grid", "k_min", required);
        const auto kmax = r.number(grid, "grid", "k_max", required);
        cfg.grid.k_min = kmin.value_or(scale > 0.0 ? 1e-3 / scale : 1.0);
        cfg.grid.k_max = kmax.value_or(scale > 0.0 ? 200.0 / scale : 2.0);
        if (auto v = r.count(grid, "grid", "n_k")) cfg.grid.n_k = *v;
        if (auto v = r.count(grid, "grid", "n_theta")) cfg.grid.n_theta = *v;
        if (auto v = r.count(grid, "grid", "n_phi")) cfg.grid.n_phi = *v;
        if (auto m = r.string(grid, "grid", "radial_map", false)) {
            if (*m == "linear" || *m == "log")
                cfg.grid.radial_map = radial_map_from_string(*m);
            else
                r.errors.push_back("grid.radial_map: expected 'linear' or 'log'");
        }
    }

    cfg.time = r.number_or(doc, "", "time", 0.0);
    cfg.eps = r.number_or(doc, "", "eps", 0.0);
    if (!std::isfinite(cfg.time)) r.errors.push_back("time: must be finite");
    if (!(std::isfinite(cfg.eps) && cfg.eps >= 0.0)) r.errors.push_back("eps: must be finite and >= 0");

    if (doc.contains("probes")) {
        const json& p = doc.at("probes");
        if (!p.is_array()) {
            r.errors.push_back("probes: expected an array of [x, y, z] points");
        } else {
            for (std::size_t i = 0; i < p.size(); ++i)
                if (auto v = r.vec3(p[i], "probes[" + std::to_string(i) + "]")) cfg.probes.push_back(*v);
        }
    }
    if (doc.contains("times")) {
        const json& t = doc.at("times");
        if (!t.is_array() || !std::all_of(t.begin(), t.end(), [](const json& e) { return e.is_number(); }))
            r.errors.push_back("times: expected an array of numbers");
        else
            for (const auto& e : t) cfg.times.push_back(e.get<double>());
    }
    if (doc.contains("field")) {
        const json& f = doc.at("field");
        if (r.object(f, "field")) {
            r.allow(f, "field", {"azimuthal_nodes"});
            if (auto v = r.count(f, "field", "azimuthal_nodes")) cfg.field.azimuthal_nodes = *v;
        }
    }
    if (doc.contains("tolerances")) {
        const json& t = doc.at("tolerances");
        if (r.object(t, "tolerances")) {
            std::vector<std::string> names;
            for (const auto& [k, v] : cfg.tolerances) names.push_back(k);
            r.allow(t, "tolerances", names);
            for (const auto& name : names)
                if (auto v = r.number(t, "tolerances", name, false)) {
                    if (*v > 0.0)
                        cfg.tolerances[name] = *v;
                    else
                        r.errors.push_back("tolerances." + name + ": must be > 0");
                }
        }
    }

    if (src.parsed)
        for (auto& v : cfg.source.violations()) r.errors.push_back(v);
    for (auto& v : cfg.grid.violations()) r.errors.push_back(v);
    if (src.parsed && cfg.source.violations().empty()) {
        if (cfg.grid.n_phi == 1 && !cfg.source.axisymmetric_about_z())
            r.errors.push_back("grid.n_phi: a meridian grid (n_phi = 1) requires a source axisymmetric about z");
    }
    if (!r.errors.empty()) throw ValidationError(std::move(r.errors));
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError({"config: cannot open '" + path + "'"});
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ValidationError({std::string("config: ") + e.what()});
    }
    return parse_config(doc);
}

}  // namespace photon_ledger
