#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "photon_ledger/commands.hpp"
#include "photon_ledger/errors.hpp"
#include "test_util.hpp"

using namespace photon_ledger;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

std::vector<std::string> violations_of(const json& doc) {
    try {
        parse_config(doc);
    } catch (const ValidationError& e) {
        return e.violations();
    }
    return {};
}

bool any_contains(const std::vector<std::string>& v, const std::string& needle) {
    for (const auto& s : v)
        if (s.find(needle) != std::string::npos) return true;
    return false;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path scratch(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("photon_ledger_test_" + name);
    fs::remove_all(p);
    return p;
}

json minimal() { return {{"source", {{"type", "circular_loop"}, {"current", 1.0}, {"radius", 0.1}}}}; }

}  // namespace

TEST_SUITE("config_commands") {

TEST_CASE("minimal loop config gets default grid") {
    const RunConfig c = parse_config(minimal());
    CHECK(c.grid.k_min == doctest::Approx(1e-2));
    CHECK(c.grid.k_max == doctest::Approx(2000.0));
    CHECK(c.grid.n_k == 128);
    CHECK(c.grid.n_theta == 64);
    CHECK(c.grid.n_phi == 16);
    CHECK(c.grid.radial_map == RadialMap::log);
    CHECK(c.echo == minimal());
    CHECK(std::get<CircularLoop>(c.source.geometry).radius == 0.1);
}

TEST_CASE("invalid values and unknown keys are all reported") {
    json doc = minimal();
    doc["source"]["radius"] = -1.0;
    CHECK(any_contains(violations_of(doc), "source.radius"));

    doc = minimal();
    doc["source"].erase("radius");
    doc["source"]["radiu"] = 0.1;
    doc["grid"] = {{"n_k", 3}, {"radial_map", "cubic"}};
    doc["tolerances"] = {{"virial", -1.0}, {"viral", 1e-3}};
    const auto v = violations_of(doc);
    CHECK(any_contains(v, "did you mean 'radius'"));
    CHECK(any_contains(v, "source.radius: missing"));
    CHECK(any_contains(v, "grid.radial_map"));
    CHECK(any_contains(v, "tolerances.virial: must be > 0"));
    CHECK(any_contains(v, "did you mean 'virial'"));
    CHECK(v.size() >= 5);

    doc = minimal();
    doc["source"]["profile"] = {{"type", "gaussian"}, {"sigma", 1.0}};
    CHECK(any_contains(violations_of(doc), "unknown profile"));

    doc = minimal();
    doc["source"]["current"] = "one";
    CHECK(any_contains(violations_of(doc), "expected a number"));

    CHECK(any_contains(violations_of(json{{"source", {{"type", "hertzian_dipole"}, {"moment", {0, 0, 1}}}}}), "grid.k_min"));
    CHECK_THROWS_AS(load_config("/nonexistent/config.json"), ValidationError);
}

TEST_CASE("meridian grids need axisymmetric sources") {
    json doc = minimal();
    doc["source"]["axis"] = {1, 0, 0};
    doc["grid"] = {{"n_phi", 1}};
    CHECK(any_contains(violations_of(doc), "grid.n_phi"));
}

TEST_CASE("nearest key") {
    CHECK(nearest_key("radiu", {"radius", "current"}) == "radius");
    CHECK(nearest_key("zzzzzzzz", {"radius", "current"}).empty());
}

TEST_CASE("shipped configs load") {
    for (const char* name : {"loop_static.json", "loop_field.json", "loop_pulse.json", "dipole_static.json"}) {
        CAPTURE(name);
        CHECK_NOTHROW(load_config(test_util::config_path(name)));
    }
}

TEST_CASE("summary labels energies with their cutoffs and is reproducible") {
    const RunConfig cfg = load_config(test_util::config_path("loop_static.json"));
    const fs::path a = scratch("summary_a"), b = scratch("summary_b");
    CommandOptions opt;
    opt.out_dir = a.string();
    CHECK(run_command("summary", cfg, opt) == 0);
    opt.out_dir = b.string();
    CHECK(run_command("summary", cfg, opt) == 0);
    CHECK(slurp(a / "summary.json") == slurp(b / "summary.json"));
    const json s = json::parse(slurp(a / "summary.json"));
    for (const char* key : {"H_gamma", "V", "E", "phase_slope"}) {
        CAPTURE(key);
        CHECK(s[key]["label"] == "cutoff_regulated");
        CHECK(s[key]["cutoffs"]["k_max"].get<double>() == cfg.grid.k_max);
    }
    CHECK(s["N"].get<double>() == doctest::Approx(1.987e17).epsilon(5e-3));
    const json m = json::parse(slurp(a / "summary.manifest.json"));
    CHECK(m["outputs"] == json::array({"summary.json"}));
    CHECK(m["constants"]["hbar"].get<double>() == PhysicalConstants::hbar);
    CHECK(m["config"] == cfg.echo);
    CHECK(m.contains("wall_clock_s"));
}

TEST_CASE("photon-density and amplitude CSV layout") {
    RunConfig cfg = parse_config({{"source", {{"type", "circular_loop"}, {"current", 1.0}, {"radius", 0.1}}},
                                  {"grid", {{"n_k", 8}, {"n_theta", 4}, {"n_phi", 4}}}});
    const fs::path dir = scratch("csv");
    CommandOptions opt;
    opt.out_dir = dir.string();
    run_command("photon-density", cfg, opt);
    run_command("amplitude", cfg, opt);
    std::ifstream in(dir / "photon_density.csv");
    std::string units, header;
    std::getline(in, units);
    std::getline(in, header);
    CHECK(units.rfind("# units:", 0) == 0);
    CHECK(header == "k,cos_theta,phi,n");
    std::size_t rows = 0;
    for (std::string line; std::getline(in, line);) ++rows;
    CHECK(rows == 8 * 4 * 4);
    const std::string amp = slurp(dir / "amplitude.csv");
    CHECK(amp.find("k,cos_theta,phi,weight,re_x,im_x,re_y,im_y,re_z,im_z") != std::string::npos);
    CHECK(fs::exists(dir / "amplitude.manifest.json"));
}

TEST_CASE("field-map with oracle columns") {
    RunConfig cfg = load_config(test_util::config_path("loop_field.json"));
    cfg.probes = {Vec3::Zero(), Vec3(0.1, 0.0, 0.0)};  // the second one sits on the wire
    const fs::path dir = scratch("field");
    CommandOptions opt;
    opt.out_dir = dir.string();
    opt.oracle = true;
    CHECK(run_command("field-map", cfg, opt) == 0);
    std::ifstream in(dir / "field_map.csv");
    std::string line;
    std::getline(in, line);
    std::getline(in, line);
    CHECK(line.find("oracle_B_z,B_rel_dev") != std::string::npos);
    std::getline(in, line);
    const double dev = std::stod(line.substr(line.rfind(',') + 1));
    CHECK(dev < 1e-2);
    std::getline(in, line);
    CHECK(line.find("nan") != std::string::npos);

    cfg.probes.clear();
    CHECK_THROWS_AS(run_command("field-map", cfg, opt), ValidationError);
}

TEST_CASE("validate reports failures through the exit code") {
    RunConfig cfg = load_config(test_util::config_path("loop_static.json"));
    const fs::path dir = scratch("validate");
    CommandOptions opt;
    opt.out_dir = dir.string();
    CHECK(run_command("validate", cfg, opt) == 0);
    cfg.tolerances["photon_number"] = 1e-6;  // the default grid is not that accurate
    CHECK(run_command("validate", cfg, opt) == 1);
    const json report = json::parse(slurp(dir / "validate.json"));
    CHECK(report["passed"] == false);
    const json manifest = json::parse(slurp(dir / "validate.manifest.json"));
    CHECK(manifest["checks"].size() == report["checks"].size());
}

TEST_CASE("error JSON") {
    const json v = json::parse(error_json(ValidationError({"a: bad", "b: worse"})));
    CHECK(v["error"] == "validation");
    CHECK(v["violations"].size() == 2);
    const json n = json::parse(error_json(NonFiniteError(42, "nan")));
    CHECK(n["node"] == 42);
    CHECK(json::parse(error_json(std::runtime_error("x")))["error"] == "internal");
    CHECK_THROWS_AS(run_command("nope", parse_config(minimal()), CommandOptions{}), ValidationError);
    CHECK(format_double(0.1) == "0.10000000000000001");
}

}
