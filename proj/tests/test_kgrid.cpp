#include <cmath>

#include "doctest.h"
#include "photon_ledger/constants.hpp"
#include "photon_ledger/errors.hpp"
#include "photon_ledger/kgrid.hpp"
#include "photon_ledger/special_functions.hpp"
#include "test_util.hpp"

using namespace photon_ledger;
using test_util::rel_err;

namespace {

KGridSpec spec(double kmin, double kmax, std::size_t nk, std::size_t nt, std::size_t np, RadialMap map) {
    KGridSpec s;
    s.k_min = kmin;
    s.k_max = kmax;
    s.n_k = nk;
    s.n_theta = nt;
    s.n_phi = np;
    s.radial_map = map;
    return s;
}

}  // namespace

TEST_SUITE("kgrid") {

TEST_CASE("node count and layout") {
    const KGrid g(spec(1e-3, 10.0, 64, 32, 1, RadialMap::linear));
    CHECK(g.size() == 64 * 32);
    CHECK(g.is_meridian());
    const KNode n = g.node(g.index(5, 7, 0));
    CHECK(n.i_k == 5);
    CHECK(n.i_theta == 7);
    CHECK(n.phi == 0.0);
    CHECK(n.k == g.radial_nodes()[5]);
    for (std::size_t i = 0; i < g.size(); ++i) REQUIRE(g.node(i).weight > 0.0);
}

TEST_CASE("shell volume is reproduced") {
    for (RadialMap map : {RadialMap::linear, RadialMap::log}) {
        for (std::size_t np : {1u, 4u, 16u}) {
            const double kmin = 1e-3, kmax = 10.0;
            const KGrid g(spec(kmin, kmax, 64, 32, np, map));
            const auto r = integrate([](const KNode&) { return 1.0; }, g);
            const double exact = 4.0 / 3.0 * kPi * (kmax * kmax * kmax - kmin * kmin * kmin);
            CAPTURE(np);
            CHECK(rel_err(r.value, exact) < 1e-10);
            CHECK(r.estimated_error >= 0.0);
            CHECK(r.nodes == g.size());
            CHECK(r.cutoffs.k_min == kmin);
            CHECK(r.cutoffs.k_max == kmax);
        }
    }
}

TEST_CASE("odd integrands vanish") {
    const KGrid g(spec(1e-3, 10.0, 64, 32, 16, RadialMap::log));
    const auto z = integrate([](const KNode& n) { return n.direction().z(); }, g);
    CHECK(std::abs(z.value) <= 1e-12);
    const auto v = integrate([](const KNode& n) { return Vec3(n.direction()); }, g);
    CHECK(v.value.norm() <= 1e-12);
}

TEST_CASE("radial integral of J1^2(k)/k") {
    // int_a^b J1(k)^2 / k dk = G(b) - G(a), G(x) = -(J0(x)^2 + J1(x)^2) / 2
    const KGrid g(spec(1e-3, 50.0, 1024, 4, 1, RadialMap::log));
    double sum = 0.0;
    for (std::size_t i = 0; i < g.n_k(); ++i) {
        const double k = g.radial_nodes()[i];
        const double j = bessel_j1(k);
        sum += g.radial_weights()[i] * j * j / k;
    }
    auto G = [](double x) { return -0.5 * (bessel_j0(x) * bessel_j0(x) + bessel_j1(x) * bessel_j1(x)); };
    CHECK(std::abs(sum - (G(50.0) - G(1e-3))) < 1e-12);
    // J0^2 + J1^2 ~ 2 / (pi x) for large x
    CHECK(std::abs(sum - (0.5 - 1.0 / (kPi * 50.0))) < 1e-4);
}

TEST_CASE("reduction is bit-identical across thread counts") {
    const KGrid g(spec(1e-2, 50.0, 96, 48, 12, RadialMap::log));
    auto f = [](const KNode& n) { return CVec3(std::polar(1.0, n.k * n.cos_theta) * Vec3(n.direction()).cast<cplx>()); };
    const int saved = thread_count();
    set_thread_count(1);
    const auto ref = integrate(f, g);
    for (int t : {2, 3, 8}) {
        set_thread_count(t);
        const auto r = integrate(f, g);
        CHECK(r.value == ref.value);
        CHECK(r.estimated_error == ref.estimated_error);
    }
    set_thread_count(saved);
}

TEST_CASE("widening the cutoffs never decreases a nonnegative integral") {
    auto f = [](const KNode& n) { return std::exp(-n.k) * n.sin_theta * n.sin_theta; };
    double last = 0.0;
    for (double kmax : {1.0, 2.0, 5.0, 10.0, 40.0}) {
        const double v = integrate(f, KGrid(spec(1e-2, kmax, 128, 16, 4, RadialMap::log))).value;
        CHECK(v >= last);
        last = v;
    }
}

TEST_CASE("integrate_refined folds the refinement difference into the error") {
    auto f = [](const KNode& n) { return std::exp(-n.k * n.k); };
    const auto r = integrate_refined(f, spec(1e-3, 6.0, 16, 8, 4, RadialMap::linear));
    CHECK(r.grid.n_k == 32);
    CHECK(rel_err(r.value, std::pow(kPi, 1.5)) < 1e-6);
    CHECK(r.estimated_error >= 0.0);
}

TEST_CASE("non-finite integrand reports the node") {
    const KGrid g(spec(1e-3, 10.0, 16, 8, 4, RadialMap::linear));
    const std::size_t bad = 77;
    try {
        integrate([&](const KNode& n) { return n.index == bad ? std::nan("") : 1.0; }, g);
        FAIL("expected NonFiniteError");
    } catch (const NonFiniteError& e) {
        CHECK(e.node() == bad);
        CHECK(e.kind() == "non_finite");
    }
}

TEST_CASE("invalid specs list every violation") {
    KGridSpec s = spec(-1.0, 0.5, 4, 2, 2, RadialMap::log);
    try {
        build_kgrid(s);
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(e.violations().size() >= 4);
    }
    CHECK_THROWS_AS(build_kgrid(spec(2.0, 1.0, 16, 8, 4, RadialMap::log)), ValidationError);
    CHECK(radial_map_from_string("log") == RadialMap::log);
    CHECK(to_string(RadialMap::linear) == "linear");
}

}
