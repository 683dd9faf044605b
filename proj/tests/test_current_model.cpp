#include <cmath>
#include <random>

#include "doctest.h"
#include "photon_ledger/constants.hpp"
#include "photon_ledger/current_model.hpp"
#include "photon_ledger/errors.hpp"
#include "photon_ledger/special_functions.hpp"
#include "test_util.hpp"

using namespace photon_ledger;
using test_util::rel_err;
using test_util::unit_loop;

namespace {

constexpr double kC = PhysicalConstants::c;

Vec3 random_vec(std::mt19937_64& rng, double scale) {
    std::normal_distribution<double> g;
    return scale * Vec3(g(rng), g(rng), g(rng));
}

// Plain composite Simpson on a fine uniform mesh, independent of the
// adaptive Gauss-Kronrod used by the library.
cplx simpson(const std::function<cplx(double)>& f, double a, double b, std::size_t n) {
    if (n % 2) ++n;
    const double h = (b - a) / static_cast<double>(n);
    cplx s = f(a) + f(b);
    for (std::size_t i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + h * static_cast<double>(i));
    return s * h / 3.0;
}

}  // namespace

TEST_SUITE("current_model") {

TEST_CASE("loop spectral current at the first J1 maximum") {
    const SpectralCurrent j = spectral_transform(unit_loop());
    const Vec3 k(18.412, 0.0, 0.0);  // theta = pi/2, kR sin(theta) = 1.8412
    const CVec3 v = j(k);
    CHECK(rel_err(v.norm(), 0.023213063943966688301) < 1e-12);
    // -i (I R / sqrt(2 pi)) J1 e_phi, e_phi = z x k^ = +y here
    CHECK(std::abs(v[1] - cplx(0.0, -0.023213063943966688301)) < 1e-14);
    CHECK(std::abs(v[0]) == 0.0);
    CHECK(std::abs(v[2]) == 0.0);
}

TEST_CASE("loop spectral current vanishes for k along the axis") {
    const SpectralCurrent j = spectral_transform(unit_loop());
    CHECK(j(Vec3(0, 0, 3.0)).norm() == 0.0);
    CHECK(j(Vec3(0, 0, -250.0)).norm() == 0.0);
}

TEST_CASE("dipole at the origin has a constant spectrum") {
    HertzianDipole d;
    d.moment = Vec3(0, 0, 1);
    const SpectralCurrent j = spectral_transform({d, StaticProfile{}});
    const double c = std::pow(2.0 * kPi, -1.5);
    for (const Vec3& k : {Vec3(1, 2, 3), Vec3(-40, 0.1, 7), Vec3(0, 0, 1e-3)}) {
        const CVec3 v = j(k);
        CHECK(std::abs(v[2] - cplx(c, 0.0)) < 1e-16);
        CHECK(std::abs(v[0]) == 0.0);
    }
}

TEST_CASE("transverse projector examples") {
    const double c = 2.5;
    CHECK(transverse_project(CVec3(0, 0, c), Vec3(0, 0, 1)).norm() == 0.0);
    CHECK((transverse_project(CVec3(c, 0, 0), Vec3(0, 0, 1)) - CVec3(c, 0, 0)).norm() == 0.0);
    CHECK((transverse_project(CVec3(1, 1, 0), Vec3(1, 0, 0)) - CVec3(0, 1, 0)).norm() < 1e-16);
    CHECK_THROWS_AS(transverse_project(CVec3(1, 0, 0), Vec3::Zero()), DomainError);
}

TEST_CASE("transverse projector annihilates k and is idempotent") {
    std::mt19937_64 rng(1);
    for (int i = 0; i < 1000; ++i) {
        const CVec3 j = random_vec(rng, 1.0).cast<cplx>() + cplx(0, 1) * random_vec(rng, 1.0).cast<cplx>();
        const Vec3 k = random_vec(rng, 10.0);
        const CVec3 p = transverse_project(j, k);
        REQUIRE(std::abs(k.normalized().cast<cplx>().dot(p)) <= 1e-14 * j.norm());
        REQUIRE((transverse_project(p, k) - p).norm() <= 1e-14 * j.norm());
    }
}

TEST_CASE("hermiticity j(-k) = conj j(k)") {
    CircularLoop tilted;
    tilted.current = -3.0;
    tilted.radius = 0.2;
    tilted.center = Vec3(0.05, -0.02, 0.1);
    tilted.axis = Vec3(0.3, 0.4, 1.0);
    tilted.core_radius = 0.01;
    HertzianDipole d;
    d.moment = Vec3(0.2, -1.0, 0.5);
    d.position = Vec3(0.1, 0.2, -0.3);
    const SampledCurrent s = sample_regularized_loop(1.0, 0.1, 24, 0.15);
    std::mt19937_64 rng(3);
    for (const CurrentSource& src : {CurrentSource{tilted, StaticProfile{}}, CurrentSource{d, StaticProfile{}},
                                     CurrentSource{s, StaticProfile{}}}) {
        const SpectralCurrent j = spectral_transform(src);
        for (int i = 0; i < 100; ++i) {
            Vec3 k = random_vec(rng, 30.0);
            if (k.norm() * s.spacing > 3.0) k *= 3.0 / (k.norm() * s.spacing);
            const CVec3 a = j(k), b = j(Vec3(-k));
            REQUIRE((b - a.conjugate()).norm() <= 1e-12 * a.norm());
        }
    }
}

TEST_CASE("loop spectral current is already transverse") {
    CircularLoop l;
    l.current = 2.0;
    l.radius = 0.3;
    l.axis = Vec3(1.0, -2.0, 0.5);
    l.center = Vec3(0.1, 0.0, 0.4);
    const SpectralCurrent j = spectral_transform({l, StaticProfile{}});
    std::mt19937_64 rng(5);
    for (int i = 0; i < 500; ++i) {
        const Vec3 k = random_vec(rng, 20.0);
        const CVec3 v = j(k);
        REQUIRE(std::abs(k.cast<cplx>().dot(v)) <= 1e-12 * k.norm() * v.norm());
    }
}

TEST_CASE("sampled regularized loop converges to the closed form") {
    const double R = 0.1;
    const SampledCurrent s = sample_regularized_loop(1.0, R, 128, 1.5 * R);
    const SpectralCurrent sampled = spectral_transform({s, StaticProfile{}});
    const SpectralCurrent exact = spectral_transform(unit_loop(1.0, R));
    for (double kR : {0.5, 1.0, 1.8412, 2.5, 3.0, 4.0}) {
        for (double theta : {0.4, 1.0, kPi / 2}) {
            const double k = kR / R;
            const Vec3 kv = k * Vec3(std::sin(theta) * std::cos(0.3), std::sin(theta) * std::sin(0.3), std::cos(theta));
            const CVec3 a = sampled(kv), b = exact(kv);
            CAPTURE(kR);
            CAPTURE(theta);
            CHECK((a - b).norm() <= 0.03 * b.norm());
        }
    }
}

TEST_CASE("sampled current rejects unresolvable k") {
    const SampledCurrent s = sample_regularized_loop(1.0, 0.1, 16, 0.15);
    const SpectralCurrent j = spectral_transform({s, StaticProfile{}});
    CHECK_NOTHROW(j(Vec3(0.9 * kPi / s.spacing, 0, 0)));
    CHECK_THROWS_AS(j(Vec3(1.1 * kPi / s.spacing, 0, 0)), ResolutionError);
}

TEST_CASE("source validation lists every violation") {
    CircularLoop bad;
    bad.current = 0.0;
    bad.radius = -1.0;
    const CurrentSource src{bad, GaussianPulse{0.0, -1.0}};
    CHECK(src.violations().size() == 3);
    CHECK_THROWS_AS(src.validate(), ValidationError);
    SampledCurrent tiny;
    tiny.nx = tiny.ny = tiny.nz = 1;
    tiny.spacing = 0.1;
    tiny.values.assign(1, Vec3::Zero());
    CHECK_FALSE(CurrentSource{tiny, StaticProfile{}}.violations().empty());
    CHECK(unit_loop().axisymmetric_about_z());
    CHECK_FALSE(CurrentSource{sample_regularized_loop(1.0, 0.1, 8, 0.15), StaticProfile{}}.axisymmetric_about_z());
}

TEST_CASE("static temporal spectrum") {
    const cplx v = temporal_spectrum(StaticProfile{}, 1.0, 0.0, 0.0);
    CHECK(rel_err(v, cplx(0.0, -1.0 / kC)) < 1e-15);
    const double eps = 0.3;
    const cplx w = cplx(kC * 2.0, -kC * eps);
    CHECK(rel_err(temporal_spectrum(StaticProfile{}, 2.0, 1e-9, eps), std::exp(cplx(0, 1) * w * 1e-9) / (cplx(0, 1) * w)) < 1e-14);
    CHECK_THROWS_AS(temporal_spectrum(StaticProfile{}, 0.0, 0.0, 0.0), DomainError);
    CHECK_THROWS_AS(temporal_spectrum(StaticProfile{}, 1.0, 0.0, -1.0), DomainError);
}

TEST_CASE("Gaussian partial integral against references") {
    // F(omega, t) = int_{-inf}^t exp(i omega t') exp(-t'^2 / 2) dt', sigma = 1, t0 = 0
    struct Ref {
        double omega, t;
        cplx value;
    };
    const std::vector<Ref> refs = {
        {0.7, 0.4, {1.3655957042350000464, -0.54265534617512440068}},
        {2.5, -1.0, {-0.22090996003223705312, 0.096133775898423855914}},
        {3.0, 2.0, {-0.0031328715579001102459, -0.022235159133594569401}},
        {0.2, -4.0, {5.263739690309434317e-5, -5.932972775777145118e-5}},
        {6.0, 1.0, {-0.045346548131697889873, -0.091875830063343236857}},
    };
    const GaussianPulse g{0.0, 1.0};
    for (const auto& r : refs) {
        CAPTURE(r.omega);
        CAPTURE(r.t);
        CHECK(rel_err(temporal_spectrum(g, r.omega / kC, r.t, 0.0), r.value) < 1e-11);
    }
}

TEST_CASE("Gaussian spectrum after the pulse is the complete transform") {
    const double sigma = 2e-9, t0 = 5e-9;
    const GaussianPulse g{t0, sigma};
    for (double k : {0.1, 0.5, 1.0, 2.0}) {
        const double w = kC * k;
        const cplx expect = sigma * std::sqrt(2.0 * kPi) * std::exp(cplx(-0.5 * w * w * sigma * sigma, w * t0));
        CHECK(rel_err(temporal_spectrum(g, k, t0 + 12.0 * sigma, 0.0), expect) < 1e-12);
    }
    // mid-pulse value against brute force
    const double k = 0.8;
    auto f = [&](double t) { return std::exp(cplx(0, kC * k * t)) * std::exp(-0.5 * std::pow((t - t0) / sigma, 2)); };
    const cplx brute = simpson(f, t0 - 12 * sigma, t0 + 0.3 * sigma, 200000);
    CHECK(rel_err(temporal_spectrum(g, k, t0 + 0.3 * sigma, 0.0), brute) < 1e-9);
}

TEST_CASE("truncated harmonic far off resonance matches brute force") {
    const double omega = 2.0 * kPi * 1e8;
    const TruncatedHarmonic h{omega, 0.0, 3e-9};
    const double k = 10.0 * omega / kC;
    const double t = 5e-8;
    auto f = [&](double tp) { return std::exp(cplx(0, kC * k * tp)) * profile_value(h, tp); };
    const cplx brute = simpson(f, h.window_start(), t, 4000000);
    const cplx v = temporal_spectrum(h, k, t, 0.0);
    CHECK(rel_err(v, brute) < 1e-7);
    CHECK(std::abs(v) <= 2.0 / (kC * k - omega) * 1.1);
    CHECK(temporal_spectrum(h, k, h.window_start() - 1e-9, 0.0) == cplx(0.0));
}

TEST_CASE("harmonic resonance without a regulator is rejected") {
    const double omega = 1e9;
    const TruncatedHarmonic h{omega, 0.0, 1e-9};
    CHECK_THROWS_AS(temporal_spectrum(h, omega / kC, 1e-8, 0.0), ResonanceError);
    CHECK_NOTHROW(temporal_spectrum(h, omega / kC, 1e-8, 1.0));
}

TEST_CASE("profile values") {
    CHECK(profile_value(StaticProfile{}, 123.0) == 1.0);
    CHECK(profile_value(GaussianPulse{1.0, 0.5}, 1.0) == 1.0);
    CHECK(std::abs(profile_value(TruncatedHarmonic{1.0, 0.0, 1e-3}, 2.0 * kPi) - 1.0) < 1e-12);
    CHECK(std::abs(profile_value(TruncatedHarmonic{1.0, 0.0, 1e-3}, -1.0)) < 1e-12);
    CHECK(profile_name(GaussianPulse{}) == "gaussian_pulse");
}

}
