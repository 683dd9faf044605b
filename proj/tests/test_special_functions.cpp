#include <cmath>
#include <vector>

#include "doctest.h"
#include "photon_ledger/constants.hpp"
#include "photon_ledger/special_functions.hpp"
#include "test_util.hpp"

using namespace photon_ledger;
using test_util::rel_err;

// Reference values below were generated with 30-digit mpmath.

TEST_SUITE("special_functions") {

TEST_CASE("J1 against high-precision references") {
    struct Ref {
        double x, j1;
    };
    const std::vector<Ref> refs = {
        {1.8412, 0.5818652242276430762},    {2.0, 0.5767248077568733872},
        {0.5, 0.24226845767487388638},      {7.5, 0.13524842757970550518},
        {12.3, -0.19425884804059148265},    {25.0, -0.12535024958028990465},
        {60.0, 0.046598383758166317869},    {137.7, -0.065743802439239038066},
        {999.0, -0.018309728474911621958},
    };
    for (const auto& r : refs) {
        CAPTURE(r.x);
        CHECK(rel_err(bessel_j1(r.x), r.j1) < 1e-10);
    }
    CHECK(bessel_j1(0.0) == 0.0);
    CHECK(bessel_j1(-2.0) == -bessel_j1(2.0));
}

TEST_CASE("J0 and J2 against references in every evaluation regime") {
    struct Ref {
        double x, j0, j2;
    };
    const std::vector<Ref> refs = {
        {0.3, 0.97762624653829608757, 0.01116586194906396404},
        {9.0, -0.090333611182876134336, 0.14484734153250397263},
        {33.0, 0.097270672235509462797, -0.091172511683078099446},
        {250.0, -0.026053373425204233664, 0.025707221117921587668},
    };
    for (const auto& r : refs) {
        CAPTURE(r.x);
        CHECK(rel_err(bessel_j0(r.x), r.j0) < 1e-10);
        CHECK(rel_err(bessel_j2(r.x), r.j2) < 1e-10);
        CHECK(bessel_jn(0, r.x) == bessel_j0(r.x));
    }
    CHECK(bessel_j0(0.0) == 1.0);
}

TEST_CASE("recurrence J0 + J2 = 2 J1 / x on [0.1, 100]") {
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double x = 0.1 + (100.0 - 0.1) * i / 999.0;
        worst = std::max(worst, std::abs(bessel_j0(x) + bessel_j2(x) - 2.0 * bessel_j1(x) / x));
    }
    CHECK(worst <= 1e-9);
}

TEST_CASE("J1 is continuous across the regime switchovers") {
    for (double x0 : {8.0, 25.0}) {
        const double below = std::nextafter(x0, 0.0);
        CHECK(std::abs(bessel_j1(below) - bessel_j1(x0)) < 1e-13);
        CHECK(std::abs(bessel_j0(below) - bessel_j0(x0)) < 1e-13);
    }
}

TEST_CASE("Faddeeva function") {
    struct Ref {
        cplx z, w;
    };
    const std::vector<Ref> refs = {
        {{0.5, 0.3}, {0.6148515391469910214, 0.30312434964735105675}},
        {{-3.0, 0.01}, {0.00090883070674158049755, -0.20114646254019640387}},
        {{10.0, 2.0}, {0.011001556705733515587, 0.054471817098656514776}},
        {{0.0, 5.0}, {0.11070463773306862637, 0.0}},
        {{0.001, 0.0}, {0.99999900000049999983, 0.0011283784148430354347}},
        {{25.0, 0.5}, {0.00045225734443087918752, 0.022576613940763919367}},
    };
    for (const auto& r : refs) {
        CAPTURE(r.z);
        CHECK(rel_err(faddeeva_w(r.z), r.w) < 1e-12);
    }
    // w(-conj z) = conj w(z)
    const cplx z(1.3, 0.7);
    CHECK(std::abs(faddeeva_w(-std::conj(z)) - std::conj(faddeeva_w(z))) < 1e-15);
    // lower half plane through w(z) = 2 exp(-z^2) - w(-z)
    const cplx zl(0.4, -0.6);
    CHECK(rel_err(faddeeva_w(zl), 2.0 * std::exp(-zl * zl) - faddeeva_w(-zl)) < 1e-13);
}

TEST_CASE("Gauss-Legendre rule") {
    for (std::size_t n : {1u, 4u, 17u, 64u, 400u}) {
        const GaussLegendreRule rule = gauss_legendre(n);
        REQUIRE(rule.nodes.size() == n);
        double sum = 0.0;
        for (double w : rule.weights) {
            CHECK(w > 0.0);
            sum += w;
        }
        CHECK(std::abs(sum - 2.0) < 1e-13);
        CHECK(std::is_sorted(rule.nodes.begin(), rule.nodes.end()));
        // exact for x^(2n-2): integral 2 / (2n - 1)
        const int p = static_cast<int>(2 * n - 2);
        double moment = 0.0;
        for (std::size_t i = 0; i < n; ++i) moment += rule.weights[i] * std::pow(rule.nodes[i], p);
        CHECK(std::abs(moment - 2.0 / (p + 1)) < 1e-13);
    }
}

}
