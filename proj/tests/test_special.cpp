#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "paulilab/checks.hpp"
#include "paulilab/special.hpp"

using namespace paulilab;

namespace {
const QuadratureRule kRule = QuadratureRule::gauss_legendre(8, 64);
}

TEST_CASE("hermite function point values") {
    // phi_0(0) = pi^{-1/4}
    CHECK(hermite_phi(0, 0.0) == doctest::Approx(0.75112554446494248).epsilon(1e-14));
    CHECK(hermite_phi(1, 1.0) ==
          doctest::Approx(std::sqrt(2.0) * 0.75112554446494248 * std::exp(-0.5))
              .epsilon(1e-14));
    // frozen multiprecision references
    CHECK(hermite_phi(5, 1.3) == doctest::Approx(-0.39939146281375077).epsilon(1e-13));
    CHECK(hermite_phi(20, 8.5) == doctest::Approx(8.4602942086014099e-5).epsilon(1e-12));
    CHECK(hermite_phi(3, -0.7) == doctest::Approx(-hermite_phi(3, 0.7)).epsilon(1e-14));
}

TEST_CASE("log-domain evaluation deep in the forbidden region") {
    const LogValue lv = hermite_phi_log(60, 61.0);
    CHECK(lv.log_abs == doctest::Approx(-1687.8931555432820).epsilon(1e-12));
    CHECK(lv.sign == 1.0);
    // consistency with the plain value where both are representable
    const LogValue mid = hermite_phi_log(12, 3.1);
    CHECK(mid.sign * std::exp(mid.log_abs) ==
          doctest::Approx(hermite_phi(12, 3.1)).epsilon(1e-12));
    CHECK(hermite_phi_log(7, 0.0).sign == 0.0); // odd function at the origin
}

TEST_CASE("hermite_phi_row matches single evaluations") {
    double row[31];
    hermite_phi_row(30, 2.45, row);
    for (int n = 0; n <= 30; ++n)
        CHECK(row[n] == doctest::Approx(hermite_phi(n, 2.45)).epsilon(1e-13));
}

TEST_CASE("orthonormality") {
    CHECK(checks::hermite_orthonormality_error(20) < 1e-8);
}

TEST_CASE("tail integral closed forms") {
    // n = 1, eps = 1: int_1^inf phi_1^2 = erfc(1)/2 + e^{-1}/sqrt(pi)
    CHECK(hermite_tail(1, 1.0, kRule) ==
          doctest::Approx(0.28620335223543997).epsilon(1e-10));
    // frozen multiprecision reference
    CHECK(hermite_tail(40, 0.5, kRule) ==
          doctest::Approx(1.81075089258546e-53).epsilon(1e-8));
    CHECK(hermite_tail_log(40, 0.5, kRule) ==
          doctest::Approx(-121.44326831165436).epsilon(1e-10));
    CHECK(hermite_tail_log(60, 1.0, kRule) ==
          doctest::Approx(-3261.556765668927).epsilon(1e-9));
    // the plain value underflows long before the log form loses meaning
    CHECK(hermite_tail(60, 1.0, kRule) < 1e-12);
}

TEST_CASE("tail decreases strictly in n") {
    for (const double eps : {0.25, 0.5, 1.0}) {
        double prev = 1e30;
        for (int n = 5; n <= 60; ++n) {
            const double tl = hermite_tail_log(n, eps, kRule);
            CHECK(tl < prev);
            prev = tl;
        }
    }
}

TEST_CASE("landau norm closed form") {
    const double pi = 3.14159265358979323846;
    CHECK(log_landau_norm_sq(0, 1.0) == doctest::Approx(std::log(2.0 * pi)).epsilon(1e-14));
    CHECK(log_landau_norm_sq(1, 1.0) == doctest::Approx(std::log(4.0 * pi)).epsilon(1e-14));
    // 2^{k+1} pi B^{k-1} k! at k = 3, B = 2: 16 pi * 4 * 6
    CHECK(log_landau_norm_sq(3, 2.0) ==
          doctest::Approx(std::log(16.0 * pi * 4.0 * 6.0)).epsilon(1e-14));
    for (const int k : {0, 1, 5, 10, 30})
        for (const double B : {0.5, 1.0, 4.0})
            CHECK(checks::landau_norm_error(k, B) < 1e-8);
}

TEST_CASE("regularized incomplete gamma") {
    CHECK(gamma_q(1.0, 0.7) == doctest::Approx(std::exp(-0.7)).epsilon(1e-14));
    CHECK(gamma_q(3.0, 0.0) == doctest::Approx(1.0).epsilon(1e-14));
    // Q(2, x) = (1 + x) e^{-x}
    CHECK(gamma_q(2.0, 1.5) == doctest::Approx(2.5 * std::exp(-1.5)).epsilon(1e-14));
}
