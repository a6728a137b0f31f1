#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "paulilab/checks.hpp"
#include "paulilab/errors.hpp"
#include "paulilab/special.hpp"
#include "paulilab/weyl.hpp"

using namespace paulilab;
using cd = std::complex<double>;

namespace {
const QuadratureRule kQuad = QuadratureRule::gauss_legendre(8);
}

TEST_CASE("smooth cutoff profile") {
    CHECK(smooth_cutoff(0.0).value == 1.0);
    CHECK(smooth_cutoff(1.0).value == 1.0);
    CHECK(smooth_cutoff(2.0).value == 0.0);
    CHECK(smooth_cutoff(2.7).value == 0.0);
    CHECK(smooth_cutoff(1.5).value == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(smooth_cutoff(1.5).d1 == doctest::Approx(-15.0 / 8.0).epsilon(1e-14));
    CHECK(smooth_cutoff(1.5).d2 == doctest::Approx(0.0).epsilon(1e-14));
    // even in u
    CHECK(smooth_cutoff(-1.3).value == doctest::Approx(smooth_cutoff(1.3).value));
    CHECK(smooth_cutoff(-1.3).d1 == doctest::Approx(-smooth_cutoff(1.3).d1));
    // C^2 joins at |u| = 1 and 2
    for (const double u0 : {1.0, 2.0}) {
        const double h = 1e-6;
        CHECK(smooth_cutoff(u0 + h).value ==
              doctest::Approx(smooth_cutoff(u0 - h).value).epsilon(1e-5));
        CHECK(smooth_cutoff(u0 + h).d1 ==
              doctest::Approx(smooth_cutoff(u0 - h).d1).epsilon(1e-4));
    }
    // derivatives are consistent with finite differences inside (1, 2)
    for (const double u : {1.1, 1.5, 1.9}) {
        const double h = 1e-6;
        const double d1 =
            (smooth_cutoff(u + h).value - smooth_cutoff(u - h).value) / (2.0 * h);
        CHECK(smooth_cutoff(u).d1 == doctest::Approx(d1).epsilon(1e-7));
        const double d2 =
            (smooth_cutoff(u + h).d1 - smooth_cutoff(u - h).d1) / (2.0 * h);
        CHECK(smooth_cutoff(u).d2 == doctest::Approx(d2).epsilon(1e-6));
    }
}

TEST_CASE("landau packet against the direct complex formula") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> U(-4.0, 4.0);
    for (int k = 0; k <= 5; ++k) {
        const double B = (k % 2 == 0) ? 1.0 : 2.5;
        const Vec2 xn{1.5, -0.5};
        const double logN = log_landau_norm_sq(k, B);
        for (int trial = 0; trial < 20; ++trial) {
            const Vec2 x{xn.x + U(rng), xn.y + U(rng)};
            const cd w(x.x - xn.x, x.y - xn.y);
            const cd direct = std::pow(cd(0.0, B), k) * std::pow(std::conj(w), k) *
                              std::exp(-0.25 * B * std::norm(w)) *
                              std::exp(-0.5 * logN);
            const PsiSample s = landau_psi(k, B, xn, x);
            CHECK(std::abs(s.value - direct) <=
                  1e-10 * std::max(1e-30, std::abs(direct)));
        }
    }
}

TEST_CASE("covariant gradient of the packet") {
    // k = 0: (-i grad - A) psi has components of magnitude (B/2)|w| |psi|
    const double B = 1.3;
    const Vec2 xn{0.0, 0.0};
    const PsiSample s = landau_psi(0, B, xn, {0.8, -0.3});
    const double r = std::hypot(0.8, -0.3);
    CHECK(std::abs(s.cg1) ==
          doctest::Approx(0.5 * B * r * std::abs(s.value)).epsilon(1e-12));
    CHECK(std::abs(s.cg2) ==
          doctest::Approx(0.5 * B * r * std::abs(s.value)).epsilon(1e-12));
    // finite-difference cross-check for k = 3
    const int k = 3;
    const Vec2 x{1.1, 0.7};
    const PsiSample g = landau_psi(k, B, xn, x);
    const double h = 1e-5;
    const cd dx = (landau_psi(k, B, xn, {x.x + h, x.y}).value -
                   landau_psi(k, B, xn, {x.x - h, x.y}).value) /
                  (2.0 * h);
    const cd dy = (landau_psi(k, B, xn, {x.x, x.y + h}).value -
                   landau_psi(k, B, xn, {x.x, x.y - h}).value) /
                  (2.0 * h);
    const cd cg1 = cd(0.0, -1.0) * dx - (-0.5 * B * x.y) * g.value;
    const cd cg2 = cd(0.0, -1.0) * dy - (0.5 * B * x.x) * g.value;
    CHECK(std::abs(g.cg1 - cg1) < 1e-8);
    CHECK(std::abs(g.cg2 - cg2) < 1e-8);
    CHECK_THROWS_AS(landau_psi(-1, 1.0, xn, x), std::domain_error);
    CHECK_THROWS_AS(landau_psi(0, 0.0, xn, x), std::domain_error);
}

TEST_CASE("packet mass inside a disk follows the incomplete gamma law") {
    // int_{|w| <= rho} |psi_k|^2 = 1 - Q(k+1, B rho^2 / 2)
    const QuadratureRule r = QuadratureRule::gauss_legendre(8, 64);
    for (const int k : {0, 2, 6}) {
        const double B = 1.0;
        const Vec2 xn{3.0, 1.0};
        for (const double rho : {1.0, 3.0, 6.0}) {
            const double got = integrate_annulus(
                [&](Vec2 x) {
                    const cd v = landau_psi(k, B, xn, x).value;
                    return std::norm(v);
                },
                xn, 0.0, rho, r, 128);
            CHECK(got ==
                  doctest::Approx(1.0 - gamma_q(k + 1.0, 0.5 * B * rho * rho))
                      .epsilon(1e-8));
        }
    }
}

TEST_CASE("theorem 3 center search") {
    // 2 n b0 r^t... constant field: 2n - r = 0
    const Vec2 c1 = find_center_thm3({1.0, 0.0}, {-1.0, 1.0}, 3, 0.0, {1.0, 0.0});
    CHECK(norm(c1) == doctest::Approx(6.0).epsilon(1e-11));
    // corollary-c instance: r = (2n)^5 for n = 2
    const Vec2 c2 = find_center_thm3({1.0, 1.0}, {-1.0, 1.2}, 2, 0.0, {0.0, -1.0});
    CHECK(norm(c2) == doctest::Approx(1024.0).epsilon(1e-10));
    CHECK(c2.x == doctest::Approx(0.0));
    CHECK(c2.y == doctest::Approx(-1024.0).epsilon(1e-10));
    // t < s: the root exists but stays near the origin (4r = r^{1/2})
    const Vec2 c3 = find_center_thm3({1.0, 1.0}, {-1.0, 0.5}, 2, 0.0, {1.0, 0.0});
    CHECK(norm(c3) == doctest::Approx(0.0625).epsilon(1e-10));
    // no sign change at all when V is absent and E sits below every level
    CHECK_THROWS_AS(find_center_thm3({1.0, 0.0}, {0.0, 0.0}, 2, 1.0, {1.0, 0.0}),
                    regime_error);
    CHECK_THROWS_AS(find_center_thm3({1.0, 0.0}, {-1.0, 1.0}, 1, 0.0, {0.0, 0.0}),
                    std::domain_error);
}

TEST_CASE("theorem 3 packet parameters") {
    const PowerLawField f{1.0, 1.0};
    const PowerLawPotential p{-1.0, 1.2};
    const WeylPacket3 P = make_packet_thm3(f, p, 4, 0.05, 0.0, {1.0, 0.0});
    const double rc = norm(P.x_n);
    CHECK(P.k_n == 4);
    CHECK(P.B_n == doctest::Approx(rc).epsilon(1e-12));
    CHECK(P.V_n == doctest::Approx(-std::pow(rc, 1.2)).epsilon(1e-12));
    CHECK(P.r_n ==
          doctest::Approx(std::sqrt(2.0 * std::pow(4.0, 1.05) / P.B_n)).epsilon(1e-12));
    CHECK_THROWS_AS(make_packet_thm3(f, p, 4, 0.0, 0.0, {1.0, 0.0}), std::domain_error);
}

TEST_CASE("theorem 2 packet requires the resonance") {
    const PowerLawField f{1.0, 1.0};
    CHECK_THROWS_AS(make_packet_thm2(f, {-1.9, 1.0}, 1, 0.9, 3, {1.0, 0.0}),
                    regime_error);
    CHECK_THROWS_AS(make_packet_thm2(f, {-2.0, 0.9}, 1, 0.9, 3, {1.0, 0.0}),
                    regime_error);
    const WeylPacket3 P = make_packet_thm2(f, {-2.0, 1.0}, 1, 0.9, 5, {1.0, 0.0});
    CHECK(norm(P.x_n) == doctest::Approx(32.0).epsilon(1e-13));
    CHECK(P.B_n == doctest::Approx(32.0).epsilon(1e-13));
    CHECK(P.r_n == doctest::Approx(std::pow(32.0, -(2.0 - 0.9) / 4.0)).epsilon(1e-13));
}

TEST_CASE("consecutive theorem 3 packets have disjoint supports") {
    const PowerLawField f{1.0, 1.0};
    const PowerLawPotential p{-1.0, 1.2};
    WeylPacket3 prev = make_packet_thm3(f, p, 5, 0.05, 0.0, {1.0, 0.0});
    for (int n = 6; n <= 12; ++n) {
        const WeylPacket3 cur = make_packet_thm3(f, p, n, 0.05, 0.0, {1.0, 0.0});
        CHECK(norm(cur.x_n) - norm(prev.x_n) > 2.0 * (cur.r_n + prev.r_n));
        prev = cur;
    }
}

TEST_CASE("residual terms vanish as designed in the resonant constant field") {
    // s = 0, t = 0: V + 2kB = 0 identically, gauge terms vanish, only the
    // cutoff localization term survives
    const PowerLawField f{1.0, 0.0};
    const PowerLawPotential p{-2.0, 0.0};
    const ResidualBreakdown r = residual_thm2(f, p, 1, 0.9, 4, {1.0, 0.0}, kQuad);
    CHECK(r.term("a") < 1e-12);
    CHECK(r.term("c") < 1e-14);
    CHECK(r.term("d") < 1e-14);
    CHECK(r.term("e") < 1e-14);
    CHECK(r.term("f") < 1e-14);
    CHECK(r.total_norm == doctest::Approx(r.term("b")).epsilon(1e-10));
    // r_n = 1 here, so the cutoff clips real packet mass
    CHECK(r.packet_norm > 0.4);
    CHECK(r.packet_norm < 1.0);
    CHECK_THROWS_AS(r.term("nope"), std::invalid_argument);
}

TEST_CASE("residual norms obey the triangle inequality") {
    const PowerLawField f{1.0, 1.0};
    const PowerLawPotential p{-1.0, 1.2};
    const WeylPacket3 P = make_packet_thm3(f, p, 3, 0.05, 0.0, {1.0, 0.0});
    const ResidualBreakdown r = residual_thm3(f, p, P, kQuad);
    double sum = 0.0;
    for (const auto& [name, v] : r.term_norms)
        sum += v;
    CHECK(r.total_norm <= sum * (1.0 + 1e-12));
    CHECK(r.packet_norm > 0.8);
    CHECK(r.packet_norm < 1.0 + 1e-9);
}

TEST_CASE("theorem 3 residual regression values") {
    const PowerLawField f{1.0, 1.0};
    const PowerLawPotential p{-1.0, 1.2};
    const WeylPacket3 P = make_packet_thm3(f, p, 3, 0.05, 0.0, {1.0, 0.0});
    CHECK(residual_thm3(f, p, P, kQuad).ratio == doctest::Approx(5747.02).epsilon(1e-4));
    const ResidualBreakdown r2 =
        residual_thm2({1.0, 1.0}, {-2.0, 1.0}, 1, 0.9, 6, {1.0, 0.0}, kQuad);
    CHECK(r2.ratio == doctest::Approx(19.1875).epsilon(1e-4));
}

TEST_CASE("theorem 4 center search and packet") {
    // t = 1, v0 = -1, B0 = 1, E = 0: -r + 2n + 1/4 = 0
    const WeylPacket4 P = find_center_thm4({-1.0, 1.0}, 2, 1.0, 0.0, 0.5);
    CHECK(P.y_n.x == doctest::Approx(4.25).epsilon(1e-12));
    CHECK(P.E_n == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(P.xi_n == doctest::Approx(4.75).epsilon(1e-12));
    CHECK(P.V_n == doctest::Approx(-4.25).epsilon(1e-12));
    CHECK(P.r_n == doctest::Approx(std::pow(2.0, 0.75)).epsilon(1e-12));
    CHECK_THROWS_AS(find_center_thm4({-1.0, 0.0}, 2, 1.0, 0.0, 0.5), regime_error);
    CHECK_THROWS_AS(find_center_thm4({-1.0, 1.0}, 0, 1.0, 0.0, 0.5), std::domain_error);
}

TEST_CASE("shifted oscillator function") {
    const double B0 = 1.0, xi = 4.75, Eg = 1.0;
    const double c = (xi - Eg / 2.0) / B0; // 4.25
    // peak magnitude at x1 = c equals B0^{1/4} phi_n(0); x2 only rotates phase
    const cd v0 = shifted_oscillator_psi(B0, Eg, 0, xi, {c, 0.0});
    CHECK(std::abs(v0) == doctest::Approx(hermite_phi(0, 0.0)).epsilon(1e-13));
    const cd v1 = shifted_oscillator_psi(B0, Eg, 0, xi, {c, 0.7});
    CHECK(std::abs(v1) == doctest::Approx(std::abs(v0)).epsilon(1e-13));
    CHECK(std::abs(v1 - v0 * std::exp(cd(0.0, xi * 0.7))) < 1e-13);
    // ladder identities, Richardson-extrapolated finite differences
    CHECK(checks::fd_annihilation_error(B0, Eg, 3, xi) < 1e-6);
    CHECK(checks::fd_creation_error(B0, Eg, 3, xi) < 1e-6);
}

TEST_CASE("hermite packet value") {
    const WeylPacket4 P = find_center_thm4({-1.0, 0.5}, 10, 1.0, 0.0, 0.1);
    const Spinor inside = hermite_packet_value(P, {P.y_n.x, 0.0});
    CHECK(inside.down == cd(0.0));
    CHECK(std::abs(inside.up) ==
          doctest::Approx(std::abs(hermite_phi(10, 0.0))).epsilon(1e-12));
    const Spinor outside = hermite_packet_value(P, {P.y_n.x + 2.5 * P.r_n, 0.0});
    CHECK(std::abs(outside.up) == 0.0);
}

TEST_CASE("theorem 4 residual regression value") {
    const WeylPacket4 P = find_center_thm4({-1.0, 0.5}, 10, 1.0, 0.0, 0.1);
    const ResidualBreakdown r = residual_thm4({-1.0, 0.5}, P, kQuad);
    CHECK(r.ratio == doctest::Approx(1.88182).epsilon(1e-4));
    CHECK(r.term("Trem") < r.total_norm);
    CHECK(r.packet_norm > 0.9);
}
