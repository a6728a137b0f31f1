#include "paulilab/checks.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>

#include "paulilab/quadrature.hpp"
#include "paulilab/radial.hpp"
#include "paulilab/special.hpp"
#include "paulilab/weyl.hpp"

namespace paulilab::checks {

namespace {

using cd = std::complex<double>;
using Field2 = std::function<cd(Vec2)>;
using Gauge = std::function<Vec2(Vec2)>;

// Pi_j g = (-i d_j - A_j) g, central differences
cd pi_fd(const Field2& g, const Gauge& A, Vec2 x, int comp, double h) {
    const Vec2 e = comp == 0 ? Vec2{h, 0.0} : Vec2{0.0, h};
    const cd der = (g(x + e) - g(x - e)) / (2.0 * h);
    const double a = comp == 0 ? A(x).x : A(x).y;
    return cd(0.0, -1.0) * der - a * g(x);
}

Field2 d_fd(const Field2& g, const Gauge& A, double h) {
    return [=](Vec2 x) {
        return pi_fd(g, A, x, 0, h) + cd(0.0, 1.0) * pi_fd(g, A, x, 1, h);
    };
}

Field2 dstar_fd(const Field2& g, const Gauge& A, double h) {
    return [=](Vec2 x) {
        return pi_fd(g, A, x, 0, h) - cd(0.0, 1.0) * pi_fd(g, A, x, 1, h);
    };
}

Gauge symmetric_gauge(double B) {
    return [B](Vec2 x) { return Vec2{-0.5 * B * x.y, 0.5 * B * x.x}; };
}

Gauge rotational_gauge(const PowerLawField& f) {
    return [f](Vec2 x) {
        const double r = norm(x);
        if (r == 0.0)
            return Vec2{0.0, 0.0};
        const double ar = rotational_A(f, r) / r;
        return Vec2{-ar * x.y, ar * x.x};
    };
}

std::vector<Vec2> ring_samples(double radius, int count) {
    std::vector<Vec2> out;
    for (int i = 0; i < count; ++i) {
        const double th = 2.0 * 3.14159265358979323846 * (i + 0.37) / count;
        out.push_back({radius * std::cos(th), radius * std::sin(th)});
    }
    return out;
}

} // namespace

double fd_eigen_error(int k, double B, double h) {
    const Gauge A = symmetric_gauge(B);
    const Field2 psi = [=](Vec2 x) { return landau_psi(k, B, {0, 0}, x).value; };
    const Field2 op = dstar_fd(d_fd(psi, A, h), A, h);
    const double rpeak = std::sqrt((2.0 * k + 1.0) / B);
    double worst = 0.0;
    for (const Vec2 x : ring_samples(rpeak, 6)) {
        const cd p = psi(x);
        worst = std::max(worst, std::abs(op(x) - 2.0 * k * B * p) / std::abs(p));
    }
    return worst;
}

double fd_eigen_ratio(int k, double B, double h) {
    return fd_eigen_error(k, B, h) / fd_eigen_error(k, B, 0.5 * h);
}

double fd_commutator_error(const PowerLawField& f, double h) {
    const Gauge A = rotational_gauge(f);
    const Field2 g = [](Vec2 x) {
        const Vec2 c{0.9, -0.4};
        const Vec2 w = x - c;
        return cd(std::exp(-0.5 * dot(w, w)) * (1.0 + 0.3 * x.x), 0.1 * x.y);
    };
    const Field2 comm = [&](Vec2 x) {
        return d_fd(dstar_fd(g, A, h), A, h)(x) - dstar_fd(d_fd(g, A, h), A, h)(x);
    };
    double worst = 0.0;
    for (const Vec2 x : ring_samples(1.1, 8)) {
        const cd want = 2.0 * field_value(f, x) * g(x);
        worst = std::max(worst, std::abs(comm(x) - want));
    }
    return worst;
}

namespace {

// tilde d = -i d_1 + i(-i d_2 - B0 x1); tilde d^* flips the sign of the
// second piece
cd ladder_fd(const Field2& g, double B0, Vec2 x, double h, int sign) {
    const cd d1 = (g(x + Vec2{h, 0}) - g(x - Vec2{h, 0})) / (2.0 * h);
    const cd d2 = (g(x + Vec2{0, h}) - g(x - Vec2{0, h})) / (2.0 * h);
    const cd p2 = cd(0.0, -1.0) * d2 - B0 * x.x * g(x);
    return cd(0.0, -1.0) * d1 + cd(0.0, sign) * p2;
}

double ladder_error(double B0, double E_grad, int n, double xi, bool creation) {
    const int sign = creation ? -1 : +1; // tilde d carries +i(-i d_2 - B0 x1)
    const Field2 psi = [=](Vec2 x) {
        return shifted_oscillator_psi(B0, E_grad, n, xi, x);
    };
    const double tilt = E_grad / (2.0 * B0);
    const Field2 want = [=](Vec2 x) {
        if (creation)
            return cd(0.0, std::sqrt(2.0 * (n + 1) * B0)) *
                       shifted_oscillator_psi(B0, E_grad, n + 1, xi, x) -
                   cd(0.0, tilt) * shifted_oscillator_psi(B0, E_grad, n, xi, x);
        return cd(0.0, -std::sqrt(2.0 * n * B0)) *
                   (n > 0 ? shifted_oscillator_psi(B0, E_grad, n - 1, xi, x) : cd(0.0)) +
               cd(0.0, tilt) * shifted_oscillator_psi(B0, E_grad, n, xi, x);
    };
    const double c = (xi - tilt) / B0;
    const double scale = std::sqrt(2.0 * (n + 1) * B0) + std::fabs(tilt);
    const double h = 1e-2 / std::sqrt(B0);
    double worst = 0.0;
    for (const double u : {-1.0, -0.4, 0.0, 0.6, 1.2}) {
        const Vec2 x{c + u / std::sqrt(B0), 0.3};
        const cd fh = ladder_fd(psi, B0, x, h, sign);
        const cd fh2 = ladder_fd(psi, B0, x, 0.5 * h, sign);
        const cd extrap = (4.0 * fh2 - fh) / 3.0;
        worst = std::max(worst, std::abs(extrap - want(x)) / scale);
    }
    return worst;
}

} // namespace

double fd_annihilation_error(double B0, double E_grad, int n, double xi) {
    return ladder_error(B0, E_grad, n, xi, false);
}

double fd_creation_error(double B0, double E_grad, int n, double xi) {
    return ladder_error(B0, E_grad, n, xi, true);
}

double landau_norm_error(int k, double B) {
    // |psi_k|^2 = B^{2k} r^{2k} e^{-B r^2/2}; integrate the radial profile
    // and compare with 2^{k+1} pi B^{k-1} k! in the log domain
    const double rmax = std::sqrt((2.0 * k + 1.0) / B) + 15.0 / std::sqrt(B);
    const QuadratureRule rule = QuadratureRule::gauss_legendre(8, 128);
    const double integral = integrate_1d(
        [&](double r) {
            if (r <= 0.0)
                return 0.0;
            const double lg = 2.0 * k * std::log(B) + (2.0 * k + 1.0) * std::log(r) -
                              0.5 * B * r * r;
            return std::exp(lg);
        },
        0.0, rmax, rule);
    const double got = std::log(2.0 * 3.14159265358979323846 * integral);
    return std::fabs(std::expm1(got - log_landau_norm_sq(k, B)));
}

double hermite_orthonormality_error(int nmax) {
    const double L = std::sqrt(2.0 * nmax + 1.0) + 12.0;
    const QuadratureRule gl = QuadratureRule::gauss_legendre(8);
    const int panels = 160;
    const double h = 2.0 * L / panels;
    std::vector<std::vector<double>> gram(nmax + 1, std::vector<double>(nmax + 1, 0.0));
    std::vector<double> row(nmax + 1);
    for (int p = 0; p < panels; ++p) {
        const double mid = -L + (p + 0.5) * h;
        for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
            const double x = mid + 0.5 * h * gl.nodes[i];
            const double w = 0.5 * h * gl.weights[i];
            hermite_phi_row(nmax, x, row.data());
            for (int m = 0; m <= nmax; ++m)
                for (int n = m; n <= nmax; ++n)
                    gram[m][n] += w * row[m] * row[n];
        }
    }
    double worst = 0.0;
    for (int m = 0; m <= nmax; ++m)
        for (int n = m; n <= nmax; ++n)
            worst = std::max(worst, std::fabs(gram[m][n] - (m == n ? 1.0 : 0.0)));
    return worst;
}

double spin_pairing_error() {
    const PowerLawField f{1.0, 0.0};
    const PowerLawPotential p{0.0, 0.0};
    double worst = 0.0;
    for (int j = 0; j <= 3; ++j) {
        const ChannelSpec up{j, Spin::up, 16.0, 3200};
        const ChannelSpec down{j, Spin::down, 16.0, 3200};
        const auto su = channel_spectrum(f, p, up, -0.5, 7.0);
        const auto sd = channel_spectrum(f, p, down, -0.5, 7.0);
        for (std::size_t i = 0; i < sd.eigenvalues.size(); ++i) {
            if (!sd.trusted[i])
                continue;
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t m = 0; m < su.eigenvalues.size(); ++m)
                if (su.trusted[m])
                    best = std::min(best,
                                    std::fabs(su.eigenvalues[m] - sd.eigenvalues[i]));
            worst = std::max(worst, best);
        }
    }
    return worst;
}

std::vector<CheckResult> run_validation_suite(bool quick) {
    std::vector<CheckResult> out;
    auto add = [&](std::string id, double measured, double bound, std::string note = {}) {
        out.push_back({std::move(id), measured <= bound, measured, bound, std::move(note)});
    };
    auto add_range = [&](std::string id, double measured, double lo, double hi) {
        CheckResult c{std::move(id), measured >= lo && measured <= hi, measured, hi,
                      "expected in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]"};
        out.push_back(std::move(c));
    };

    add("commutator-const", fd_commutator_error({1.0, 0.0}, 1e-3), 1e-5,
        "(dd* - d*d)g vs 2Bg, B = 1");
    add("commutator-s1", fd_commutator_error({1.0, 1.0}, 1e-3), 1e-5,
        "(dd* - d*d)g vs 2Bg, B = r");
    add_range("commutator-order", fd_commutator_error({1.0, 1.0}, 2e-3) /
                                      fd_commutator_error({1.0, 1.0}, 1e-3),
              3.0, 5.0);

    for (const int k : quick ? std::vector<int>{0, 5} : std::vector<int>{0, 1, 5, 10, 30})
        for (const double B : {0.5, 1.0, 4.0})
            add("landau-norm-k" + std::to_string(k) + "-B" + std::to_string(B).substr(0, 3),
                landau_norm_error(k, B), 1e-8);

    for (const int k : {1, 3, 5})
        add_range("eigen-2kB-order-k" + std::to_string(k), fd_eigen_ratio(k, 1.0, 2e-3),
                  3.5, 4.5);

    add("hermite-ortho", hermite_orthonormality_error(quick ? 12 : 20), 1e-8);
    {
        const QuadratureRule gl = QuadratureRule::gauss_legendre(8, 64);
        bool mono = true;
        double prev = std::numeric_limits<double>::infinity();
        for (int n = 5; n <= (quick ? 25 : 60); ++n) {
            const double tl = hermite_tail_log(n, 0.5, gl);
            mono = mono && tl < prev;
            prev = tl;
        }
        out.push_back({"hermite-tail-mono", mono, mono ? 1.0 : 0.0, 1.0,
                       "log tail strictly decreasing, eps = 0.5"});
    }

    for (const int n : quick ? std::vector<int>{1, 4} : std::vector<int>{1, 4, 10}) {
        add("annihilation-n" + std::to_string(n),
            fd_annihilation_error(1.0, 0.25, n, 1.5), 1e-6);
        add("creation-n" + std::to_string(n), fd_creation_error(1.0, 0.25, n, 1.5), 1e-6);
    }

    add("spin-symmetry", spin_pairing_error(), 5e-3,
        "spin-down Landau levels matched by spin-up partners");
    return out;
}

} // namespace paulilab::checks
