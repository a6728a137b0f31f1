#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "paulilab/errors.hpp"
#include "paulilab/kernels.hpp"
#include "paulilab/special.hpp"
#include "paulilab/weyl.hpp"

namespace paulilab {

using cd = std::complex<double>;

WeylPacket4 find_center_thm4(const PowerLawPotential& p, int n, double B0, double E,
                             double eps) {
    validate(p);
    if (!(B0 > 0.0) || n < 1 || eps <= 0.0)
        throw std::domain_error("find_center_thm4: need B0 > 0, n >= 1, eps > 0");
    if (!(p.v0 < 0.0) || !(p.t > 0.0))
        throw regime_error("find_center_thm4: V must tend to -inf (v0 < 0, t > 0)");
    // (V(r) - E) + 2 n B0 + (|grad V|/(2 B0))^2 = 0 on the +x1 ray
    const auto fn = [&](double r) {
        const double g = std::fabs(p.v0) * p.t * std::pow(r, p.t - 1.0);
        return p.v0 * std::pow(r, p.t) - E + 2.0 * n * B0 +
               (g / (2.0 * B0)) * (g / (2.0 * B0));
    };
    double lo = 1e-6, hi = 1.0;
    const double flo = fn(lo);
    while (fn(hi) * flo > 0.0 && hi < 1e14)
        hi *= 2.0;
    if (fn(hi) * flo > 0.0)
        throw regime_error("find_center_thm4: center equation has no root on the ray");
    while (hi - lo > 1e-12 * hi) {
        const double mid = 0.5 * (lo + hi);
        if (fn(mid) * flo <= 0.0)
            hi = mid;
        else
            lo = mid;
    }
    const double rc = 0.5 * (lo + hi);
    WeylPacket4 P;
    P.n = n;
    P.y_n = {rc, 0.0};
    P.E_n = std::fabs(p.v0) * p.t * std::pow(rc, p.t - 1.0);
    P.V_n = p.v0 * std::pow(rc, p.t) - E;
    P.xi_n = B0 * rc + P.E_n / (2.0 * B0);
    P.r_n = std::sqrt(std::pow(static_cast<double>(n), 1.0 + eps) / B0);
    P.B0 = B0;
    P.E = E;
    P.eps = eps;
    return P;
}

cd shifted_oscillator_psi(double B0, double E_grad, int n, double xi, Vec2 x) {
    if (!(B0 > 0.0) || n < 0)
        throw std::domain_error("shifted_oscillator_psi: need B0 > 0, n >= 0");
    const double c = (xi - E_grad / (2.0 * B0)) / B0;
    const double amp = std::pow(B0, 0.25) * hermite_phi(n, std::sqrt(B0) * (x.x - c));
    return amp * cd(std::cos(xi * x.y), std::sin(xi * x.y));
}

Spinor hermite_packet_value(const WeylPacket4& p, Vec2 x) {
    const Cutoff c1 = smooth_cutoff((x.x - p.y_n.x) / p.r_n);
    const Cutoff c2 = smooth_cutoff(x.y / p.r_n);
    Spinor s;
    s.up = c1.value * c2.value *
           shifted_oscillator_psi(p.B0, p.E_n, p.n, p.xi_n, x);
    s.down = 0.0;
    return s;
}

namespace {

struct Axis {
    std::vector<double> x, w; // composite Gauss-Legendre nodes/weights
};

Axis gl_axis(double a, double b, int panels, const QuadratureRule& gl) {
    Axis ax;
    const double h = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        const double mid = a + (p + 0.5) * h;
        for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
            ax.x.push_back(mid + 0.5 * h * gl.nodes[i]);
            ax.w.push_back(0.5 * h * gl.weights[i]);
        }
    }
    return ax;
}

ResidualBreakdown eval_packet4(const PowerLawPotential& p, const WeylPacket4& P,
                               int panels1, int panels2, int pts) {
    const int n = P.n;
    const double B0 = P.B0, rn = P.r_n;
    const double rc = P.y_n.x;
    const double sB = std::sqrt(B0);
    const double amp = std::pow(B0, 0.25);
    const double vc = p.v0 * std::pow(rc, p.t);
    const double cp = std::sqrt(2.0 * (n + 1) * B0); // creation coefficient
    const double cm = std::sqrt(2.0 * n * B0);
    const double tilt = P.E_n / (2.0 * B0);

    const QuadratureRule gl = QuadratureRule::gauss_legendre(pts);
    const Axis a1 = gl_axis(rc - 2.0 * rn, rc + 2.0 * rn, panels1, gl);
    const Axis a2 = gl_axis(-2.0 * rn, 2.0 * rn, panels2, gl);
    const std::size_t n2 = a2.x.size();

    // x2-direction cutoff samples are shared across rows
    std::vector<double> C2(n2), D2(n2), DD2(n2);
    for (std::size_t j = 0; j < n2; ++j) {
        const Cutoff c = smooth_cutoff(a2.x[j] / rn);
        C2[j] = c.value;
        D2[j] = c.d1 / rn;
        DD2[j] = c.d2 / (rn * rn);
    }

    constexpr int kNTerms = 4; // T+, T-, T0, Trem
    double sq[kNTerms + 2] = {};
    std::vector<double> wrow(n2), re(n2), im(n2);
    std::vector<double> phi_row(n + 2);
    std::vector<cd> terms[kNTerms + 2];
    for (auto& t : terms)
        t.resize(n2);

    for (std::size_t i = 0; i < a1.x.size(); ++i) {
        const double x1 = a1.x[i];
        const double u = x1 - rc;
        const Cutoff c1 = smooth_cutoff(u / rn);
        const double C1 = c1.value;
        const double D1 = c1.d1 / rn;
        const double DD1 = c1.d2 / (rn * rn);
        hermite_phi_row(n + 1, sB * u, phi_row.data());
        const double pn = amp * phi_row[n];
        const double pnm = (n > 0) ? amp * phi_row[n - 1] : 0.0;
        const double pnp = amp * phi_row[n + 1];
        const cd dstar_psi = cd(0.0, cp) * pnp - cd(0.0, tilt) * pn;
        const cd d_psi = cd(0.0, -cm) * pnm + cd(0.0, tilt) * pn;

        for (std::size_t j = 0; j < n2; ++j) {
            wrow[j] = a1.w[i] * a2.w[j];
            const cd Tp = (cd(0.0, -C2[j] * D1) + C1 * D2[j]) * dstar_psi;
            const cd Tm = (cd(0.0, -C2[j] * D1) - C1 * D2[j]) * d_psi;
            const cd T0 = (-C2[j] * DD1 - C1 * DD2[j]) * pn;
            // |x| - rc without cancellation: u + x2^2/(|x| + x1)
            const double R2 = std::hypot(x1, a2.x[j]);
            const double delta = u + a2.x[j] * a2.x[j] / (R2 + x1);
            const double dV = vc * std::expm1(p.t * std::log1p(delta / rc));
            const cd Trem = (dV - P.E_n * u) * C1 * C2[j] * pn;
            terms[0][j] = Tp;
            terms[1][j] = Tm;
            terms[2][j] = T0;
            terms[3][j] = Trem;
            terms[4][j] = Tp + Tm + T0 + Trem;
            terms[5][j] = C1 * C2[j] * pn;
        }
        for (int q = 0; q < kNTerms + 2; ++q) {
            for (std::size_t j = 0; j < n2; ++j) {
                re[j] = terms[q][j].real();
                im[j] = terms[q][j].imag();
            }
            sq[q] += kern::weighted_sumsq(wrow.data(), re.data(), im.data(), n2);
        }
    }

    ResidualBreakdown out;
    static const char* names[kNTerms] = {"T+", "T-", "T0", "Trem"};
    for (int q = 0; q < kNTerms; ++q)
        out.term_norms.emplace_back(names[q], std::sqrt(sq[q]));
    out.total_norm = std::sqrt(sq[kNTerms]);
    out.packet_norm = std::sqrt(sq[kNTerms + 1]);
    out.ratio = out.total_norm / out.packet_norm;
    return out;
}

} // namespace

ResidualBreakdown residual_thm4(const PowerLawPotential& p, const WeylPacket4& packet,
                                const QuadratureRule& quad) {
    validate(p);
    if (packet.B0 <= 0.0 || packet.r_n <= 0.0 || packet.n < 1)
        throw std::domain_error("residual_thm4: invalid packet");
    const int pts = static_cast<int>(quad.nodes.size());
    const int base1 = std::max({64, 6 * packet.n, quad.panels});
    const int base2 = 48;
    ResidualBreakdown prev = eval_packet4(p, packet, base1, base2, pts);
    for (int lvl = 1; lvl <= 4; ++lvl) {
        ResidualBreakdown cur = eval_packet4(p, packet, base1 << lvl, base2 << lvl, pts);
        cur.refinements = lvl;
        if (std::fabs(cur.ratio - prev.ratio) <=
            1e-6 * std::max(std::fabs(cur.ratio), 1e-30))
            return cur;
        prev = cur;
    }
    throw convergence_error("residual_thm4: quadrature did not stabilize "
                            "(last ratio " + std::to_string(prev.ratio) + ")");
}

} // namespace paulilab
