#include "paulilab/weyl.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "paulilab/errors.hpp"
#include "paulilab/kernels.hpp"
#include "paulilab/special.hpp"

namespace paulilab {

using cd = std::complex<double>;

double ResidualBreakdown::term(const std::string& name) const {
    for (const auto& [n, v] : term_norms)
        if (n == name)
            return v;
    throw std::invalid_argument("ResidualBreakdown: no term named '" + name + "'");
}

Cutoff smooth_cutoff(double u) {
    const double a = std::fabs(u);
    if (a <= 1.0)
        return {1.0, 0.0, 0.0};
    if (a >= 2.0)
        return {0.0, 0.0, 0.0};
    const double w = a - 1.0;
    const double sgn = u < 0.0 ? -1.0 : 1.0;
    Cutoff c;
    c.value = 1.0 - (10.0 * w * w * w - 15.0 * w * w * w * w + 6.0 * w * w * w * w * w);
    c.d1 = -(30.0 * w * w - 60.0 * w * w * w + 30.0 * w * w * w * w) * sgn;
    c.d2 = -(60.0 * w - 180.0 * w * w + 120.0 * w * w * w);
    return c;
}

namespace {

// psi and its d / d* images at w = x - x_n, all normalized by ||psi||.
struct PsiLocal {
    cd psi, dpsi, dstarpsi;
};

PsiLocal landau_psi_local(int k, double Bn, Vec2 w, double logN) {
    const double r = norm(w);
    PsiLocal out{0.0, 0.0, 0.0};
    if (r == 0.0) {
        if (k == 0) {
            out.psi = std::exp(-0.5 * logN);
            out.dpsi = 0.0;
        } else if (k == 1) {
            // psi ~ conj(w) -> 0, but d psi = -2i (iB) G / ||psi|| stays finite
            out.dpsi = cd(0.0, -2.0) * cd(0.0, Bn) * std::exp(-0.5 * logN);
        }
        return out;
    }
    const double theta = std::atan2(w.y, w.x);
    const double logmag =
        k * std::log(Bn) + k * std::log(r) - 0.25 * Bn * r * r - 0.5 * logN;
    const double phase = k * (0.5 * std::numbers::pi - theta);
    const cd psi = std::exp(logmag) * cd(std::cos(phase), std::sin(phase));
    const cd wc(w.x, w.y);
    out.psi = psi;
    out.dpsi = (k > 0) ? cd(0.0, -2.0 * k) * psi * wc / (r * r) : cd(0.0);
    out.dstarpsi = cd(0.0, Bn) * std::conj(wc) * psi;
    return out;
}

// |x_n + w| - |x_n| without cancellation (x_n = rc * dir, |dir| = 1)
double radial_delta(double rc, Vec2 dir, Vec2 w) {
    const double q = 2.0 * rc * dot(dir, w) + dot(w, w);
    const double R = std::sqrt(rc * rc + q);
    return q / (R + rc);
}

struct SRule {
    std::vector<double> x, w;
};

const SRule& unit_gl16() {
    static const SRule r = [] {
        const QuadratureRule g = QuadratureRule::gauss_legendre(16);
        SRule out;
        for (std::size_t i = 0; i < g.nodes.size(); ++i) {
            out.x.push_back(0.5 * (g.nodes[i] + 1.0));
            out.w.push_back(0.5 * g.weights[i]);
        }
        return out;
    }();
    return r;
}

struct RingAcc {
    std::vector<double> re, im;
    void reset(std::size_t n) {
        re.assign(n, 0.0);
        im.assign(n, 0.0);
    }
    void set(std::size_t i, cd v) {
        re[i] = v.real();
        im[i] = v.imag();
    }
    double sumsq(const std::vector<double>& wgt) const {
        return kern::weighted_sumsq(wgt.data(), re.data(), im.data(), re.size());
    }
};

ResidualBreakdown eval_packet3(const PowerLawField& f, const PowerLawPotential& p,
                               const WeylPacket3& P, int panels, int pts, int nth) {
    const int k = P.k_n;
    const double Bn = P.B_n, rn = P.r_n, E = P.E;
    const double rc = norm(P.x_n);
    const Vec2 dir = (1.0 / rc) * P.x_n;
    const double logN = log_landau_norm_sq(k, Bn);
    const double a0 = 2.0 * k * Bn + P.V_n - E;
    const double vc = (p.v0 != 0.0) ? p.v0 * std::pow(rc, p.t) : 0.0;
    const double crossing = f.s > 0.0; // gauge-difference terms vanish for s = 0

    const QuadratureRule gl = QuadratureRule::gauss_legendre(pts);
    const double h = 2.0 * rn / panels;
    const double dth = 2.0 * std::numbers::pi / nth;
    std::vector<double> cth(nth), sth(nth);
    for (int j = 0; j < nth; ++j) {
        cth[j] = std::cos(j * dth);
        sth[j] = std::sin(j * dth);
    }

    constexpr int kNTerms = 6;
    RingAcc acc[kNTerms + 2]; // a..f, total, packet
    double sq[kNTerms + 2] = {};
    std::vector<double> wring;
    const SRule& sg = unit_gl16();

    for (int pp = 0; pp < panels; ++pp) {
        const double mid = (pp + 0.5) * h;
        for (int gi = 0; gi < pts; ++gi) {
            const double r = mid + 0.5 * h * gl.nodes[gi];
            const double wq = 0.5 * h * gl.weights[gi] * r * dth;
            wring.assign(nth, wq);
            for (auto& a : acc)
                a.reset(nth);
            const Cutoff c = smooth_cutoff(r / rn);
            const double gchi_r = c.d1 / rn;
            const double lapchi = c.d2 / (rn * rn) + gchi_r / r;
            const bool inside = c.value != 0.0 || gchi_r != 0.0 || lapchi != 0.0;
            if (!inside)
                continue;
            for (int j = 0; j < nth; ++j) {
                const Vec2 w{r * cth[j], r * sth[j]};
                const double theta = j * dth;
                (void)theta;
                const double delta = radial_delta(rc, dir, w);
                const double dV =
                    (p.v0 != 0.0) ? vc * std::expm1(p.t * std::log1p(delta / rc)) : 0.0;
                const double dB =
                    (f.s > 0.0) ? Bn * std::expm1(f.s * std::log1p(delta / rc)) : 0.0;
                const PsiLocal L = landau_psi_local(k, Bn, w, logN);
                const cd Pi1 = 0.5 * (L.dpsi + L.dstarpsi);
                const cd Pi2 = cd(0.0, -0.5) * (L.dpsi - L.dstarpsi);
                const double gx = gchi_r * cth[j];
                const double gy = gchi_r * sth[j];

                double cI = 0.0, divA = 0.0;
                if (crossing) {
                    const double cwx = cross(w, P.x_n);
                    for (std::size_t m = 0; m < sg.x.size(); ++m) {
                        const double sm = sg.x[m];
                        const double dm = radial_delta(rc, dir, sm * w);
                        const double lg = std::log1p(dm / rc);
                        cI += sg.w[m] * sm * Bn * std::expm1(f.s * lg);
                        // b'(|y|) = b0 s |y|^{s-1}; div integrand s^2 b' cross(w, x_n)/|y|
                        const double bp = Bn * f.s / rc * std::exp((f.s - 1.0) * lg);
                        divA += sg.w[m] * sm * sm * bp * cwx / (rc + dm);
                    }
                }
                const double dA1 = -cI * w.y;
                const double dA2 = cI * w.x;

                const cd Ta = c.value * (a0 + dV) * L.psi;
                const cd Tb = -lapchi * L.psi - cd(0.0, 2.0) * (gx * Pi1 + gy * Pi2);
                const cd Tc = 2.0 * c.value * (dA1 * Pi1 + dA2 * Pi2);
                const cd Td = c.value * (dA1 * dA1 + dA2 * dA2) * L.psi;
                const cd Te = cd(0.0, -1.0) * divA * c.value * L.psi;
                const cd Tf = dB * c.value * L.psi;
                acc[0].set(j, Ta);
                acc[1].set(j, Tb);
                acc[2].set(j, Tc);
                acc[3].set(j, Td);
                acc[4].set(j, Te);
                acc[5].set(j, Tf);
                acc[6].set(j, Ta + Tb + Tc + Td + Te + Tf);
                acc[7].set(j, c.value * L.psi);
            }
            for (int q = 0; q < kNTerms + 2; ++q)
                sq[q] += acc[q].sumsq(wring);
        }
    }

    ResidualBreakdown out;
    static const char* names[kNTerms] = {"a", "b", "c", "d", "e", "f"};
    for (int q = 0; q < kNTerms; ++q)
        out.term_norms.emplace_back(names[q], std::sqrt(sq[q]));
    out.total_norm = std::sqrt(sq[kNTerms]);
    out.packet_norm = std::sqrt(sq[kNTerms + 1]);
    out.ratio = out.total_norm / out.packet_norm;
    return out;
}

ResidualBreakdown refine_packet3(const PowerLawField& f, const PowerLawPotential& p,
                                 const WeylPacket3& P, const QuadratureRule& quad) {
    const int pts = static_cast<int>(quad.nodes.size());
    const int base_panels = std::max(64, quad.panels);
    ResidualBreakdown prev = eval_packet3(f, p, P, base_panels, pts, 64);
    for (int lvl = 1; lvl <= 4; ++lvl) {
        ResidualBreakdown cur =
            eval_packet3(f, p, P, base_panels << lvl, pts, 64 << lvl);
        cur.refinements = lvl;
        if (std::fabs(cur.ratio - prev.ratio) <=
            1e-6 * std::max(std::fabs(cur.ratio), 1e-30))
            return cur;
        prev = cur;
    }
    throw convergence_error("residual_thm3: quadrature did not stabilize "
                            "(last ratio " + std::to_string(prev.ratio) + ")");
}

} // namespace

PsiSample landau_psi(int k, double B_n, Vec2 x_n, Vec2 x) {
    if (k < 0 || B_n <= 0.0)
        throw std::domain_error("landau_psi: need k >= 0, B_n > 0");
    const double logN = log_landau_norm_sq(k, B_n);
    const PsiLocal L = landau_psi_local(k, B_n, x - x_n, logN);
    PsiSample s;
    s.value = L.psi;
    s.cg1 = 0.5 * (L.dpsi + L.dstarpsi);
    s.cg2 = cd(0.0, -0.5) * (L.dpsi - L.dstarpsi);
    return s;
}

Vec2 find_center_thm3(const PowerLawField& f, const PowerLawPotential& p, int n,
                      double E, Vec2 direction) {
    validate(f);
    validate(p);
    if (n < 1)
        throw std::domain_error("find_center_thm3: n must be >= 1");
    const double dn = norm(direction);
    if (dn == 0.0)
        throw std::domain_error("find_center_thm3: zero direction");
    const Vec2 dir = (1.0 / dn) * direction;
    const auto fn = [&](double r) {
        return 2.0 * n * f.b0 * std::pow(r, f.s) +
               (p.v0 != 0.0 ? p.v0 * std::pow(r, p.t) : 0.0) - E;
    };
    double lo = 1e-8, hi = 1.0;
    const double flo = fn(lo);
    while (fn(hi) * flo > 0.0 && hi < 1e14)
        hi *= 2.0;
    if (fn(hi) * flo > 0.0)
        throw regime_error("find_center_thm3: 2nB + V - E has no root along the ray "
                           "(V/B does not tend to -inf in this regime)");
    while (hi - lo > 1e-12 * hi) {
        const double mid = 0.5 * (lo + hi);
        if (fn(mid) * flo <= 0.0)
            hi = mid;
        else
            lo = mid;
    }
    return (0.5 * (lo + hi)) * dir;
}

WeylPacket3 make_packet_thm3(const PowerLawField& f, const PowerLawPotential& p,
                             int n, double eps, double E, Vec2 direction) {
    if (eps <= 0.0)
        throw std::domain_error("make_packet_thm3: eps must be > 0");
    WeylPacket3 P;
    P.n = n;
    P.k_n = n;
    P.x_n = find_center_thm3(f, p, n, E, direction);
    const double rc = norm(P.x_n);
    P.B_n = f.b0 * std::pow(rc, f.s);
    P.V_n = (p.v0 != 0.0) ? p.v0 * std::pow(rc, p.t) : 0.0;
    P.r_n = std::sqrt(2.0 * std::pow(static_cast<double>(n), 1.0 + eps) / P.B_n);
    P.E = E;
    P.eps = eps;
    return P;
}

WeylPacket3 make_packet_thm2(const PowerLawField& f, const PowerLawPotential& p,
                             int k, double eps, int n, Vec2 direction) {
    validate(f);
    validate(p);
    if (k < 1 || n < 1 || eps <= 0.0 || eps >= 2.0)
        throw std::domain_error("make_packet_thm2: need k >= 1, n >= 1, eps in (0,2)");
    // resonance regime: 2k B + V must tend to 0 along an unbounded sequence
    const bool resonant =
        (p.t == f.s) &&
        std::fabs(std::fabs(p.v0) - 2.0 * k * f.b0) <=
            1e-12 * std::max(1.0, std::fabs(p.v0));
    if (!resonant)
        throw regime_error("make_packet_thm2: V + 2kB -> 0 fails (need t = s and "
                           "|v0| = 2k b0); center search has no root");
    const double dn = norm(direction);
    if (dn == 0.0)
        throw std::domain_error("make_packet_thm2: zero direction");
    // any sequence with |x_n| -> infinity works; use the geometric schedule 2^n
    const double rc = std::ldexp(1.0, n);
    WeylPacket3 P;
    P.n = n;
    P.k_n = k;
    P.x_n = (rc / dn) * direction;
    P.B_n = f.b0 * std::pow(rc, f.s);
    P.V_n = p.v0 * std::pow(rc, p.t);
    P.r_n = std::pow(P.B_n, -(2.0 - eps) / 4.0);
    P.E = 0.0;
    P.eps = eps;
    return P;
}

ResidualBreakdown residual_thm3(const PowerLawField& f, const PowerLawPotential& p,
                                const WeylPacket3& packet, const QuadratureRule& quad) {
    validate(f);
    validate(p);
    if (packet.B_n <= 0.0 || packet.r_n <= 0.0)
        throw std::domain_error("residual_thm3: invalid packet");
    return refine_packet3(f, p, packet, quad);
}

ResidualBreakdown residual_thm2(const PowerLawField& f, const PowerLawPotential& p,
                                int k, double eps, int n, Vec2 direction,
                                const QuadratureRule& quad) {
    const WeylPacket3 P = make_packet_thm2(f, p, k, eps, n, direction);
    return refine_packet3(f, p, P, quad);
}

} // namespace paulilab
