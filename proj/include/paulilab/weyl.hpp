#pragma once
#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "paulilab/fields.hpp"
#include "paulilab/quadrature.hpp"

namespace paulilab {

// Trial-function packet for the Theorem 2/3 constructions (symmetric-gauge
// Landau function of level k_n centered at x_n, cut off at radius 2 r_n).
struct WeylPacket3 {
    int n = 0;
    int k_n = 0;
    Vec2 x_n;
    double B_n = 0.0;
    double V_n = 0.0; // potential sample at the center (unshifted)
    double r_n = 0.0;
    double E = 0.0; // spectral target, enters through V - E
    double eps = 0.0;
};

// Shifted-Hermite packet for the Theorem 4 construction (Landau gauge).
struct WeylPacket4 {
    int n = 0;
    Vec2 y_n;
    double E_n = 0.0;  // |grad V(y_n)|
    double V_n = 0.0;  // V(y_n) - E (shifted sample)
    double xi_n = 0.0; // B0 x_{n,1} + E_n/(2 B0)
    double r_n = 0.0;
    double B0 = 0.0;
    double E = 0.0;
    double eps = 0.0;
};

struct ResidualBreakdown {
    std::vector<std::pair<std::string, double>> term_norms;
    double total_norm = 0.0;
    double packet_norm = 0.0;
    double ratio = 0.0;
    int refinements = 0;

    double term(const std::string& name) const;
};

struct Cutoff {
    double value = 0.0;
    double d1 = 0.0;
    double d2 = 0.0;
};

// C^2 radial profile: 1 on |u| <= 1, 0 on |u| >= 2, quintic smoothstep
// 1 - (10w^3 - 15w^4 + 6w^5), w = |u| - 1, in between.
Cutoff smooth_cutoff(double u);

struct PsiSample {
    std::complex<double> value;
    std::complex<double> cg1, cg2; // covariant gradient (-i grad - A_n) psi
};

// Normalized Landau function psi = (i B_n)^k conj(w)^k e^{-B_n |w|^2/4} /
// ||psi||, w = x - x_n, in the symmetric gauge centered at x_n. Evaluated in
// log-magnitude/phase form.
PsiSample landau_psi(int k, double B_n, Vec2 x_n, Vec2 x);

// Root of 2 n B(x) + (V(x) - E) = 0 along the ray, relative tolerance 1e-12.
Vec2 find_center_thm3(const PowerLawField& f, const PowerLawPotential& p, int n,
                      double E, Vec2 direction);

WeylPacket3 make_packet_thm3(const PowerLawField& f, const PowerLawPotential& p,
                             int n, double eps, double E, Vec2 direction);

// Theorem 2 schedule: level k fixed, centers on the geometric schedule
// |x_n| = 2^n along the ray, radii r_n^{-4} = B_n^{2-eps}. Requires the
// resonance t = s, |v0| = 2 k b0 (otherwise 2kB + V has no zero at infinity).
WeylPacket3 make_packet_thm2(const PowerLawField& f, const PowerLawPotential& p,
                             int k, double eps, int n, Vec2 direction);

// Quadrature of the explicit residual decomposition over |x - x_n| <= 2 r_n:
// (a) chi (2 k B_n + V - E) psi, (b) localization error, (c)-(e) gauge
// comparison terms, (f) (B - B_n) chi psi. Refines until the ratio is stable
// to 1e-6 relative (at most 4 refinements).
ResidualBreakdown residual_thm3(const PowerLawField& f, const PowerLawPotential& p,
                                const WeylPacket3& packet, const QuadratureRule& quad);

ResidualBreakdown residual_thm2(const PowerLawField& f, const PowerLawPotential& p,
                                int k, double eps, int n, Vec2 direction,
                                const QuadratureRule& quad);

// Root of (V(y) - E) + 2 n B0 + (|grad V(y)|/(2 B0))^2 = 0 on the +x1 ray;
// fills the derived packet parameters.
WeylPacket4 find_center_thm4(const PowerLawPotential& p, int n, double B0, double E,
                             double eps);

struct Spinor {
    std::complex<double> up, down;
};

// psi_{E,n,xi}(x) = e^{i xi x2} B0^{1/4} phi_n(sqrt(B0)(x1 - c)),
// c = (xi - E/(2 B0))/B0 (upper component of the Landau-gauge eigenfunction).
std::complex<double> shifted_oscillator_psi(double B0, double E_grad, int n,
                                            double xi, Vec2 x);

Spinor hermite_packet_value(const WeylPacket4& p, Vec2 x);

// Residual of the Theorem 4 packet: the three localization-error terms
// (via the creation/annihilation closed forms) plus the Taylor remainder
// [V - E - V_n - E_n (x1 - x_{n,1})] phi, over the support rectangle.
ResidualBreakdown residual_thm4(const PowerLawPotential& p, const WeylPacket4& packet,
                                const QuadratureRule& quad);

} // namespace paulilab
