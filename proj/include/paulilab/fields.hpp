#pragma once
#include "paulilab/vec2.hpp"

namespace paulilab {

// b(r) = b0 * r^s, radially symmetric field B(x) = b(|x|).
struct PowerLawField {
    double b0 = 1.0; // > 0
    double s = 0.0;  // >= 0
};

// v(r) = v0 * r^t, nonincreasing negative potential. v0 = 0 is allowed as the
// degenerate "no potential" case used by the Landau-level checks; the
// classification entry points insist on v0 < 0.
struct PowerLawPotential {
    double v0 = -1.0; // <= 0
    double t = 0.0;   // in [0, 2]
};

void validate(const PowerLawField& f);
void validate(const PowerLawPotential& p);

struct GaugeSample {
    Vec2 a;
    double div_a = 0.0;
    double curl_a = 0.0;
};

double field_value(const PowerLawField& f, Vec2 x);
double potential_value(const PowerLawPotential& p, Vec2 x);

// Rotational gauge radial profile A(r) = (1/r) int_0^r b(u) u du
// = b0 r^{s+1} / (s+2) in closed form.
double rotational_A(const PowerLawField& f, double r);
double rotational_A_prime(const PowerLawField& f, double r);

// Symmetric gauge for the constant field B_n centered at x_n:
// A_n(x) = (1/2) B_n ^ (x - x_n); div = 0 and curl = B_n exactly.
GaugeSample symmetric_A_n(double B_n, Vec2 x_n, Vec2 x);

// Line-integral gauge tilde A_n(x) = int_0^1 B(x_n + s(x-x_n)) ^ (x-x_n) s ds
// by composite Gauss-Legendre (16 points per panel). curl tilde A_n = B(x)
// identically; the divergence is evaluated by the same quadrature.
GaugeSample tilde_A(const PowerLawField& f, Vec2 x_n, Vec2 x, int panels = 4);

struct PotDerivs {
    double value = 0.0;
    Vec2 grad;
    double hess_norm = 0.0; // spectral norm of the 2x2 Hessian
};

PotDerivs potential_derivatives(const PowerLawPotential& p, Vec2 x);

} // namespace paulilab
