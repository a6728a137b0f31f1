#pragma once
#include "paulilab/quadrature.hpp"

namespace paulilab {

// L2-normalized Hermite function phi_n(x) = (2^n n! sqrt(pi))^{-1/2}
// theta_n(x) e^{-x^2/2}, evaluated by the normalized three-term recurrence
// with dynamic rescaling (safe for n <= 1e4, |x| <= 200).
double hermite_phi(int n, double x);

struct LogValue {
    double log_abs; // -inf for an exact zero
    double sign;    // -1, 0, +1
};

// log |phi_n(x)| and sign; usable far into the classically forbidden region
// where the plain value underflows.
LogValue hermite_phi_log(int n, double x);

// Fills out[0..nmax] with phi_k(x); entries whose magnitude is below the
// double range come out as 0.
void hermite_phi_row(int nmax, double x, double* out);

// Tail integral of the normalized function: int_{sqrt(n^{1+eps})}^inf
// phi_n(x)^2 dx. This differs from the paper-normalization tail by a factor
// 1/sqrt(pi) (asserted in the tests). The infinite interval is truncated at
// the point where the integrand falls below 1e-300.
double hermite_tail(int n, double eps, const QuadratureRule& rule);

// log of the same quantity, computed by log-sum-exp so that the decay in n
// stays resolvable after the plain value underflows.
double hermite_tail_log(int n, double eps, const QuadratureRule& rule);

// log(2^{k+1} pi B^{k-1} k!) via log-gamma.
double log_landau_norm_sq(int k, double B);

// Regularized upper incomplete gamma Q(a, x).
double gamma_q(double a, double x);

} // namespace paulilab
