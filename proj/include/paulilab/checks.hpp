#pragma once
#include <string>
#include <vector>

#include "paulilab/fields.hpp"

namespace paulilab::checks {

struct CheckResult {
    std::string id;
    bool pass = false;
    double measured = 0.0;
    double bound = 0.0;
    std::string note;
};

// Finite-difference d_n^* d_n applied to the Landau packet, compared with the
// exact eigenvalue 2 k B. Returns the worst pointwise error over a sample set
// near the packet's radial peak (nested second-order stencils, spacing h).
double fd_eigen_error(int k, double B, double h);

// e(h) / e(h/2); second-order schemes give ~4.
double fd_eigen_ratio(int k, double B, double h);

// Worst pointwise error of (d d^* - d^* d) g - 2 B(x) g over a sample set,
// rotational gauge, smooth test function g.
double fd_commutator_error(const PowerLawField& f, double h);

// Finite-difference Landau-gauge annihilation/creation operator applied to
// the shifted oscillator function, Richardson-extrapolated (h, h/2) and
// compared with the closed-form linear combination. Relative to sqrt(2nB0).
double fd_annihilation_error(double B0, double E_grad, int n, double xi);
double fd_creation_error(double B0, double E_grad, int n, double xi);

// | quadrature(||psi_k||^2) / closed form - 1 |
double landau_norm_error(int k, double B);

// max_{m,n <= nmax} | <phi_m, phi_n> - delta_mn |
double hermite_orthonormality_error(int nmax);

// Constant field, V = 0: every trusted spin-down channel eigenvalue below the
// window top must be matched by a spin-up eigenvalue of the same channel
// (d intertwines the two blocks). Returns the worst match distance.
double spin_pairing_error();

std::vector<CheckResult> run_validation_suite(bool quick);

} // namespace paulilab::checks
