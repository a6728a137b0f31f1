#pragma once
#include <cstddef>
#include <vector>

namespace paulilab {

struct TridiagonalSym {
    std::vector<double> diag;
    std::vector<double> offdiag; // size diag.size() - 1

    std::size_t size() const { return diag.size(); }
};

// Number of eigenvalues strictly below lambda (Sturm/LDL sign count).
int sturm_count(const TridiagonalSym& T, double lambda);

// All eigenvalues in [a, b), each located by bisection on the Sturm count.
// tol <= 0 selects the default policy: bracket width below
// max(1e-10, 1e-12 * |lambda|), whichever is looser.
std::vector<double> eig_window(const TridiagonalSym& T, double a, double b,
                               double tol = 0.0);

} // namespace paulilab
