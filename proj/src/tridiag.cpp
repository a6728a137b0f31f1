#include "paulilab/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "paulilab/kernels.hpp"

namespace paulilab {

int sturm_count(const TridiagonalSym& T, double lambda) {
    if (T.size() < 2 || T.offdiag.size() + 1 != T.size())
        throw std::invalid_argument("sturm_count: malformed tridiagonal matrix");
    int c = 0;
    kern::sturm_count_multi(T.diag.data(), T.offdiag.data(), T.size(), &lambda, &c, 1);
    return c;
}

std::vector<double> eig_window(const TridiagonalSym& T, double a, double b, double tol) {
    if (!(a < b))
        throw std::invalid_argument("eig_window: need a < b");
    const int ca = sturm_count(T, a);
    const int cb = sturm_count(T, b);
    const int m = cb - ca;
    if (m <= 0)
        return {};

    // Bracket eigenvalue index ca + i in [lo[i], hi[i]); bisect all active
    // brackets together so the multi-shift kernel does the heavy lifting.
    std::vector<double> lo(m, a), hi(m, b);
    std::vector<double> mids;
    std::vector<int> counts, active;
    mids.reserve(m);
    counts.reserve(m);
    const auto done = [&](int i) {
        const double w = hi[i] - lo[i];
        const double lim = tol > 0.0
            ? tol
            : std::max(1e-10, 1e-12 * std::max(std::fabs(lo[i]), std::fabs(hi[i])));
        return w <= lim;
    };
    for (int iter = 0; iter < 200; ++iter) {
        mids.clear();
        active.clear();
        for (int i = 0; i < m; ++i) {
            if (!done(i)) {
                active.push_back(i);
                mids.push_back(0.5 * (lo[i] + hi[i]));
            }
        }
        if (active.empty())
            break;
        counts.assign(mids.size(), 0);
        kern::sturm_count_multi(T.diag.data(), T.offdiag.data(), T.size(),
                                mids.data(), counts.data(), mids.size());
        for (std::size_t k = 0; k < active.size(); ++k) {
            const int i = active[k];
            if (counts[k] > ca + i)
                hi[i] = mids[k];
            else
                lo[i] = mids[k];
        }
    }
    std::vector<double> out(m);
    for (int i = 0; i < m; ++i)
        out[i] = 0.5 * (lo[i] + hi[i]);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace paulilab
