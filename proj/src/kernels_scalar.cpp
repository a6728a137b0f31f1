#include "paulilab/kernels.hpp"

#include <cmath>

namespace paulilab::kern {

namespace {
constexpr double kPivotFloor = 1e-300;
}

void sturm_count_multi_scalar(const double* d, const double* e, std::size_t n,
                              const double* shifts, int* counts, std::size_t m) {
    for (std::size_t j = 0; j < m; ++j) {
        const double lam = shifts[j];
        double q = d[0] - lam;
        int c = q < 0.0 ? 1 : 0;
        for (std::size_t i = 1; i < n; ++i) {
            if (std::fabs(q) < kPivotFloor)
                q = q < 0.0 ? -kPivotFloor : kPivotFloor;
            q = (d[i] - lam) - (e[i - 1] * e[i - 1]) / q;
            if (q < 0.0) ++c;
        }
        counts[j] = c;
    }
}

double weighted_sumsq_scalar(const double* w, const double* re, const double* im,
                             std::size_t n) {
    double acc = 0.0;
    if (im) {
        for (std::size_t i = 0; i < n; ++i)
            acc += w[i] * (re[i] * re[i] + im[i] * im[i]);
    } else {
        for (std::size_t i = 0; i < n; ++i)
            acc += w[i] * (re[i] * re[i]);
    }
    return acc;
}

} // namespace paulilab::kern
