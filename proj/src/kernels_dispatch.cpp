#include "paulilab/kernels.hpp"

namespace paulilab::kern {

bool avx2_available() {
#if defined(__x86_64__) || defined(__i386__)
    static const bool ok = __builtin_cpu_supports("avx2");
    return ok;
#else
    return false;
#endif
}

void sturm_count_multi(const double* d, const double* e, std::size_t n,
                       const double* shifts, int* counts, std::size_t m) {
    if (avx2_available())
        sturm_count_multi_avx2(d, e, n, shifts, counts, m);
    else
        sturm_count_multi_scalar(d, e, n, shifts, counts, m);
}

double weighted_sumsq(const double* w, const double* re, const double* im,
                      std::size_t n) {
    if (avx2_available())
        return weighted_sumsq_avx2(w, re, im, n);
    return weighted_sumsq_scalar(w, re, im, n);
}

} // namespace paulilab::kern
