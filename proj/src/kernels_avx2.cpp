#include "paulilab/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define PAULILAB_HAVE_AVX2_TU 1
#endif

namespace paulilab::kern {

namespace {
constexpr double kPivotFloor = 1e-300;
}

#ifdef PAULILAB_HAVE_AVX2_TU

void sturm_count_multi_avx2(const double* d, const double* e, std::size_t n,
                            const double* shifts, int* counts, std::size_t m) {
    const __m256d vfloor_p = _mm256_set1_pd(kPivotFloor);
    const __m256d vfloor_n = _mm256_set1_pd(-kPivotFloor);
    const __m256d vzero = _mm256_setzero_pd();
    const __m256d vabsmask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));

    std::size_t j = 0;
    for (; j + 4 <= m; j += 4) {
        const __m256d lam = _mm256_loadu_pd(shifts + j);
        __m256d q = _mm256_sub_pd(_mm256_set1_pd(d[0]), lam);
        __m256d neg = _mm256_cmp_pd(q, vzero, _CMP_LT_OQ);
        // accumulate counts as 64-bit lanes; cmp mask is all-ones == -1
        __m256i cnt = _mm256_sub_epi64(_mm256_setzero_si256(), _mm256_castpd_si256(neg));
        for (std::size_t i = 1; i < n; ++i) {
            const __m256d aq = _mm256_and_pd(q, vabsmask);
            const __m256d small = _mm256_cmp_pd(aq, vfloor_p, _CMP_LT_OQ);
            const __m256d qneg = _mm256_cmp_pd(q, vzero, _CMP_LT_OQ);
            const __m256d repl = _mm256_blendv_pd(vfloor_p, vfloor_n, qneg);
            q = _mm256_blendv_pd(q, repl, small);
            const __m256d di = _mm256_sub_pd(_mm256_set1_pd(d[i]), lam);
            const __m256d e2 = _mm256_set1_pd(e[i - 1] * e[i - 1]);
            q = _mm256_sub_pd(di, _mm256_div_pd(e2, q));
            neg = _mm256_cmp_pd(q, vzero, _CMP_LT_OQ);
            cnt = _mm256_sub_epi64(cnt, _mm256_castpd_si256(neg));
        }
        alignas(32) long long tmp[4];
        _mm256_store_si256(reinterpret_cast<__m256i*>(tmp), cnt);
        for (int l = 0; l < 4; ++l) counts[j + l] = static_cast<int>(tmp[l]);
    }
    if (j < m)
        sturm_count_multi_scalar(d, e, n, shifts + j, counts + j, m - j);
}

double weighted_sumsq_avx2(const double* w, const double* re, const double* im,
                           std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    if (im) {
        for (; i + 4 <= n; i += 4) {
            const __m256d vw = _mm256_loadu_pd(w + i);
            const __m256d vr = _mm256_loadu_pd(re + i);
            const __m256d vi = _mm256_loadu_pd(im + i);
            const __m256d s = _mm256_add_pd(_mm256_mul_pd(vr, vr), _mm256_mul_pd(vi, vi));
            acc = _mm256_add_pd(acc, _mm256_mul_pd(vw, s));
        }
    } else {
        for (; i + 4 <= n; i += 4) {
            const __m256d vw = _mm256_loadu_pd(w + i);
            const __m256d vr = _mm256_loadu_pd(re + i);
            acc = _mm256_add_pd(acc, _mm256_mul_pd(vw, _mm256_mul_pd(vr, vr)));
        }
    }
    alignas(32) double tmp[4];
    _mm256_store_pd(tmp, acc);
    double total = (tmp[0] + tmp[1]) + (tmp[2] + tmp[3]);
    if (i < n)
        total += weighted_sumsq_scalar(w + i, re + i, im ? im + i : nullptr, n - i);
    return total;
}

#else // no AVX2 in this TU: forward to scalar so the symbols always exist

void sturm_count_multi_avx2(const double* d, const double* e, std::size_t n,
                            const double* shifts, int* counts, std::size_t m) {
    sturm_count_multi_scalar(d, e, n, shifts, counts, m);
}

double weighted_sumsq_avx2(const double* w, const double* re, const double* im,
                           std::size_t n) {
    return weighted_sumsq_scalar(w, re, im, n);
}

#endif

} // namespace paulilab::kern
