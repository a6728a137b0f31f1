#pragma once
#include <cstddef>

// Low-level hot loops. Each kernel has a scalar reference version and an
// AVX2 version; the unsuffixed entry point dispatches at runtime.
namespace paulilab::kern {

bool avx2_available();

// counts[j] = number of eigenvalues of the symmetric tridiagonal matrix
// (d, e) strictly below shifts[j], via the Sturm/LDL sign count.
void sturm_count_multi_scalar(const double* d, const double* e, std::size_t n,
                              const double* shifts, int* counts, std::size_t m);
void sturm_count_multi_avx2(const double* d, const double* e, std::size_t n,
                            const double* shifts, int* counts, std::size_t m);
void sturm_count_multi(const double* d, const double* e, std::size_t n,
                       const double* shifts, int* counts, std::size_t m);

// sum_i w[i] * (re[i]^2 + im[i]^2); im may be nullptr for real data.
double weighted_sumsq_scalar(const double* w, const double* re, const double* im,
                             std::size_t n);
double weighted_sumsq_avx2(const double* w, const double* re, const double* im,
                           std::size_t n);
double weighted_sumsq(const double* w, const double* re, const double* im,
                      std::size_t n);

} // namespace paulilab::kern
