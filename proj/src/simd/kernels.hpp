#pragma once

#include <cstddef>

#include "copocone/types.hpp"

// Internal kernel entry points. Every variant performs the same operations
// in the same order so results are bit-identical across variants; the
// scalar translation unit is built with -ffp-contract=off to keep the
// compiler from fusing what the vector code does not fuse.

namespace copocone::simd {

void u_factors_scalar(const double* t1, const double* t2, const double* t3,
                      std::size_t n, double* u12, double* u13, double* u23);
double quad_form_min_scalar(const SymMat3& a, const double* x1,
                            const double* x2, const double* x3, std::size_t n,
                            std::size_t* argmin);

#if defined(__x86_64__) || defined(_M_X64) || defined(__i386__)
#define COPOCONE_HAVE_AVX2_KERNELS 1
void u_factors_avx2(const double* t1, const double* t2, const double* t3,
                    std::size_t n, double* u12, double* u13, double* u23);
double quad_form_min_avx2(const SymMat3& a, const double* x1, const double* x2,
                          const double* x3, std::size_t n,
                          std::size_t* argmin);
#endif

#if defined(__aarch64__) || defined(__ARM_NEON)
#define COPOCONE_HAVE_NEON_KERNELS 1
void u_factors_neon(const double* t1, const double* t2, const double* t3,
                    std::size_t n, double* u12, double* u13, double* u23);
double quad_form_min_neon(const SymMat3& a, const double* x1, const double* x2,
                          const double* x3, std::size_t n,
                          std::size_t* argmin);
#endif

}  // namespace copocone::simd
