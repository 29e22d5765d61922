#pragma once

#include <cstddef>

#include "copocone/types.hpp"

namespace copocone::simd {

/// Batched inner kernels behind the mesh generators and the grid oracle.
/// The scalar variants are the reference; vector variants perform the same
/// operations in the same order, so outputs are bit-identical (the
/// equivalence tests assert exact equality).
struct Kernels {
  /// U factors for n simplex points given as component arrays.
  void (*u_factors)(const double* t1, const double* t2, const double* t3,
                    std::size_t n, double* u12, double* u13, double* u23);

  /// Minimum of x^T A x over n points (component arrays); returns the
  /// minimum and writes the first attaining index to *argmin.
  double (*quad_form_min)(const SymMat3& a, const double* x1, const double* x2,
                          const double* x3, std::size_t n, std::size_t* argmin);

  const char* name;
};

/// Kernels selected at startup: AVX2 when the CPU supports it, scalar
/// otherwise. COPOCONE_SIMD=scalar|avx2|neon forces a variant (requests for
/// unavailable variants fall back to scalar).
const Kernels& active();

const Kernels& scalar_kernels();

/// Vector kernels for this build, or nullptr when unavailable.
const Kernels* vector_kernels();

}  // namespace copocone::simd
