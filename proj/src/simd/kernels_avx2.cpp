#include "simd/kernels.hpp"

#ifdef COPOCONE_HAVE_AVX2_KERNELS

#include <immintrin.h>

#include <limits>

// 4-wide AVX2 variants. Plain mul/add/div intrinsics only (no FMA) so the
// lane arithmetic matches the scalar reference bit for bit.

namespace copocone::simd {

namespace {

inline __m256d load4(const double* p) { return _mm256_loadu_pd(p); }

inline __m256d quad4(const __m256d a11, const __m256d a22, const __m256d a33,
                     const __m256d a12, const __m256d a13, const __m256d a23,
                     const __m256d two, const __m256d p1, const __m256d p2,
                     const __m256d p3) {
  const __m256d diag = _mm256_add_pd(
      _mm256_add_pd(_mm256_mul_pd(a11, _mm256_mul_pd(p1, p1)),
                    _mm256_mul_pd(a22, _mm256_mul_pd(p2, p2))),
      _mm256_mul_pd(a33, _mm256_mul_pd(p3, p3)));
  const __m256d off = _mm256_add_pd(
      _mm256_add_pd(_mm256_mul_pd(a12, _mm256_mul_pd(p1, p2)),
                    _mm256_mul_pd(a13, _mm256_mul_pd(p1, p3))),
      _mm256_mul_pd(a23, _mm256_mul_pd(p2, p3)));
  return _mm256_add_pd(diag, _mm256_mul_pd(two, off));
}

}  // namespace

void u_factors_avx2(const double* t1, const double* t2, const double* t3,
                    std::size_t n, double* u12, double* u13, double* u23) {
  const __m256d one = _mm256_set1_pd(1.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d a = load4(t1 + i), b = load4(t2 + i), c = load4(t3 + i);
    const __m256d d12 = _mm256_sub_pd(one, _mm256_mul_pd(a, b));
    const __m256d d13 = _mm256_sub_pd(one, _mm256_mul_pd(a, c));
    const __m256d d23 = _mm256_sub_pd(one, _mm256_mul_pd(b, c));
    const __m256d o1 = _mm256_add_pd(one, a);
    const __m256d o2 = _mm256_add_pd(one, b);
    const __m256d o3 = _mm256_add_pd(one, c);
    _mm256_storeu_pd(
        u12 + i,
        _mm256_div_pd(_mm256_mul_pd(_mm256_mul_pd(c, c), _mm256_mul_pd(o1, o2)),
                      _mm256_mul_pd(d13, d23)));
    _mm256_storeu_pd(
        u13 + i,
        _mm256_div_pd(_mm256_mul_pd(_mm256_mul_pd(b, b), _mm256_mul_pd(o1, o3)),
                      _mm256_mul_pd(d12, d23)));
    _mm256_storeu_pd(
        u23 + i,
        _mm256_div_pd(_mm256_mul_pd(_mm256_mul_pd(a, a), _mm256_mul_pd(o2, o3)),
                      _mm256_mul_pd(d12, d13)));
  }
  if (i < n) {
    u_factors_scalar(t1 + i, t2 + i, t3 + i, n - i, u12 + i, u13 + i, u23 + i);
  }
}

double quad_form_min_avx2(const SymMat3& a, const double* x1, const double* x2,
                          const double* x3, std::size_t n,
                          std::size_t* argmin) {
  const __m256d a11 = _mm256_set1_pd(a.a11), a22 = _mm256_set1_pd(a.a22);
  const __m256d a33 = _mm256_set1_pd(a.a33), a12 = _mm256_set1_pd(a.a12);
  const __m256d a13 = _mm256_set1_pd(a.a13), a23 = _mm256_set1_pd(a.a23);
  const __m256d two = _mm256_set1_pd(2.0);

  __m256d vbest = _mm256_set1_pd(std::numeric_limits<double>::infinity());
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    vbest = _mm256_min_pd(vbest, quad4(a11, a22, a33, a12, a13, a23, two,
                                       load4(x1 + i), load4(x2 + i),
                                       load4(x3 + i)));
  }
  double lane[4];
  _mm256_storeu_pd(lane, vbest);
  double best = lane[0];
  for (int k = 1; k < 4; ++k) {
    if (lane[k] < best) best = lane[k];
  }
  for (; i < n; ++i) {
    std::size_t unused;
    const double q =
        quad_form_min_scalar(a, x1 + i, x2 + i, x3 + i, 1, &unused);
    if (q < best) best = q;
  }
  if (argmin != nullptr) {
    // Rescan through the scalar kernel (identical rounding) for the first
    // index attaining the minimum.
    *argmin = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (quad_form_min_scalar(a, x1 + j, x2 + j, x3 + j, 1, nullptr) ==
          best) {
        *argmin = j;
        break;
      }
    }
  }
  return best;
}

}  // namespace copocone::simd

#endif  // COPOCONE_HAVE_AVX2_KERNELS
