#include "simd/kernels.hpp"

#ifdef COPOCONE_HAVE_NEON_KERNELS

#include <arm_neon.h>

#include <limits>

// 2-wide NEON variants mirroring the AVX2 structure (vmulq/vaddq/vdivq only,
// no fused ops) so outputs match the scalar reference bit for bit.

namespace copocone::simd {

void u_factors_neon(const double* t1, const double* t2, const double* t3,
                    std::size_t n, double* u12, double* u13, double* u23) {
  const float64x2_t one = vdupq_n_f64(1.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t a = vld1q_f64(t1 + i);
    const float64x2_t b = vld1q_f64(t2 + i);
    const float64x2_t c = vld1q_f64(t3 + i);
    const float64x2_t d12 = vsubq_f64(one, vmulq_f64(a, b));
    const float64x2_t d13 = vsubq_f64(one, vmulq_f64(a, c));
    const float64x2_t d23 = vsubq_f64(one, vmulq_f64(b, c));
    const float64x2_t o1 = vaddq_f64(one, a);
    const float64x2_t o2 = vaddq_f64(one, b);
    const float64x2_t o3 = vaddq_f64(one, c);
    vst1q_f64(u12 + i, vdivq_f64(vmulq_f64(vmulq_f64(c, c), vmulq_f64(o1, o2)),
                                 vmulq_f64(d13, d23)));
    vst1q_f64(u13 + i, vdivq_f64(vmulq_f64(vmulq_f64(b, b), vmulq_f64(o1, o3)),
                                 vmulq_f64(d12, d23)));
    vst1q_f64(u23 + i, vdivq_f64(vmulq_f64(vmulq_f64(a, a), vmulq_f64(o2, o3)),
                                 vmulq_f64(d12, d13)));
  }
  if (i < n) {
    u_factors_scalar(t1 + i, t2 + i, t3 + i, n - i, u12 + i, u13 + i, u23 + i);
  }
}

double quad_form_min_neon(const SymMat3& a, const double* x1, const double* x2,
                          const double* x3, std::size_t n,
                          std::size_t* argmin) {
  const float64x2_t a11 = vdupq_n_f64(a.a11), a22 = vdupq_n_f64(a.a22);
  const float64x2_t a33 = vdupq_n_f64(a.a33), a12 = vdupq_n_f64(a.a12);
  const float64x2_t a13 = vdupq_n_f64(a.a13), a23 = vdupq_n_f64(a.a23);
  const float64x2_t two = vdupq_n_f64(2.0);

  float64x2_t vbest = vdupq_n_f64(std::numeric_limits<double>::infinity());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t p1 = vld1q_f64(x1 + i);
    const float64x2_t p2 = vld1q_f64(x2 + i);
    const float64x2_t p3 = vld1q_f64(x3 + i);
    const float64x2_t diag =
        vaddq_f64(vaddq_f64(vmulq_f64(a11, vmulq_f64(p1, p1)),
                            vmulq_f64(a22, vmulq_f64(p2, p2))),
                  vmulq_f64(a33, vmulq_f64(p3, p3)));
    const float64x2_t off =
        vaddq_f64(vaddq_f64(vmulq_f64(a12, vmulq_f64(p1, p2)),
                            vmulq_f64(a13, vmulq_f64(p1, p3))),
                  vmulq_f64(a23, vmulq_f64(p2, p3)));
    vbest = vminq_f64(vbest, vaddq_f64(diag, vmulq_f64(two, off)));
  }
  double best = vminvq_f64(vbest);
  for (; i < n; ++i) {
    std::size_t unused;
    const double q =
        quad_form_min_scalar(a, x1 + i, x2 + i, x3 + i, 1, &unused);
    if (q < best) best = q;
  }
  if (argmin != nullptr) {
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

#endif  // COPOCONE_HAVE_NEON_KERNELS
