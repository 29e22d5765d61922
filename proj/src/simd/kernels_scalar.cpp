#include "simd/kernels.hpp"

#include <limits>

namespace copocone::simd {

void u_factors_scalar(const double* t1, const double* t2, const double* t3,
                      std::size_t n, double* u12, double* u13, double* u23) {
  for (std::size_t i = 0; i < n; ++i) {
    const double a = t1[i], b = t2[i], c = t3[i];
    const double d12 = 1.0 - a * b;
    const double d13 = 1.0 - a * c;
    const double d23 = 1.0 - b * c;
    const double o1 = 1.0 + a;
    const double o2 = 1.0 + b;
    const double o3 = 1.0 + c;
    u12[i] = ((c * c) * (o1 * o2)) / (d13 * d23);
    u13[i] = ((b * b) * (o1 * o3)) / (d12 * d23);
    u23[i] = ((a * a) * (o2 * o3)) / (d12 * d13);
  }
}

double quad_form_min_scalar(const SymMat3& a, const double* x1,
                            const double* x2, const double* x3, std::size_t n,
                            std::size_t* argmin) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    const double p1 = x1[i], p2 = x2[i], p3 = x3[i];
    const double q = ((a.a11 * (p1 * p1) + a.a22 * (p2 * p2)) +
                      a.a33 * (p3 * p3)) +
                     2.0 * ((a.a12 * (p1 * p2) + a.a13 * (p1 * p3)) +
                            a.a23 * (p2 * p3));
    if (q < best) best = q;
  }
  if (argmin != nullptr) {
    *argmin = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const double p1 = x1[i], p2 = x2[i], p3 = x3[i];
      const double q = ((a.a11 * (p1 * p1) + a.a22 * (p2 * p2)) +
                        a.a33 * (p3 * p3)) +
                       2.0 * ((a.a12 * (p1 * p2) + a.a13 * (p1 * p3)) +
                              a.a23 * (p2 * p3));
      if (q == best) {
        *argmin = i;
        break;
      }
    }
  }
  return best;
}

}  // namespace copocone::simd
