#include "copocone/eigen3x3.hpp"

#include <algorithm>
#include <cmath>

namespace copocone {

namespace {

Vec3 cross(const Vec3& u, const Vec3& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
          u[0] * v[1] - u[1] * v[0]};
}

double norm2(const Vec3& v) {
  return v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
}

Vec3 sign_fixed_unit(Vec3 v) {
  const double n = std::sqrt(norm2(v));
  if (n > 0) {
    for (double& c : v) c /= n;
  }
  int imax = 0;
  for (int i = 1; i < 3; ++i) {
    if (std::abs(v[i]) > std::abs(v[imax])) imax = i;
  }
  if (v[imax] < 0) {
    for (double& c : v) c = -c;
  }
  return v;
}

}  // namespace

std::array<double, 3> sym_eigenvalues(const SymMat3& a) {
  const double p1 = a.a12 * a.a12 + a.a13 * a.a13 + a.a23 * a.a23;
  if (p1 == 0.0) {
    std::array<double, 3> w{a.a11, a.a22, a.a33};
    std::sort(w.begin(), w.end());
    return w;
  }
  const double q = (a.a11 + a.a22 + a.a33) / 3.0;
  const double d1 = a.a11 - q, d2 = a.a22 - q, d3 = a.a33 - q;
  const double p2 = d1 * d1 + d2 * d2 + d3 * d3 + 2.0 * p1;
  const double p = std::sqrt(p2 / 6.0);

  // B = (A - q I) / p; r = det(B) / 2 lands in [-1, 1] up to rounding.
  const double b11 = d1 / p, b22 = d2 / p, b33 = d3 / p;
  const double b12 = a.a12 / p, b13 = a.a13 / p, b23 = a.a23 / p;
  double r = (b11 * (b22 * b33 - b23 * b23) - b12 * (b12 * b33 - b23 * b13) +
              b13 * (b12 * b23 - b22 * b13)) /
             2.0;
  r = std::clamp(r, -1.0, 1.0);

  const double phi = std::acos(r) / 3.0;
  const double two_pi_3 = 2.0943951023931953;  // 2*pi/3
  const double hi = q + 2.0 * p * std::cos(phi);
  const double lo = q + 2.0 * p * std::cos(phi + two_pi_3);
  const double mid = 3.0 * q - hi - lo;
  return {lo, mid, hi};
}

Vec3 sym_eigenvector(const SymMat3& a, double lambda) {
  const Vec3 r1{a.a11 - lambda, a.a12, a.a13};
  const Vec3 r2{a.a12, a.a22 - lambda, a.a23};
  const Vec3 r3{a.a13, a.a23, a.a33 - lambda};

  const Vec3 c12 = cross(r1, r2), c13 = cross(r1, r3), c23 = cross(r2, r3);
  const double n12 = norm2(c12), n13 = norm2(c13), n23 = norm2(c23);
  double best = n12;
  Vec3 v = c12;
  if (n13 > best) {
    best = n13;
    v = c13;
  }
  if (n23 > best) {
    best = n23;
    v = c23;
  }

  const double row_scale =
      std::max({norm2(r1), norm2(r2), norm2(r3), 1e-300});
  if (best > row_scale * row_scale * 1e-24) {
    return sign_fixed_unit(v);
  }

  // Repeated eigenvalue: A - lambda I has rank <= 1. Any vector orthogonal
  // to the largest row is an eigenvector.
  Vec3 r = r1;
  double rn = norm2(r1);
  if (norm2(r2) > rn) {
    r = r2;
    rn = norm2(r2);
  }
  if (norm2(r3) > rn) {
    r = r3;
    rn = norm2(r3);
  }
  if (rn <= row_scale * 1e-28) {
    return {1, 0, 0};  // A ~ lambda I: everything is an eigenvector
  }
  const Vec3 e = std::abs(r[0]) <= std::abs(r[1])
                     ? (std::abs(r[0]) <= std::abs(r[2]) ? Vec3{1, 0, 0}
                                                         : Vec3{0, 0, 1})
                     : (std::abs(r[1]) <= std::abs(r[2]) ? Vec3{0, 1, 0}
                                                         : Vec3{0, 0, 1});
  return sign_fixed_unit(cross(r, e));
}

SmallestEigenPair smallest_eigenpair(const SymMat3& a) {
  const auto w = sym_eigenvalues(a);
  return {w[0], w[1], sym_eigenvector(a, w[0])};
}

}  // namespace copocone
