#include "copocone/boundary.hpp"

#include <cmath>

#include "copocone/simd.hpp"

namespace copocone {

namespace {

void require_positive(const Vec3& p) {
  if (p[0] <= 0 || p[1] <= 0 || p[2] <= 0) {
    throw Error(ErrorCode::NonPositiveNullVector,
                "null vector must be strictly positive");
  }
}

}  // namespace

UFactors u_factors(const SimplexPoint& t) {
  const double t1[1] = {t.t1}, t2[1] = {t.t2}, t3[1] = {t.t3};
  double u12, u13, u23;
  simd::scalar_kernels().u_factors(t1, t2, t3, 1, &u12, &u13, &u23);
  return {u12, u13, u23};
}

SlicePoint singular_from_null(const Vec3& p) {
  require_positive(p);
  const double p1 = p[0], p2 = p[1], p3 = p[2];
  return {(p3 * p3 - (p1 * p1 + p2 * p2)) / (2 * p1 * p2),
          (p2 * p2 - (p1 * p1 + p3 * p3)) / (2 * p1 * p3),
          (p1 * p1 - (p2 * p2 + p3 * p3)) / (2 * p2 * p3)};
}

bool null_cone_member(const Vec3& p) {
  require_positive(p);
  const double f1 = p[0] - p[1] + p[2];
  const double f2 = p[0] + p[1] - p[2];
  const double f3 = p[0] - p[1] - p[2];
  return f1 * f2 * f3 <= kPsdTol;
}

MinorFactorization minor_factorization(const Vec3& p) {
  const SlicePoint m = singular_from_null(p);
  const double p1 = p[0], p2 = p[1], p3 = p[2];
  const double product = (p1 + p2 + p3) * (p1 - p2 + p3) * (p1 + p2 - p3) *
                         (p1 - p2 - p3);
  return {{1 - m.a12 * m.a12, 1 - m.a13 * m.a13, 1 - m.a23 * m.a23},
          {-product / (4 * p1 * p1 * p2 * p2),
           -product / (4 * p1 * p1 * p3 * p3),
           -product / (4 * p2 * p2 * p3 * p3)},
          product};
}

NullDirection psi(const SimplexPoint& t) {
  if (t.t1 >= 1.0 - 1e-14 || t.t2 >= 1.0 - 1e-14 || t.t3 >= 1.0 - 1e-14) {
    throw Error(ErrorCode::CornerSingularity,
                "psi is singular at the simplex corners");
  }
  const double t1 = t.t1, t2 = t.t2, t3 = t.t3;
  return {t3 * (1 - t1 * t2) / ((1 - t1) * (1 - t2)),
          t2 * (1 - t1 * t3) / ((1 - t1) * (1 - t3)),
          t1 * (1 - t2 * t3) / ((1 - t2) * (1 - t3))};
}

NullDirection psi_reversed(const SimplexPoint& t) {
  const NullDirection q = psi(t);
  return {q.p3, q.p2, q.p1};
}

SlicePoint big_psi(const SimplexPoint& t) {
  const UFactors u = u_factors(t);
  return {2 * u.u12 - 1, 2 * u.u13 - 1, 2 * u.u23 - 1};
}

SimplexPoint EdgeCoordinate::point() const {
  if (s < 0 || s > 1) {
    throw Error(ErrorCode::OutOfRange, "edge parameter outside [0, 1]");
  }
  switch (edge) {
    case SimplexEdge::T1Zero: return SimplexPoint(0, s, 1 - s);
    case SimplexEdge::T2Zero: return SimplexPoint(s, 0, 1 - s);
    default:                  return SimplexPoint(s, 1 - s, 0);
  }
}

double edge_value(double s) {
  return (2 * s - 1) * (s * s - s - 1) / (s * s - s + 1);
}

double edge_invert(double v) {
  if (std::abs(v) > 1.0 + kSumTol) {
    throw Error(ErrorCode::OutOfRange,
                "edge_invert argument outside [-1, 1]");
  }
  if (v >= 1.0) return 0.0;
  if (v <= -1.0) return 1.0;
  // edge_value decreases from 1 to -1; keep edge_value(lo) >= v >= edge_value(hi).
  double lo = 0.0, hi = 1.0;
  for (int iter = 0; iter < 80 && hi - lo > 1e-16; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (edge_value(mid) > v) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace copocone
