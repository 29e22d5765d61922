#include "copocone/parametrize.hpp"

#include <cmath>

namespace copocone {

SlicePoint project(double lambda, const SlicePoint& b) {
  if (lambda < 0) {
    throw Error(ErrorCode::NegativeLambda, "projection parameter < 0");
  }
  return {(1 + lambda) * b.a12 + lambda, (1 + lambda) * b.a13 + lambda,
          (1 + lambda) * b.a23 + lambda};
}

SymMat3 scale(const Vec3& s, const SlicePoint& slice) {
  return {s[0] * s[0], s[1] * s[1],          s[2] * s[2],
          s[0] * s[1] * slice.a12, s[0] * s[2] * slice.a13,
          s[1] * s[2] * slice.a23};
}

SymMat3 phi_full(const FullParams& params) {
  if (params.s[0] < 0 || params.s[1] < 0 || params.s[2] < 0 ||
      params.lambda < 0) {
    throw Error(ErrorCode::PreconditionViolated,
                "phi_full requires nonnegative scales and ray parameter");
  }
  const UFactors u = u_factors(params.t);
  const double s12 = params.s[0] * params.s[1];
  const double s13 = params.s[0] * params.s[2];
  const double s23 = params.s[1] * params.s[2];
  const double lambda = params.lambda;
  return {params.s[0] * params.s[0],
          params.s[1] * params.s[1],
          params.s[2] * params.s[2],
          (2 * s12 + lambda) * u.u12 - s12,
          (2 * s13 + lambda) * u.u13 - s13,
          (2 * s23 + lambda) * u.u23 - s23};
}

SlicePoint project_towards_surface(const Vec3& s, const SimplexPoint& t) {
  if (s[0] < 0 || s[1] < 0 || s[2] < 0) {
    throw Error(ErrorCode::PreconditionViolated,
                "project_towards_surface requires nonnegative scales");
  }
  const UFactors u = u_factors(t);
  const double s12 = s[0] * s[1], s13 = s[0] * s[2], s23 = s[1] * s[2];
  return {(2 * s12 + 1) * u.u12 - s12, (2 * s13 + 1) * u.u13 - s13,
          (2 * s23 + 1) * u.u23 - s23};
}

SymMat3 diananda_sample(std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  double g[3][3];
  for (auto& row : g) {
    for (double& e : row) e = normal(rng);
  }
  SymMat3 a;
  // P = G^T G
  a.a11 = g[0][0] * g[0][0] + g[1][0] * g[1][0] + g[2][0] * g[2][0];
  a.a22 = g[0][1] * g[0][1] + g[1][1] * g[1][1] + g[2][1] * g[2][1];
  a.a33 = g[0][2] * g[0][2] + g[1][2] * g[1][2] + g[2][2] * g[2][2];
  a.a12 = g[0][0] * g[0][1] + g[1][0] * g[1][1] + g[2][0] * g[2][1];
  a.a13 = g[0][0] * g[0][2] + g[1][0] * g[1][2] + g[2][0] * g[2][2];
  a.a23 = g[0][1] * g[0][2] + g[1][1] * g[1][2] + g[2][1] * g[2][2];
  // plus entrywise |normal|
  a.a11 += std::abs(normal(rng));
  a.a22 += std::abs(normal(rng));
  a.a33 += std::abs(normal(rng));
  a.a12 += std::abs(normal(rng));
  a.a13 += std::abs(normal(rng));
  a.a23 += std::abs(normal(rng));
  return a;
}

Mat2 cf2_param(double t1, double t2, double lambda) {
  if (t1 < 0 || t2 < 0 || lambda < 0) {
    throw Error(ErrorCode::PreconditionViolated,
                "cf2_param arguments must be nonnegative");
  }
  return {t1 * t1, -t1 * t2 + lambda, t2 * t2};
}

}  // namespace copocone
