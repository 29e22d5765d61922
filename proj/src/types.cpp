#include "copocone/types.hpp"

#include <cmath>

#include "copocone/eigen3x3.hpp"

namespace copocone {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPositiveDiagonal:   return "non_positive_diagonal";
    case ErrorCode::NonPositiveNullVector: return "non_positive_null_vector";
    case ErrorCode::CornerSingularity:     return "corner_singularity";
    case ErrorCode::OutOfRange:            return "out_of_range";
    case ErrorCode::NegativeLambda:        return "negative_lambda";
    case ErrorCode::InvalidSimplexPoint:   return "invalid_simplex_point";
    case ErrorCode::PreconditionViolated:  return "precondition_violated";
    case ErrorCode::NotCopositiveInput:    return "not_copositive_input";
    case ErrorCode::NoLambdaRoot:          return "no_lambda_root";
    case ErrorCode::NotOnCurvedBoundary:   return "not_on_curved_boundary";
    case ErrorCode::NewtonDivergence:      return "newton_divergence";
  }
  return "unknown";
}

SimplexPoint::SimplexPoint(double t1_, double t2_, double t3_)
    : t1(t1_), t2(t2_), t3(t3_) {
  if (t1 < -kSumTol || t2 < -kSumTol || t3 < -kSumTol) {
    throw Error(ErrorCode::InvalidSimplexPoint,
                "simplex point has a negative component");
  }
  const double sum = t1 + t2 + t3;
  if (std::abs(sum - 1.0) > 1e-9) {
    throw Error(ErrorCode::InvalidSimplexPoint,
                "simplex coordinates sum to " + std::to_string(sum));
  }
  if (sum != 1.0) {
    t1 /= sum;
    t2 /= sum;
    t3 /= sum;
  }
  if (t1 < 0) t1 = 0;
  if (t2 < 0) t2 = 0;
  if (t3 < 0) t3 = 0;
}

double quad_form(const SymMat3& a, const Vec3& x) {
  return a.a11 * x[0] * x[0] + a.a22 * x[1] * x[1] + a.a33 * x[2] * x[2] +
         2 * (a.a12 * x[0] * x[1] + a.a13 * x[0] * x[2] + a.a23 * x[1] * x[2]);
}

bool is_psd(const SymMat3& a, double tol) {
  return sym_eigenvalues(a)[0] >= -tol;
}

DiagonalSplit normalize_diag(const SymMat3& a) {
  if (a.a11 <= 0 || a.a22 <= 0 || a.a33 <= 0) {
    throw Error(ErrorCode::NonPositiveDiagonal,
                "normalize_diag requires a strictly positive diagonal");
  }
  const Vec3 s{std::sqrt(a.a11), std::sqrt(a.a22), std::sqrt(a.a33)};
  return {s, {a.a12 / (s[0] * s[1]), a.a13 / (s[0] * s[2]),
              a.a23 / (s[1] * s[2])}};
}

}  // namespace copocone
