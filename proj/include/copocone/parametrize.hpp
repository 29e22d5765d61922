#pragma once

#include <cstdint>
#include <random>

#include "copocone/boundary.hpp"
#include "copocone/types.hpp"

namespace copocone {

/// Central projection of a curved-boundary slice point away from
/// (-1,-1,-1): each entry maps to (1+lambda) b + lambda.
/// Throws Error(NegativeLambda) if lambda < 0.
SlicePoint project(double lambda, const SlicePoint& b);

/// Diagonal scaling: a_ii = s_i^2, a_ij = s_i s_j a_ij.
SymMat3 scale(const Vec3& s, const SlicePoint& slice);

/// The full cone map: diagonal (s1^2, s2^2, s3^2) and
///   a_ij = (2 s_i s_j + lambda) U_k(t) - s_i s_j,
/// total on all nonnegative (s, lambda) and the closed simplex.
SymMat3 phi_full(const FullParams& params);

/// The lambda = 1 target surface of the ray construction:
///   a_ij = (2 s_i s_j + 1) U_k(t) - s_i s_j.
/// phi_full at parameter lambda is the affine interpolation from the
/// boundary layer (lambda = 0) towards this surface.
SlicePoint project_towards_surface(const Vec3& s, const SimplexPoint& t);

/// Random copositive matrix as PSD + nonnegative: G^T G with standard
/// normal G, plus a symmetric matrix of |standard normal| entries.
/// Copositive for n < 5 by the classical decomposition; every draw passes
/// the exact oracle.
SymMat3 diananda_sample(std::mt19937_64& rng);

/// 2x2 copositive cone parametrization [[t1^2, -t1t2+lambda],
/// [-t1t2+lambda, t2^2]]; used by the degenerate-layer inversion tests.
struct Mat2 {
  double a11 = 0, a12 = 0, a22 = 0;
};
Mat2 cf2_param(double t1, double t2, double lambda);

}  // namespace copocone
