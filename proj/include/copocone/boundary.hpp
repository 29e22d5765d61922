#pragma once

#include <array>

#include "copocone/types.hpp"

namespace copocone {

/// The three rational factors shared by the boundary map, the full cone map
/// and the target surface: U_ij in [0,1] with boundary entry = 2*U_ij - 1.
/// Computed once and reused so the layer-interpolation identities hold to
/// the last bit.
struct UFactors {
  double u12 = 0, u13 = 0, u23 = 0;
};

UFactors u_factors(const SimplexPoint& t);

/// Unit-diagonal matrix with prescribed positive null vector p
/// (unique solution of A p = 0 with unit diagonal):
///   a12 = (p3^2 - p1^2 - p2^2) / (2 p1 p2), cyclic analogues.
/// Throws Error(NonPositiveNullVector) if any p_i <= 0.
SlicePoint singular_from_null(const Vec3& p);

/// True iff p lies in cone{e1+e2, e1+e3, e2+e3}, decided by the sign of
/// (p1-p2+p3)(p1+p2-p3)(p1-p2-p3); by the singular-case characterization
/// this is exactly when singular_from_null(p) is copositive.
bool null_cone_member(const Vec3& p);

struct MinorFactorization {
  std::array<double, 3> direct;    // 2x2 principal minors, pairs (12),(13),(23)
  std::array<double, 3> factored;  // -(1/4 p_i^2 p_j^2) * product of 4 factors
  double factor_product;           // (p1+p2+p3)(p1-p2+p3)(p1+p2-p3)(p1-p2-p3)
};

/// Both evaluation routes for the principal minors of singular_from_null(p).
MinorFactorization minor_factorization(const Vec3& p);

/// Change of coordinates from the simplex to the null-vector cone section:
///   psi(t) = ( t3(1-t1t2)/((1-t1)(1-t2)),
///              t2(1-t1t3)/((1-t1)(1-t3)),
///              t1(1-t2t3)/((1-t2)(1-t3)) ).
/// Components sum to 2. Singular at the simplex corners; throws
/// Error(CornerSingularity) if some t_i >= 1 - 1e-14.
///
/// Index note: the null vector of big_psi(t) is psi(t) *reversed*,
/// (psi3, psi2, psi1) — see psi_reversed.
NullDirection psi(const SimplexPoint& t);

/// psi with components reversed: the actual null direction of big_psi(t).
NullDirection psi_reversed(const SimplexPoint& t);

/// Resolved parametrization of the curved boundary, total on the closed
/// simplex (denominators 1 - t_i t_j >= 3/4):
///   a12 = 2 t3^2 (1+t1)(1+t2) / ((1-t1t3)(1-t2t3)) - 1, cyclic analogues.
SlicePoint big_psi(const SimplexPoint& t);

/// One of the three edges of the simplex, named by the vanishing coordinate.
enum class SimplexEdge { T1Zero, T2Zero, T3Zero };

/// Point on a simplex edge: arc parameter s in [0,1] along the edge, in the
/// orientation used by the boundary-map edge formulas.
struct EdgeCoordinate {
  SimplexEdge edge = SimplexEdge::T3Zero;
  double s = 0;

  /// The barycentric point: (s,1-s,0) on T3Zero, (0,s,1-s) on T1Zero,
  /// (s,0,1-s) on T2Zero.
  SimplexPoint point() const;
};

/// Value of the boundary map along the simplex edge t = (s, 1-s, 0):
/// (2s-1)(s^2-s-1)/(s^2-s+1), strictly decreasing from 1 to -1 on [0,1].
double edge_value(double s);

/// Inverse of edge_value by bisection; |edge_value(s) - v| <= 1e-12.
/// Throws Error(OutOfRange) if |v| > 1 + kSumTol.
double edge_invert(double v);

}  // namespace copocone
