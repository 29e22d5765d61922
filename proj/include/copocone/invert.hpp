#pragma once

#include <vector>

#include "copocone/parametrize.hpp"
#include "copocone/types.hpp"

namespace copocone {

enum class Branch {
  Generic,    // unique strictly positive null vector; Newton on psi
  EdgeNull,   // null vector on a cone facet (a zero component); edge formula
  Conic,      // rank-1 layer matrix: corner preimage, 2-D cone of null vectors
  ZeroScale,  // some diagonal entry is zero
};

const char* branch_name(Branch branch);

struct InversionResult {
  FullParams params;
  double residual = 0;  // max-abs entry error of phi_full(params) vs input
  Branch branch = Branch::Generic;
  int zero_axis = -1;  // 1-based axis for ZeroScale, -1 otherwise
};

/// Diagnostics of the layer-parameter search (exposed for the layer
/// uniqueness tests): every candidate zero of lambda_min(M(lambda)) found
/// on the bracket grid, and which of them pass curved-boundary membership.
struct LambdaSearch {
  std::vector<double> candidates;  // refined zeros / tangential maxima
  std::vector<double> accepted;    // subset passing membership
};

/// Unit-diagonal layer matrix M(lambda) with entries
///   m_ij = 2 (a_ij + s_i s_j) / (2 s_i s_j + lambda) - 1.
/// Well-defined whenever 2 s_i s_j + lambda > 0 for all pairs.
SlicePoint layer_matrix(double lambda, const SlicePoint& off, const Vec3& ss_pairs);

/// Finds lambda* >= 0 such that M(lambda*) is singular PSD *and* on the
/// curved boundary (nonnegative null vector, off-diagonal sum <= -1).
/// Scans a geometric bracket grid for sign changes of
/// g(lambda) = lambda_min(M(lambda)), bisects each; negative local maxima
/// are refined by golden section (tangential roots), and positive refined
/// peaks reveal close root pairs whose flanks are bisected.
/// Throws Error(NoLambdaRoot) if no candidate passes membership.
double find_lambda(const SlicePoint& off, const Vec3& s);

/// Same search, returning all candidates (test surface).
LambdaSearch find_lambda_detail(const SlicePoint& off, const Vec3& s,
                                bool allow_zero = true);

struct BoundaryInversion {
  SimplexPoint t;
  Branch branch = Branch::Generic;
};

/// Inverse of the curved-boundary map: the unique t with big_psi(t) ~ m.
/// Requires m singular PSD with off-diagonal sum <= -1 (checked; throws
/// Error(NotOnCurvedBoundary) otherwise).
///   - rank 1       -> corner of the simplex (Conic)
///   - null vector with a zero component -> edge formula via edge_invert
///   - otherwise    -> damped Newton on psi(t) = reverse(p), centroid start,
///                     21x21 simplex multistart fallback
///                     (Error(NewtonDivergence) if every start fails).
BoundaryInversion invert_boundary(const SlicePoint& m);

/// Canonical preimage for matrices with a_ii = 0 on axis `axis` (1-based).
/// Zero rows pick the minimal lambda and the symmetric-line / centroid
/// representative; other zero-diagonal inputs go through the general
/// lambda > 0 layer search.
FullParams invert_zero_scale(const SymMat3& a, int axis);

/// Full inverse of phi_full on the copositive cone. Rejects non-copositive
/// input (Error(NotCopositiveInput)). The result reproduces the input with
/// max-abs entry error `residual`.
InversionResult invert(const SymMat3& a);

}  // namespace copocone
