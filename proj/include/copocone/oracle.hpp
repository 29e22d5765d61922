#pragma once

#include "copocone/types.hpp"

namespace copocone {

/// Exact copositivity decision by face enumeration of
/// min { x^T A x : x >= 0, sum x = 1 }.
///
/// Candidates: simplex vertices (a_ii), closed-form interior minimizers of
/// the three edge quadratics, and the interior stationary point of the
/// bordered system [A 1; 1^T 0]. If the bordered system is singular the
/// interior part falls back to a dense n=200 simplex grid. Ties between
/// global minimizers are broken by face order (vertices, then edges, then
/// interior), then smallest index, so certificates are deterministic.
///
/// Verdict is Copositive iff the global minimum >= -kPsdTol; otherwise the
/// witness is the minimizing x (sum normalized to 1) and margin the minimum.
Certificate is_copositive(const SymMat3& a);

/// Brute-force oracle: evaluates the quadratic form on all simplex grid
/// points (i/n, j/n, k/n), i+j+k = n. Test / cross-validation use.
/// Requires n >= 2.
Certificate is_copositive_grid(const SymMat3& a, int n);

/// Executable statement of the singular-case equivalence: for a matrix with
/// strictly positive null vector p, copositivity and positive
/// semidefiniteness coincide. Returns true iff the two decisions agree.
/// Throws Error(PreconditionViolated) unless p > 0 and ||Ap|| is zero at
/// tolerance kPsdTol * ||A||_F * ||p||.
bool copositive_iff_psd_check(const SymMat3& a, const Vec3& p);

}  // namespace copocone
