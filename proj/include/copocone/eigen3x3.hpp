#pragma once

#include <array>

#include "copocone/types.hpp"

namespace copocone {

/// Eigenvalues of a symmetric 3x3 matrix in ascending order, computed by
/// the closed-form trigonometric solution of the characteristic cubic.
/// Deterministic and allocation-free.
std::array<double, 3> sym_eigenvalues(const SymMat3& a);

/// Unit eigenvector for a given eigenvalue of a symmetric 3x3 matrix.
/// Uses row cross products of (A - lambda I) with a fallback for
/// (numerically) repeated eigenvalues; the returned vector is sign-fixed so
/// its largest-magnitude component is positive.
Vec3 sym_eigenvector(const SymMat3& a, double lambda);

struct SmallestEigenPair {
  double value = 0;
  double second = 0;  // second-smallest eigenvalue (rank diagnostics)
  Vec3 vector{0, 0, 0};
};

SmallestEigenPair smallest_eigenpair(const SymMat3& a);

}  // namespace copocone
