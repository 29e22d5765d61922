#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

namespace copocone {

/// Tolerance policy used throughout the library.
///
/// kSumTol    — affine constraints (barycentric sums, cone normalizations)
/// kPsdTol    — eigenvalue / principal-minor sign tests
/// kReconTol  — round-trip reconstruction comparisons (overridable per call
///              site; the CLI honors COPOCONE_TOL)
inline constexpr double kSumTol   = 1e-12;
inline constexpr double kPsdTol   = 1e-9;
inline constexpr double kReconTol = 1e-8;

enum class ErrorCode {
  NonPositiveDiagonal,
  NonPositiveNullVector,
  CornerSingularity,
  OutOfRange,
  NegativeLambda,
  InvalidSimplexPoint,
  PreconditionViolated,
  NotCopositiveInput,
  NoLambdaRoot,
  NotOnCurvedBoundary,
  NewtonDivergence,
};

/// Domain error carrying a machine-readable code; the CLI maps these to
/// JSON error objects and exit code 1.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

const char* error_code_name(ErrorCode code);

using Vec3 = std::array<double, 3>;

/// Symmetric 3x3 real matrix stored as its six free entries.
struct SymMat3 {
  double a11 = 0, a22 = 0, a33 = 0;
  double a12 = 0, a13 = 0, a23 = 0;

  static SymMat3 identity() { return {1, 1, 1, 0, 0, 0}; }

  double operator()(int i, int j) const {
    static constexpr int idx[3][3] = {{0, 3, 4}, {3, 1, 5}, {4, 5, 2}};
    const double* e[6] = {&a11, &a22, &a33, &a12, &a13, &a23};
    return *e[idx[i][j]];
  }

  Vec3 apply(const Vec3& x) const {
    return {a11 * x[0] + a12 * x[1] + a13 * x[2],
            a12 * x[0] + a22 * x[1] + a23 * x[2],
            a13 * x[0] + a23 * x[1] + a33 * x[2]};
  }

  double det() const {
    return a11 * (a22 * a33 - a23 * a23) - a12 * (a12 * a33 - a23 * a13) +
           a13 * (a12 * a23 - a22 * a13);
  }

  double frobenius_norm() const {
    return std::sqrt(a11 * a11 + a22 * a22 + a33 * a33 +
                     2 * (a12 * a12 + a13 * a13 + a23 * a23));
  }
};

/// Off-diagonal triple of a unit-diagonal matrix (the coordinates of the
/// 3-dimensional slice).
struct SlicePoint {
  double a12 = 0, a13 = 0, a23 = 0;

  SymMat3 as_matrix() const { return {1, 1, 1, a12, a13, a23}; }
  double sum() const { return a12 + a13 + a23; }
};

/// Barycentric point of the standard 2-simplex. Construction re-normalizes
/// sums within 1e-9 of 1 and rejects anything further off.
struct SimplexPoint {
  double t1 = 1.0 / 3, t2 = 1.0 / 3, t3 = 1.0 / 3;

  SimplexPoint() = default;
  SimplexPoint(double t1_, double t2_, double t3_);

  static SimplexPoint centroid() { return {}; }
  double min_component() const { return std::min(t1, std::min(t2, t3)); }
  Vec3 as_array() const { return {t1, t2, t3}; }
};

/// Nonnegative null direction of a curved-boundary matrix, canonically
/// normalized so that p1+p2+p3 = 2 (cone vertices are exactly e_i+e_j).
struct NullDirection {
  double p1 = 0, p2 = 0, p3 = 0;

  double min_component() const { return std::min(p1, std::min(p2, p3)); }
  Vec3 as_array() const { return {p1, p2, p3}; }

  /// Triangle slacks p_j + p_k - p_i; all nonnegative inside the cone
  /// conv{e1+e2, e1+e3, e2+e3}.
  Vec3 triangle_slacks() const {
    return {p2 + p3 - p1, p1 + p3 - p2, p1 + p2 - p3};
  }
};

/// Parameters of the full cone map: nonnegative diagonal square roots,
/// ray parameter, and boundary simplex point.
struct FullParams {
  Vec3 s{1, 1, 1};
  double lambda = 0;
  SimplexPoint t;
};

enum class Verdict { Copositive, NotCopositive };

/// Result of a copositivity decision. `margin` is the minimum of the
/// quadratic form over the standard simplex; `witness` is present exactly
/// when the verdict is NotCopositive and then satisfies witness >= 0,
/// quad_form(A, witness) < 0.
struct Certificate {
  Verdict verdict = Verdict::Copositive;
  double margin = 0;
  std::optional<Vec3> witness;

  bool copositive() const { return verdict == Verdict::Copositive; }
};

// ---- elementary operations ------------------------------------------------

/// x^T A x, expanded.
double quad_form(const SymMat3& a, const Vec3& x);

/// True iff the smallest eigenvalue of `a` is >= -tol.
bool is_psd(const SymMat3& a, double tol = kPsdTol);

struct DiagonalSplit {
  Vec3 s;
  SlicePoint slice;
};

/// Splits a positive-diagonal matrix into scales s_i = sqrt(a_ii) and the
/// unit-diagonal slice point a_ij / (s_i s_j).
/// Throws Error(NonPositiveDiagonal) if any a_ii <= 0.
DiagonalSplit normalize_diag(const SymMat3& a);

}  // namespace copocone
