#include "copocone/invert.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "copocone/boundary.hpp"
#include "copocone/eigen3x3.hpp"
#include "copocone/oracle.hpp"

namespace copocone {

namespace {

// Thresholds of the inversion case analysis.
constexpr double kEdgeNullTol = 1e-8;   // null component ~ 0 -> edge branch
constexpr double kRankOneTol = 1e-7;    // second eigenvalue ~ 0 -> corner
constexpr double kMemberEigTol = 1e-7;  // |lambda_min| at an accepted root
constexpr double kMemberSumTol = 1e-6;  // off-diagonal sum <= -1 + tol
constexpr double kMemberNullTol = 1e-6; // nonnegativity slack of null vector
constexpr double kBoundaryGate = 1e-6;  // invert_boundary precondition gate

double g_of(double lambda, const SlicePoint& off, const Vec3& ss) {
  return sym_eigenvalues(layer_matrix(lambda, off, ss).as_matrix())[0];
}

// Curved-boundary membership of M(lambda): singular PSD with nonnegative
// null vector and off-diagonal sum <= -1, all at tolerance. Near an
// almost-rank-1 layer the null eigenvector rotates fast in lambda, so the
// nonnegativity slack is a parameter (callers retry relaxed before giving
// up; reconstruction residual is the final arbiter).
bool passes_membership(const SlicePoint& m, double null_tol) {
  const auto pair = smallest_eigenpair(m.as_matrix());
  if (std::abs(pair.value) > kMemberEigTol) return false;
  if (m.sum() > -1.0 + kMemberSumTol) return false;
  const Vec3& v = pair.vector;
  if (pair.second > kRankOneTol &&
      std::min({v[0], v[1], v[2]}) < -null_tol) {
    return false;
  }
  return true;
}

double bisect_root(double lo, double hi, bool positive_at_lo,
                   const SlicePoint& off, const Vec3& ss) {
  for (int iter = 0; iter < 200 && hi - lo > 1e-15 * std::max(1.0, hi);
       ++iter) {
    const double mid = 0.5 * (lo + hi);
    if ((g_of(mid, off, ss) > 0) == positive_at_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Golden-section maximization of g on [a, b]; stops early once a positive
// value is seen (the caller then bisects both flanks).
double golden_max(double a, double b, const SlicePoint& off, const Vec3& ss) {
  constexpr double kGolden = 0.6180339887498949;
  double c = b - kGolden * (b - a);
  double d = a + kGolden * (b - a);
  double fc = g_of(c, off, ss), fd = g_of(d, off, ss);
  for (int iter = 0; iter < 300; ++iter) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kGolden * (b - a);
      fc = g_of(c, off, ss);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kGolden * (b - a);
      fd = g_of(d, off, ss);
    }
    if (b - a < 1e-15 * std::max(1.0, b)) break;
    if (std::max(fc, fd) > 0) break;
  }
  return fc > fd ? c : d;
}

std::vector<double> lambda_candidates(const SlicePoint& off, const Vec3& ss,
                                      bool allow_zero) {
  const double scale =
      std::max({ss[0], ss[1], ss[2], std::abs(off.a12), std::abs(off.a13),
                std::abs(off.a23), 1e-8});
  std::vector<double> grid;
  if (allow_zero) grid.push_back(0.0);
  for (int k = -60; k <= 60; ++k) {
    grid.push_back(scale * std::ldexp(1.0, k));
  }

  std::vector<double> g(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    g[i] = g_of(grid[i], off, ss);
  }

  std::vector<double> cands;
  auto push = [&cands](double lambda) {
    for (double have : cands) {
      if (std::abs(have - lambda) <= 1e-12 * (1.0 + lambda)) return;
    }
    cands.push_back(lambda);
  };

  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (std::abs(g[i]) <= 1e-12) push(grid[i]);
  }
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    if ((g[i] > 0 && g[i + 1] < 0) || (g[i] < 0 && g[i + 1] > 0)) {
      push(bisect_root(grid[i], grid[i + 1], g[i] > 0, off, ss));
    }
  }
  // Tangential roots and root pairs too close for the doubling grid show up
  // as negative local maxima.
  for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
    if (g[i] < 0 && g[i] > g[i - 1] && g[i] >= g[i + 1]) {
      const double peak = golden_max(grid[i - 1], grid[i + 1], off, ss);
      const double gp = g_of(peak, off, ss);
      if (gp > 0) {
        // Close root pair. The peak itself is kept too: on almost-rank-1
        // layers it is the only point where the null vector is clean.
        push(bisect_root(grid[i - 1], peak, false, off, ss));
        if (gp <= kMemberEigTol) push(peak);
        push(bisect_root(peak, grid[i + 1], true, off, ss));
      } else if (gp >= -1e-7) {
        push(peak);
      }
    }
  }
  std::sort(cands.begin(), cands.end());
  return cands;
}

// Analytic Jacobian of (psi1, psi2) as functions of (t1, t2) with
// t3 = 1 - t1 - t2 eliminated.
struct Jac2 {
  double j11, j12, j21, j22;
};

Jac2 psi_jacobian(double a, double b) {
  const double c = 1 - a - b;
  const double da = 1 - a, db = 1 - b, dc = 1 - c;
  const double d1c = (1 - a * b) / (da * db);  // dpsi1/dt3 (t free)
  const double d2b = (1 - a * c) / (da * dc);  // dpsi2/dt2 (t free)
  return {c / (da * da) - d1c, c / (db * db) - d1c,
          b / (da * da) - b / (dc * dc), d2b - b / (dc * dc)};
}

std::optional<SimplexPoint> newton_psi(const Vec3& target_rev, double t1,
                                       double t2) {
  // Solve psi(t) = reverse(target_rev) in (t1, t2).
  const double q1 = target_rev[2], q2 = target_rev[1];
  auto residual = [&](double a, double b, double* f1, double* f2) {
    const double c = 1 - a - b;
    *f1 = c * (1 - a * b) / ((1 - a) * (1 - b)) - q1;
    *f2 = b * (1 - a * c) / ((1 - a) * (1 - c)) - q2;
  };

  double f1, f2;
  residual(t1, t2, &f1, &f2);
  for (int iter = 0; iter < 100; ++iter) {
    const double fnorm = std::max(std::abs(f1), std::abs(f2));
    if (fnorm <= 1e-14) {
      return SimplexPoint(t1, t2, 1 - t1 - t2);
    }
    const Jac2 j = psi_jacobian(t1, t2);
    const double det = j.j11 * j.j22 - j.j12 * j.j21;
    if (std::abs(det) < 1e-300) return std::nullopt;
    const double dx1 = (-f1 * j.j22 + f2 * j.j12) / det;
    const double dx2 = (-f2 * j.j11 + f1 * j.j21) / det;

    double step = 1.0;
    bool advanced = false;
    for (int half = 0; half < 60; ++half, step *= 0.5) {
      const double n1 = t1 + step * dx1, n2 = t2 + step * dx2;
      const double n3 = 1 - n1 - n2;
      if (n1 <= 0 || n2 <= 0 || n3 <= 0 || n1 >= 1 || n2 >= 1 || n3 >= 1) {
        continue;
      }
      double g1, g2;
      residual(n1, n2, &g1, &g2);
      if (std::max(std::abs(g1), std::abs(g2)) < fnorm) {
        t1 = n1;
        t2 = n2;
        f1 = g1;
        f2 = g2;
        advanced = true;
        break;
      }
    }
    if (!advanced) return std::nullopt;
  }
  return std::nullopt;
}

SimplexPoint solve_psi(const NullDirection& p) {
  auto verify = [&p](const SimplexPoint& t) {
    const NullDirection q = psi_reversed(t);
    return std::abs(q.p1 - p.p1) <= 1e-9 && std::abs(q.p2 - p.p2) <= 1e-9 &&
           std::abs(q.p3 - p.p3) <= 1e-9;
  };
  const Vec3 target = p.as_array();
  if (auto t = newton_psi(target, 1.0 / 3, 1.0 / 3); t && verify(*t)) {
    return *t;
  }
  for (int i = 1; i < 21; ++i) {
    for (int j = 1; j < 21 - i; ++j) {
      if (auto t = newton_psi(target, i / 21.0, j / 21.0); t && verify(*t)) {
        return *t;
      }
    }
  }
  throw Error(ErrorCode::NewtonDivergence,
              "no multistart converged for the boundary inversion");
}

SimplexPoint corner_for_positive_entry(const SlicePoint& m) {
  // big_psi(e1) = (-1,-1, 1), big_psi(e2) = (-1, 1,-1), big_psi(e3) = (1,-1,-1)
  if (m.a23 >= m.a13 && m.a23 >= m.a12) return {1, 0, 0};
  if (m.a13 >= m.a12) return {0, 1, 0};
  return {0, 0, 1};
}

constexpr double kZeroDiag = 1e-30;

int first_zero_axis(const SymMat3& a) {
  if (a.a11 <= kZeroDiag) return 1;
  if (a.a22 <= kZeroDiag) return 2;
  if (a.a33 <= kZeroDiag) return 3;
  return 0;
}

Vec3 scales_from_diag(const SymMat3& a) {
  auto root = [](double d) { return d <= kZeroDiag ? 0.0 : std::sqrt(d); };
  return {root(a.a11), root(a.a22), root(a.a33)};
}

Vec3 pair_products(const Vec3& s) {
  return {s[0] * s[1], s[0] * s[2], s[1] * s[2]};
}

BoundaryInversion invert_boundary_impl(const SlicePoint& m, double null_tol);

double reconstruction_residual(const SymMat3& a, const FullParams& params) {
  const SymMat3 b = phi_full(params);
  return std::max({std::abs(a.a11 - b.a11), std::abs(a.a22 - b.a22),
                   std::abs(a.a33 - b.a33), std::abs(a.a12 - b.a12),
                   std::abs(a.a13 - b.a13), std::abs(a.a23 - b.a23)});
}

struct CandidateInversion {
  FullParams params;
  double residual;
  Branch branch;
};

// Shared by the generic path and the nonzero zero-scale path: try every
// layer-parameter candidate and keep the best reconstruction. A first pass
// uses the strict membership filter; if nothing survives it, a relaxed
// null-vector slack is tried before failing (the residual decides validity
// either way).
CandidateInversion best_over_candidates(const SymMat3& a, const Vec3& s,
                                        bool allow_zero) {
  const SlicePoint off{a.a12, a.a13, a.a23};
  const Vec3 ss = pair_products(s);
  const std::vector<double> cands = lambda_candidates(off, ss, allow_zero);
  std::optional<CandidateInversion> best;
  bool newton_diverged = false;
  for (double null_tol : {kMemberNullTol, 1e-3}) {
    for (double lambda : cands) {
      const SlicePoint m = layer_matrix(lambda, off, ss);
      if (!passes_membership(m, null_tol)) continue;
      BoundaryInversion bi;
      try {
        bi = invert_boundary_impl(m, null_tol);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::NewtonDivergence) newton_diverged = true;
        continue;
      }
      FullParams params{s, lambda, bi.t};
      const double res = reconstruction_residual(a, params);
      if (!best || res < best->residual) {
        best = CandidateInversion{params, res, bi.branch};
      }
    }
    if (best) break;
  }
  if (!best) {
    if (newton_diverged) {
      throw Error(ErrorCode::NewtonDivergence,
                  "boundary inversion failed on every layer candidate");
    }
    throw Error(ErrorCode::NoLambdaRoot,
                "no layer parameter with a curved-boundary matrix was found");
  }
  return *best;
}

// Entry index k (0:a12, 1:a13, 2:a23) -> the pair of axes it touches.
constexpr int kPairAxes[3][2] = {{1, 2}, {1, 3}, {2, 3}};

// Simplex corner whose boundary matrix carries +1 in entry k.
SimplexPoint corner_for_entry(int k) {
  switch (k) {
    case 2: return {1, 0, 0};
    case 1: return {0, 1, 0};
    default: return {0, 0, 1};
  }
}

// U factor of entry k along the symmetric line from corner_for_entry(k) to
// the midpoint of the opposite simplex edge; decreases from 1 to 0.
SimplexPoint symmetric_line_point(int k, double tau) {
  const SimplexPoint corner = corner_for_entry(k);
  return SimplexPoint(corner.t1 * (1 - 3 * tau) + tau,
                      corner.t2 * (1 - 3 * tau) + tau,
                      corner.t3 * (1 - 3 * tau) + tau);
}

double u_on_symmetric_line(int k, double tau) {
  const UFactors u = u_factors(symmetric_line_point(k, tau));
  return k == 0 ? u.u12 : (k == 1 ? u.u13 : u.u23);
}

}  // namespace

const char* branch_name(Branch branch) {
  switch (branch) {
    case Branch::Generic:   return "generic";
    case Branch::EdgeNull:  return "edge_null";
    case Branch::Conic:     return "conic";
    case Branch::ZeroScale: return "zero_scale";
  }
  return "unknown";
}

SlicePoint layer_matrix(double lambda, const SlicePoint& off,
                        const Vec3& ss_pairs) {
  auto entry = [lambda](double a, double ss) {
    return 2 * (a + ss) / (2 * ss + lambda) - 1;
  };
  return {entry(off.a12, ss_pairs[0]), entry(off.a13, ss_pairs[1]),
          entry(off.a23, ss_pairs[2])};
}

LambdaSearch find_lambda_detail(const SlicePoint& off, const Vec3& s,
                                bool allow_zero) {
  const Vec3 ss = pair_products(s);
  LambdaSearch search;
  search.candidates = lambda_candidates(off, ss, allow_zero);
  for (double lambda : search.candidates) {
    if (passes_membership(layer_matrix(lambda, off, ss), kMemberNullTol)) {
      search.accepted.push_back(lambda);
    }
  }
  return search;
}

double find_lambda(const SlicePoint& off, const Vec3& s) {
  if (s[0] <= 0 || s[1] <= 0 || s[2] <= 0) {
    throw Error(ErrorCode::PreconditionViolated,
                "find_lambda requires strictly positive scales");
  }
  const LambdaSearch search = find_lambda_detail(off, s, true);
  if (search.accepted.empty()) {
    throw Error(ErrorCode::NoLambdaRoot,
                "no layer parameter with a curved-boundary matrix was found");
  }
  return search.accepted.front();
}

namespace {

BoundaryInversion invert_boundary_impl(const SlicePoint& m, double null_tol) {
  const auto pair = smallest_eigenpair(m.as_matrix());
  if (std::abs(pair.value) > kBoundaryGate ||
      m.sum() > -1.0 + kBoundaryGate) {
    throw Error(ErrorCode::NotOnCurvedBoundary,
                "matrix is not singular PSD with off-diagonal sum <= -1");
  }

  if (pair.second <= kRankOneTol) {
    return {corner_for_positive_entry(m), Branch::Conic};
  }

  Vec3 v = pair.vector;
  for (double& c : v) {
    if (c < -null_tol) {
      throw Error(ErrorCode::NotOnCurvedBoundary,
                  "null vector has a negative component");
    }
    if (c < 0) c = 0;
  }
  const double sum = v[0] + v[1] + v[2];
  const NullDirection p{2 * v[0] / sum, 2 * v[1] / sum, 2 * v[2] / sum};

  if (p.min_component() <= kEdgeNullTol) {
    // Null direction at a cone vertex e_i + e_j: the matrix lies on the
    // one-parameter family of the simplex edge t_k = 0. The free entry of
    // the family determines the arc parameter.
    EdgeCoordinate ec;
    if (p.p3 <= kEdgeNullTol) {
      ec = {SimplexEdge::T3Zero, edge_invert(std::clamp(m.a13, -1.0, 1.0))};
    } else if (p.p1 <= kEdgeNullTol) {
      ec = {SimplexEdge::T1Zero, edge_invert(std::clamp(m.a12, -1.0, 1.0))};
    } else {
      ec = {SimplexEdge::T2Zero, edge_invert(std::clamp(m.a12, -1.0, 1.0))};
    }
    return {ec.point(), Branch::EdgeNull};
  }

  return {solve_psi(p), Branch::Generic};
}

}  // namespace

BoundaryInversion invert_boundary(const SlicePoint& m) {
  return invert_boundary_impl(m, kMemberNullTol);
}

FullParams invert_zero_scale(const SymMat3& a, int axis) {
  if (axis < 1 || axis > 3 ||
      (axis == 1 ? a.a11 : axis == 2 ? a.a22 : a.a33) > kZeroDiag) {
    throw Error(ErrorCode::PreconditionViolated,
                "invert_zero_scale requires a zero diagonal on the given axis");
  }
  if (!is_copositive(a).copositive()) {
    throw Error(ErrorCode::NotCopositiveInput,
                "inversion is defined only on the copositive cone");
  }

  const Vec3 s = scales_from_diag(a);
  const Vec3 ss = pair_products(s);
  const SlicePoint off{a.a12, a.a13, a.a23};
  const double off_arr[3] = {off.a12, off.a13, off.a23};

  const bool zero[4] = {false, s[0] == 0, s[1] == 0, s[2] == 0};
  const double negligible =
      1e-14 * std::max({1.0, std::abs(off.a12), std::abs(off.a13),
                        std::abs(off.a23)});
  bool zero_rows = true;
  for (int k = 0; k < 3; ++k) {
    const bool touches = zero[kPairAxes[k][0]] || zero[kPairAxes[k][1]];
    if (touches && std::abs(off_arr[k]) > negligible) zero_rows = false;
  }

  if (!zero_rows) {
    // Entries in the zero rows are nonzero: lambda > 0 is forced and the
    // general layer search applies.
    return best_over_candidates(a, s, false).params;
  }

  const int n_zero = int(zero[1]) + int(zero[2]) + int(zero[3]);
  if (n_zero >= 2) {
    return {s, 0.0, SimplexPoint::centroid()};
  }

  // One zero row: the free entry is the pair not touching the zero axis.
  int kfree = 0;
  for (int k = 0; k < 3; ++k) {
    if (!zero[kPairAxes[k][0]] && !zero[kPairAxes[k][1]]) kfree = k;
  }
  const double d = off_arr[kfree];
  const double sigma = ss[kfree];
  if (d >= sigma) {
    // Minimal lambda; the U factor is pinned to 1 at the simplex corner.
    return {s, d - sigma, corner_for_entry(kfree)};
  }
  // lambda = 0 layer: pick the symmetric-line representative of the
  // one-parameter preimage family.
  const double target = (d + sigma) / (2 * sigma);
  double lo = 0.0, hi = 0.5;
  for (int iter = 0; iter < 200 && hi - lo > 1e-16; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (u_on_symmetric_line(kfree, mid) > target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double tau = 0.5 * (lo + hi);
  return {s, 0.0, symmetric_line_point(kfree, tau)};
}

InversionResult invert(const SymMat3& a) {
  if (!is_copositive(a).copositive()) {
    throw Error(ErrorCode::NotCopositiveInput,
                "inversion is defined only on the copositive cone");
  }

  const int axis = first_zero_axis(a);
  if (axis != 0) {
    const FullParams params = invert_zero_scale(a, axis);
    return {params, reconstruction_residual(a, params), Branch::ZeroScale,
            axis};
  }

  const Vec3 s = scales_from_diag(a);
  const CandidateInversion best = best_over_candidates(a, s, true);
  return {best.params, best.residual, best.branch, -1};
}

}  // namespace copocone
