#include "copocone/oracle.hpp"

#include <cmath>
#include <cstddef>
#include <vector>

#include "copocone/simd.hpp"

namespace copocone {

namespace {

struct GridPoints {
  int n = 0;
  std::vector<double> x1, x2, x3;
};

// Barycentric grid (i/n, j/n, k/n), i+j+k = n, in deterministic scan order.
const GridPoints& simplex_grid(int n) {
  thread_local GridPoints cache;
  if (cache.n == n) return cache;
  cache.n = n;
  cache.x1.clear();
  cache.x2.clear();
  cache.x3.clear();
  const double inv = 1.0 / n;
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n - i; ++j) {
      cache.x1.push_back(i * inv);
      cache.x2.push_back(j * inv);
      cache.x3.push_back((n - i - j) * inv);
    }
  }
  return cache;
}

struct Candidate {
  double value;
  Vec3 x;
};

// Stationary point of x^T A x on the affine slice sum(x)=1: solves the
// bordered system [A 1; 1^T 0] (x, mu) = (0, 1) by partial-pivot
// elimination. Returns false when the system is singular.
bool interior_stationary(const SymMat3& a, Vec3* x) {
  double m[4][5] = {
      {a.a11, a.a12, a.a13, 1, 0},
      {a.a12, a.a22, a.a23, 1, 0},
      {a.a13, a.a23, a.a33, 1, 0},
      {1, 1, 1, 0, 1},
  };
  double scale = 1.0;
  for (const auto& row : m) {
    for (int j = 0; j < 4; ++j) scale = std::max(scale, std::abs(row[j]));
  }
  for (int col = 0; col < 4; ++col) {
    int piv = col;
    for (int r = col + 1; r < 4; ++r) {
      if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
    }
    if (std::abs(m[piv][col]) < 1e-12 * scale) return false;
    if (piv != col) {
      for (int j = 0; j <= 4; ++j) std::swap(m[piv][j], m[col][j]);
    }
    for (int r = 0; r < 4; ++r) {
      if (r == col) continue;
      const double f = m[r][col] / m[col][col];
      for (int j = col; j <= 4; ++j) m[r][j] -= f * m[col][j];
    }
  }
  (*x)[0] = m[0][4] / m[0][0];
  (*x)[1] = m[1][4] / m[1][1];
  (*x)[2] = m[2][4] / m[2][2];
  return true;
}

}  // namespace

Certificate is_copositive(const SymMat3& a) {
  // Candidates in tie-break order: vertices, edge minimizers, interior.
  Candidate best{a.a11, {1, 0, 0}};
  auto consider = [&best](double value, const Vec3& x) {
    if (value < best.value) best = {value, x};
  };
  consider(a.a22, {0, 1, 0});
  consider(a.a33, {0, 0, 1});

  constexpr int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  for (const auto& pr : pairs) {
    const int i = pr[0], j = pr[1];
    const double aii = a(i, i), ajj = a(j, j), aij = a(i, j);
    const double den = aii - 2 * aij + ajj;
    if (den == 0.0) continue;  // linear edge restriction; endpoints covered
    const double u = (ajj - aij) / den;
    if (u <= 0.0 || u >= 1.0) continue;
    const double v = 1.0 - u;
    const double value = aii * u * u + 2 * aij * u * v + ajj * v * v;
    Vec3 x{0, 0, 0};
    x[i] = u;
    x[j] = v;
    consider(value, x);
  }

  Vec3 xi{};
  if (interior_stationary(a, &xi)) {
    if (xi[0] > 0 && xi[1] > 0 && xi[2] > 0) {
      consider(quad_form(a, xi), xi);
    }
  } else {
    // Rank-deficient slice restriction: dense grid stands in for the
    // interior stationary set.
    const auto& grid = simplex_grid(200);
    std::size_t argmin = 0;
    const double value = simd::active().quad_form_min(
        a, grid.x1.data(), grid.x2.data(), grid.x3.data(), grid.x1.size(),
        &argmin);
    consider(value, {grid.x1[argmin], grid.x2[argmin], grid.x3[argmin]});
  }

  Certificate cert;
  cert.margin = best.value;
  if (best.value >= -kPsdTol) {
    cert.verdict = Verdict::Copositive;
  } else {
    cert.verdict = Verdict::NotCopositive;
    cert.witness = best.x;
  }
  return cert;
}

Certificate is_copositive_grid(const SymMat3& a, int n) {
  if (n < 2) {
    throw Error(ErrorCode::PreconditionViolated,
                "is_copositive_grid requires n >= 2");
  }
  const auto& grid = simplex_grid(n);
  std::size_t argmin = 0;
  const double value =
      simd::active().quad_form_min(a, grid.x1.data(), grid.x2.data(),
                                   grid.x3.data(), grid.x1.size(), &argmin);
  Certificate cert;
  cert.margin = value;
  if (value >= -kPsdTol) {
    cert.verdict = Verdict::Copositive;
  } else {
    cert.verdict = Verdict::NotCopositive;
    cert.witness = Vec3{grid.x1[argmin], grid.x2[argmin], grid.x3[argmin]};
  }
  return cert;
}

bool copositive_iff_psd_check(const SymMat3& a, const Vec3& p) {
  if (p[0] <= 0 || p[1] <= 0 || p[2] <= 0) {
    throw Error(ErrorCode::PreconditionViolated,
                "copositive_iff_psd_check requires p > 0");
  }
  const Vec3 ap = a.apply(p);
  const double ap_norm =
      std::sqrt(ap[0] * ap[0] + ap[1] * ap[1] + ap[2] * ap[2]);
  const double p_norm = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
  if (ap_norm > kPsdTol * a.frobenius_norm() * p_norm) {
    throw Error(ErrorCode::PreconditionViolated,
                "p is not a null vector of the matrix");
  }
  return is_copositive(a).copositive() == is_psd(a, kPsdTol);
}

}  // namespace copocone
