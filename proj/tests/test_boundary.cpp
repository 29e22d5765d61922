#include <doctest.h>

#include <array>
#include <cmath>

#include "copocone/boundary.hpp"
#include "copocone/eigen3x3.hpp"
#include "copocone/oracle.hpp"
#include "test_support.hpp"

using namespace copocone;
namespace ct = copocone::testing;

TEST_CASE("singular_from_null reference values") {
  const SlicePoint b = singular_from_null({1, 1, 1});
  CHECK(b.a12 == doctest::Approx(-0.5));
  CHECK(b.a13 == doctest::Approx(-0.5));
  CHECK(b.a23 == doctest::Approx(-0.5));

  const SlicePoint a = singular_from_null({2, 1, 1});
  CHECK(a.a12 == doctest::Approx(-1));
  CHECK(a.a13 == doctest::Approx(-1));
  CHECK(a.a23 == doctest::Approx(1));

  const double r = std::sqrt(2.0);
  const SlicePoint c = singular_from_null({1, 1, r});
  CHECK(c.a12 == doctest::Approx(0.0));
  CHECK(c.a13 == doctest::Approx(-1 / r));
  CHECK(c.a23 == doctest::Approx(-1 / r));
  const Vec3 res = c.as_matrix().apply({1, 1, r});
  CHECK(std::abs(res[0]) + std::abs(res[1]) + std::abs(res[2]) <= 1e-12);

  CHECK_THROWS_AS(singular_from_null({1, 0, 1}), Error);
  CHECK_THROWS_AS(singular_from_null({1, -1, 1}), Error);
}

TEST_CASE("null_cone_member on reference directions") {
  CHECK(null_cone_member({1, 1, 1}));        // product -1
  CHECK_FALSE(null_cone_member({3, 1, 1}));  // product 9
  CHECK(null_cone_member({2, 1, 1}));        // factor vanishes
}

TEST_CASE("minor factorization routes agree") {
  const MinorFactorization sym = minor_factorization({1, 1, 1});
  for (int k = 0; k < 3; ++k) {
    CHECK(sym.direct[k] == doctest::Approx(0.75));
    CHECK(sym.factored[k] == doctest::Approx(0.75));
  }
  const MinorFactorization zero = minor_factorization({2, 1, 1});
  for (int k = 0; k < 3; ++k) {
    CHECK(std::abs(zero.direct[k]) <= 1e-15);
    CHECK(zero.factored[k] == 0.0);
  }
  const MinorFactorization gen = minor_factorization({1, 2, 2});
  for (int k = 0; k < 3; ++k) {
    CHECK(gen.direct[k] ==
          doctest::Approx(gen.factored[k]).epsilon(1e-13));
  }
}

TEST_CASE("psi reference values and corner guard") {
  const NullDirection center = psi(SimplexPoint::centroid());
  CHECK(center.p1 == doctest::Approx(2.0 / 3));
  CHECK(center.p2 == doctest::Approx(2.0 / 3));
  CHECK(center.p3 == doctest::Approx(2.0 / 3));

  const NullDirection edge = psi(SimplexPoint(0.5, 0.5, 0));
  CHECK(edge.p1 == doctest::Approx(0.0));
  CHECK(edge.p2 == doctest::Approx(1.0));
  CHECK(edge.p3 == doctest::Approx(1.0));

  const NullDirection quarter = psi(SimplexPoint(0.25, 0.75, 0));
  CHECK(quarter.p1 == doctest::Approx(0.0));
  CHECK(quarter.p2 + quarter.p3 == doctest::Approx(2.0));

  CHECK_THROWS_AS(psi(SimplexPoint(1, 0, 0)), Error);
}

TEST_CASE("psi lands strictly inside the null cone on interior points") {
  auto rng = ct::make_rng(61);
  for (int i = 0; i < 10000; ++i) {
    const Vec3 t = ct::random_simplex(rng, 1.0, 1e-4);
    const NullDirection p = psi(SimplexPoint(t[0], t[1], t[2]));
    CHECK(std::abs(p.p1 + p.p2 + p.p3 - 2.0) <= 1e-10);
    CHECK(p.min_component() > 0);
    const Vec3 slack = p.triangle_slacks();
    CHECK(slack[0] > 0);
    CHECK(slack[1] > 0);
    CHECK(slack[2] > 0);
  }
}

TEST_CASE("big_psi reference values") {
  const SlicePoint center = big_psi(SimplexPoint::centroid());
  CHECK(std::abs(center.a12 + 0.5) <= 1e-12);
  CHECK(std::abs(center.a13 + 0.5) <= 1e-12);
  CHECK(std::abs(center.a23 + 0.5) <= 1e-12);

  const SlicePoint corner = big_psi(SimplexPoint(1, 0, 0));
  CHECK(corner.a12 == -1.0);
  CHECK(corner.a13 == -1.0);
  CHECK(corner.a23 == 1.0);

  const SlicePoint unreachable = big_psi(SimplexPoint(0.5, 0.5, 0));
  CHECK(unreachable.a12 == -1.0);
  CHECK(std::abs(unreachable.a13) <= 1e-15);
  CHECK(std::abs(unreachable.a23) <= 1e-15);
}

TEST_CASE("big_psi image: singular, PSD, off-diagonal sum <= -1") {
  auto rng = ct::make_rng(67);
  for (int i = 0; i < 10000; ++i) {
    const Vec3 t = ct::random_simplex(rng);
    const SlicePoint m = big_psi(SimplexPoint(t[0], t[1], t[2]));
    CHECK(std::abs(m.as_matrix().det()) <= 1e-9);
    CHECK(is_psd(m.as_matrix()));
    CHECK(m.sum() <= -1 + 1e-9);
    CHECK(is_copositive(m.as_matrix()).copositive());
  }
}

TEST_CASE("the reversed psi is the null vector of big_psi") {
  auto rng = ct::make_rng(71);
  for (int i = 0; i < 10000; ++i) {
    const Vec3 t = ct::random_simplex(rng, 1.0, 1e-5);
    const SimplexPoint tp(t[0], t[1], t[2]);
    const NullDirection p = psi_reversed(tp);
    const Vec3 mp = big_psi(tp).as_matrix().apply(p.as_array());
    CHECK(std::sqrt(mp[0] * mp[0] + mp[1] * mp[1] + mp[2] * mp[2]) <= 1e-9);
  }
}

TEST_CASE("big_psi equals the null-vector construction on the interior") {
  auto rng = ct::make_rng(73);
  for (int i = 0; i < 10000; ++i) {
    const Vec3 t = ct::random_simplex(rng, 1.0, 1e-3);
    const SimplexPoint tp(t[0], t[1], t[2]);
    const SlicePoint direct = big_psi(tp);
    const SlicePoint composed =
        singular_from_null(psi_reversed(tp).as_array());
    CHECK(ct::max_abs_diff(direct, composed) <= 1e-10);
  }
}

TEST_CASE("big_psi has rank 2 on the interior") {
  auto rng = ct::make_rng(79);
  for (int i = 0; i < 5000; ++i) {
    const Vec3 t = ct::random_simplex(rng, 1.0, 1e-3);
    const auto w = sym_eigenvalues(big_psi(SimplexPoint(t[0], t[1], t[2])).as_matrix());
    CHECK(std::abs(w[0]) <= 1e-9);
    CHECK(w[1] >= 1e-6);
  }
}

TEST_CASE("big_psi separates separated points") {
  auto rng = ct::make_rng(83);
  for (int i = 0; i < 10000; ++i) {
    const Vec3 t = ct::random_simplex(rng);
    const Vec3 r = ct::random_simplex(rng);
    const double dist = std::sqrt((t[0] - r[0]) * (t[0] - r[0]) +
                                  (t[1] - r[1]) * (t[1] - r[1]) +
                                  (t[2] - r[2]) * (t[2] - r[2]));
    if (dist < 1e-3) continue;
    const SlicePoint mt = big_psi(SimplexPoint(t[0], t[1], t[2]));
    const SlicePoint mr = big_psi(SimplexPoint(r[0], r[1], r[2]));
    CHECK(ct::max_abs_diff(mt, mr) >= 1e-9);
  }
}

TEST_CASE("edge rows of big_psi follow the edge polynomial") {
  for (int i = 0; i <= 200; ++i) {
    const double s = i / 200.0;
    const double v = edge_value(s);
    const SlicePoint e3 = big_psi(SimplexPoint(s, 1 - s, 0));
    CHECK(std::abs(e3.a12 + 1) <= 1e-12);
    CHECK(std::abs(e3.a13 - v) <= 1e-12);
    CHECK(std::abs(e3.a23 + v) <= 1e-12);
    const SlicePoint e1 = big_psi(SimplexPoint(0, s, 1 - s));
    CHECK(std::abs(e1.a23 + 1) <= 1e-12);
    CHECK(std::abs(e1.a12 - v) <= 1e-12);
    CHECK(std::abs(e1.a13 + v) <= 1e-12);
    const SlicePoint e2 = big_psi(SimplexPoint(s, 0, 1 - s));
    CHECK(std::abs(e2.a13 + 1) <= 1e-12);
    CHECK(std::abs(e2.a12 - v) <= 1e-12);
    CHECK(std::abs(e2.a23 + v) <= 1e-12);
  }
}

TEST_CASE("edge coordinates map onto the matching big_psi edge rows") {
  for (int i = 0; i <= 40; ++i) {
    const double s = i / 40.0;
    const double v = edge_value(s);
    const SlicePoint m3 = big_psi(EdgeCoordinate{SimplexEdge::T3Zero, s}.point());
    CHECK(m3.a12 == -1.0);
    CHECK(std::abs(m3.a13 - v) <= 1e-12);
    const SlicePoint m1 = big_psi(EdgeCoordinate{SimplexEdge::T1Zero, s}.point());
    CHECK(m1.a23 == -1.0);
    CHECK(std::abs(m1.a12 - v) <= 1e-12);
    const SlicePoint m2 = big_psi(EdgeCoordinate{SimplexEdge::T2Zero, s}.point());
    CHECK(m2.a13 == -1.0);
    CHECK(std::abs(m2.a12 - v) <= 1e-12);
  }
  CHECK_THROWS_AS((EdgeCoordinate{SimplexEdge::T3Zero, 1.5}.point()), Error);
}

TEST_CASE("edge_value endpoints and monotonicity") {
  CHECK(edge_value(0.0) == doctest::Approx(1.0));
  CHECK(edge_value(0.5) == doctest::Approx(0.0));
  CHECK(edge_value(1.0) == doctest::Approx(-1.0));
  double prev = edge_value(0.0);
  for (int i = 1; i <= 1000; ++i) {
    const double cur = edge_value(i / 1000.0);
    CHECK(cur < prev);
    prev = cur;
  }
}

TEST_CASE("edge_invert round trips") {
  CHECK(edge_invert(0.0) == doctest::Approx(0.5));
  CHECK(edge_invert(1.0) == doctest::Approx(0.0));
  CHECK(edge_invert(-1.0) == doctest::Approx(1.0));
  for (int i = 0; i <= 100; ++i) {
    const double s = i / 100.0;
    CHECK(std::abs(edge_value(edge_invert(edge_value(s))) - edge_value(s)) <=
          1e-12);
    CHECK(std::abs(edge_invert(edge_value(s)) - s) <= 1e-12);
  }
  CHECK_THROWS_AS(edge_invert(1.1), Error);
}

TEST_CASE("null cone membership matches the oracle away from the facets") {
  auto rng = ct::make_rng(89);
  for (int i = 0; i < 10000; ++i) {
    const Vec3 p = ct::random_simplex(rng, 2.0, 1e-4);
    const double product =
        (p[0] - p[1] + p[2]) * (p[0] + p[1] - p[2]) * (p[0] - p[1] - p[2]);
    if (std::abs(product) <= 1e-6) continue;
    const bool member = null_cone_member(p);
    const bool verdict =
        is_copositive(singular_from_null(p).as_matrix()).copositive();
    CHECK(member == verdict);
  }
}

TEST_CASE("singular_from_null is permutation equivariant") {
  auto rng = ct::make_rng(97);
  constexpr int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                               {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (int i = 0; i < 500; ++i) {
    const Vec3 p = ct::random_simplex(rng, 2.0, 1e-3);
    const SymMat3 m = singular_from_null(p).as_matrix();
    for (const auto& perm : perms) {
      // sigma maps axis k of the permuted problem to axis perm[k] of the
      // original; entries transport exactly (same rounded expressions).
      const Vec3 pp{p[perm[0]], p[perm[1]], p[perm[2]]};
      const SymMat3 mp = singular_from_null(pp).as_matrix();
      for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
          CHECK(mp(r, c) == m(perm[r], perm[c]));
        }
      }
    }
  }
}

TEST_CASE("the null-vector construction factors through the complement map") {
  auto rng = ct::make_rng(101);
  for (int i = 0; i < 2000; ++i) {
    const Vec3 t = ct::random_simplex(rng, 1.0, 1e-3);
    const SlicePoint lhs = singular_from_null(ct::complement_map(t));
    const SlicePoint rhs{
        2 * t[0] * t[1] / ((1 - t[0]) * (1 - t[1])) - 1,
        2 * t[0] * t[2] / ((1 - t[0]) * (1 - t[2])) - 1,
        2 * t[1] * t[2] / ((1 - t[1]) * (1 - t[2])) - 1};
    CHECK(ct::max_abs_diff(lhs, rhs) <= 1e-12);
  }
}
