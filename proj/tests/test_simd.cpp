#include <doctest.h>

#include <cstring>
#include <vector>

#include "copocone/boundary.hpp"
#include "copocone/simd.hpp"
#include "test_support.hpp"

using namespace copocone;
namespace ct = copocone::testing;

namespace {

struct Batch {
  std::vector<double> t1, t2, t3;
};

Batch random_batch(std::mt19937_64& rng, std::size_t n) {
  Batch b;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3 raw = ct::random_simplex(rng);
    // round-trip through SimplexPoint so single-point and batch calls see
    // the exact same coordinates (the constructor renormalizes)
    const SimplexPoint t(raw[0], raw[1], raw[2]);
    b.t1.push_back(t.t1);
    b.t2.push_back(t.t2);
    b.t3.push_back(t.t3);
  }
  return b;
}

}  // namespace

TEST_CASE("vector kernels match the scalar reference bit for bit") {
  const simd::Kernels* vec = simd::vector_kernels();
  if (vec == nullptr) {
    MESSAGE("no vector kernels on this CPU; scalar-only run");
    return;
  }
  auto rng = ct::make_rng(157);
  // deliberately awkward sizes to cover the vector remainders
  for (std::size_t n : {1u, 2u, 3u, 4u, 5u, 7u, 8u, 64u, 257u, 1891u}) {
    const Batch b = random_batch(rng, n);
    std::vector<double> su12(n), su13(n), su23(n), vu12(n), vu13(n), vu23(n);
    simd::scalar_kernels().u_factors(b.t1.data(), b.t2.data(), b.t3.data(), n,
                                     su12.data(), su13.data(), su23.data());
    vec->u_factors(b.t1.data(), b.t2.data(), b.t3.data(), n, vu12.data(),
                   vu13.data(), vu23.data());
    CHECK(std::memcmp(su12.data(), vu12.data(), n * sizeof(double)) == 0);
    CHECK(std::memcmp(su13.data(), vu13.data(), n * sizeof(double)) == 0);
    CHECK(std::memcmp(su23.data(), vu23.data(), n * sizeof(double)) == 0);

    for (int rep = 0; rep < 8; ++rep) {
      const SymMat3 a = ct::random_symmetric(rng);
      std::size_t sarg = 0, varg = 0;
      const double smin = simd::scalar_kernels().quad_form_min(
          a, b.t1.data(), b.t2.data(), b.t3.data(), n, &sarg);
      const double vmin = vec->quad_form_min(a, b.t1.data(), b.t2.data(),
                                             b.t3.data(), n, &varg);
      CHECK(smin == vmin);
      CHECK(sarg == varg);
    }
  }
}

TEST_CASE("single-point u_factors equals the batch kernel") {
  auto rng = ct::make_rng(163);
  std::vector<SimplexPoint> pts;
  Batch b;
  for (int i = 0; i < 32; ++i) {
    const Vec3 raw = ct::random_simplex(rng);
    pts.emplace_back(raw[0], raw[1], raw[2]);
    b.t1.push_back(pts.back().t1);
    b.t2.push_back(pts.back().t2);
    b.t3.push_back(pts.back().t3);
  }
  std::vector<double> u12(32), u13(32), u23(32);
  simd::active().u_factors(b.t1.data(), b.t2.data(), b.t3.data(), 32,
                           u12.data(), u13.data(), u23.data());
  for (std::size_t i = 0; i < 32; ++i) {
    const UFactors u = u_factors(pts[i]);
    CHECK(u.u12 == u12[i]);
    CHECK(u.u13 == u13[i]);
    CHECK(u.u23 == u23[i]);
  }
}

TEST_CASE("dispatch reports a known kernel set") {
  const char* name = simd::active().name;
  const bool known = std::strcmp(name, "scalar") == 0 ||
                     std::strcmp(name, "avx2") == 0 ||
                     std::strcmp(name, "neon") == 0;
  CHECK(known);
}
