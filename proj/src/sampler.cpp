#include "copocone/sampler.hpp"

#include <random>

#include "copocone/boundary.hpp"
#include "copocone/oracle.hpp"
#include "copocone/parametrize.hpp"
#include "copocone/simd.hpp"

namespace copocone {

namespace {

std::vector<SlicePoint> slice_draws(double box_min, double box_max,
                                    std::int64_t n_draws, std::uint64_t seed,
                                    bool keep) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(box_min, box_max);
  std::vector<SlicePoint> out;
  for (std::int64_t i = 0; i < n_draws; ++i) {
    const SlicePoint p{uni(rng), uni(rng), uni(rng)};
    if (!keep || is_copositive(p.as_matrix()).copositive()) {
      out.push_back(p);
    }
  }
  return out;
}

// Per-lambda off-diagonal surface over the t-grid via the batched kernels.
std::vector<SlicePoint> surface_over_grid(const Vec3& s, double lambda,
                                          int resolution) {
  std::vector<double> t1, t2, t3;
  for_each_grid_point(resolution, [&](const SimplexPoint& t) {
    t1.push_back(t.t1);
    t2.push_back(t.t2);
    t3.push_back(t.t3);
  });
  const std::size_t n = t1.size();
  std::vector<double> u12(n), u13(n), u23(n);
  simd::active().u_factors(t1.data(), t2.data(), t3.data(), n, u12.data(),
                           u13.data(), u23.data());
  const double s12 = s[0] * s[1], s13 = s[0] * s[2], s23 = s[1] * s[2];
  std::vector<SlicePoint> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = {(2 * s12 + lambda) * u12[i] - s12,
              (2 * s13 + lambda) * u13[i] - s13,
              (2 * s23 + lambda) * u23[i] - s23};
  }
  return out;
}

}  // namespace

void for_each_grid_point(int resolution,
                         const std::function<void(const SimplexPoint&)>& fn) {
  if (resolution < 1) {
    throw Error(ErrorCode::PreconditionViolated, "grid resolution must be >= 1");
  }
  const double inv = 1.0 / resolution;
  for (int i = 0; i <= resolution; ++i) {
    for (int j = 0; j <= resolution - i; ++j) {
      const int k = resolution - i - j;
      fn(SimplexPoint(i * inv, j * inv, k * inv));
    }
  }
}

std::vector<SlicePoint> sample_slice(double box_min, double box_max,
                                     std::int64_t n_draws,
                                     std::uint64_t seed) {
  if (!(box_min < box_max) || n_draws < 1) {
    throw Error(ErrorCode::PreconditionViolated,
                "sample_slice requires box_min < box_max and n >= 1");
  }
  return slice_draws(box_min, box_max, n_draws, seed, true);
}

double slice_acceptance_rate(double box_min, double box_max,
                             std::int64_t n_draws, std::uint64_t seed) {
  const auto kept = sample_slice(box_min, box_max, n_draws, seed);
  return double(kept.size()) / double(n_draws);
}

std::vector<SlicePoint> boundary_mesh(MeshKind kind, int resolution,
                                      double box_min, double box_max) {
  if (resolution < 2) {
    throw Error(ErrorCode::PreconditionViolated,
                "boundary_mesh requires resolution >= 2");
  }
  std::vector<SlicePoint> out;
  if (kind == MeshKind::Curved) {
    return surface_over_grid({1, 1, 1}, 0.0, resolution);
  }
  const double step = (box_max - box_min) / resolution;
  for (int i = 0; i <= resolution; ++i) {
    for (int j = 0; j <= resolution; ++j) {
      const double u = box_min + i * step, v = box_min + j * step;
      SlicePoint p;
      switch (kind) {
        case MeshKind::Flat12: p = {-1.0, u, v}; break;
        case MeshKind::Flat13: p = {u, -1.0, v}; break;
        default:               p = {u, v, -1.0}; break;
      }
      if (is_copositive(p.as_matrix()).copositive()) {
        out.push_back(p);
      }
    }
  }
  return out;
}

std::vector<LabeledSlicePoint> layer_mesh(const Vec3& s,
                                          const std::vector<double>& lambdas,
                                          int resolution) {
  if (s[0] < 0 || s[1] < 0 || s[2] < 0) {
    throw Error(ErrorCode::PreconditionViolated,
                "layer_mesh requires nonnegative scales");
  }
  std::vector<LabeledSlicePoint> out;
  for (double lambda : lambdas) {
    for (const SlicePoint& p : surface_over_grid(s, lambda, resolution)) {
      out.push_back({p, lambda});
    }
  }
  return out;
}

}  // namespace copocone
