#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "copocone/types.hpp"

namespace copocone {

enum class MeshKind { Curved, Flat12, Flat13, Flat23 };

struct LabeledSlicePoint {
  SlicePoint point;
  double label = 0;
};

/// Rejection-samples `n_draws` points uniform in [box_min, box_max]^3 and
/// keeps those whose unit-diagonal matrix passes the exact oracle.
/// Default box is [-1, 2].
std::vector<SlicePoint> sample_slice(double box_min, double box_max,
                                     std::int64_t n_draws, std::uint64_t seed);

/// Acceptance ratio of sample_slice over `n_draws` draws (regression guard).
double slice_acceptance_rate(double box_min, double box_max,
                             std::int64_t n_draws, std::uint64_t seed);

/// Boundary meshes: Curved emits big_psi over the triangular barycentric
/// grid t = (i/r, j/r, k/r); Flat_ij emits the grid of the face a_ij = -1
/// intersected with the oracle-accepted region, bounded to the sampling box.
std::vector<SlicePoint> boundary_mesh(MeshKind kind, int resolution,
                                      double box_min = -1.0,
                                      double box_max = 2.0);

/// Layer surfaces: for each lambda, the off-diagonal surface of phi_full
/// over the t-grid, labeled by lambda.
std::vector<LabeledSlicePoint> layer_mesh(const Vec3& s,
                                          const std::vector<double>& lambdas,
                                          int resolution);

/// Barycentric triangular grid t = (i/r, j/r, k/r), i+j+k = r, in the
/// deterministic scan order used by all meshes.
void for_each_grid_point(int resolution,
                         const std::function<void(const SimplexPoint&)>& fn);

}  // namespace copocone
