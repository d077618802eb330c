#ifndef SGRF_REFERENCE_HPP
#define SGRF_REFERENCE_HPP

#include <Eigen/Core>
#include <cstdint>
#include <vector>

#include "sgrf/circulant.hpp"
#include "sgrf/covmodels.hpp"
#include "sgrf/field.hpp"
#include "sgrf/grid.hpp"
#include "sgrf/stcirculant.hpp"

namespace sgrf {

// Dense-matrix oracle. Test and benchmark support only: everything here is
// O(n^2) memory and O(n^3) time, which is exactly what the circulant path
// avoids.

enum class DenseOrigin { Spatial, SpaceTime, Embedded };

inline constexpr std::size_t kDefaultDenseCap = 4096;

struct DenseCovariance {
  DenseOrigin origin = DenseOrigin::Spatial;
  int n_lon = 0;
  int n_colat = 0;
  int n_time = 1;      // T (or Q for the embedded variant)
  bool has_time = false;
  double sill = 1.0;
  Eigen::MatrixXd entries;
};

/// Full NM x NM covariance, point order matching the samplers (colatitude
/// fastest, then ring). Refuses dimensions above max_dim.
DenseCovariance assemble_dense(const SphereGrid& grid, const SpatialModel& model,
                               std::size_t max_dim = kDefaultDenseCap);

/// Full TNM x TNM space-time covariance (plain lags |t - t'|).
DenseCovariance assemble_dense(const SphereGrid& grid, const TimeGrid& tgrid,
                               const SpaceTimeModel& model,
                               std::size_t max_dim = kDefaultDenseCap);

/// Full QNM x QNM embedded covariance with torus-wrapped lags g(|tau - tau'| mod Q).
DenseCovariance assemble_dense_embedded(const SphereGrid& grid, const TimeGrid& tgrid,
                                        const EmbeddingConfig& cfg,
                                        const SpaceTimeModel& model,
                                        std::size_t max_dim = kDefaultDenseCap);

/// Factor S with S S^T = cov. Triangular (Cholesky) requires strict positive
/// definiteness and throws NotPositiveDefinite otherwise — the pole-degenerate
/// spherical covariance always fails it by design. Eigen clips like the
/// circulant path.
Eigen::MatrixXd dense_factor(const DenseCovariance& cov, FactorMethod method,
                             double clip_tol = 1e-12);

/// Y = S Z with Z standard normal; deterministic per seed.
std::vector<FieldRealization> dense_sample(const DenseCovariance& cov,
                                           const Eigen::MatrixXd& factor,
                                           std::uint64_t seed, int count);

}  // namespace sgrf

#endif
