#ifndef SGRF_VARIOGRAM_HPP
#define SGRF_VARIOGRAM_HPP

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "sgrf/field.hpp"
#include "sgrf/grid.hpp"

namespace sgrf {

struct VariogramBin {
  double theta = 0.0;
  double u = 0.0;          // 0 for purely spatial estimates
  double gamma = 0.0;
  std::size_t pairs = 0;   // unordered point pairs in the window
};

/// Binned nonparametric variogram. Bins with zero pairs are omitted.
struct VariogramEstimate {
  std::vector<VariogramBin> bins;
  double bandwidth = 0.0;       // spatial half-width l
  double time_bandwidth = 0.0;  // temporal half-width l' (space-time only)
  bool spacetime = false;
};

/// 20 equispaced bin centers covering (0, pi).
std::vector<double> default_theta_bins();
/// Default spatial bandwidth, pi/40.
double default_bandwidth();
/// Temporal bin centers at the observed lag multiples 0, H/T, ..., (T-1)H/T.
std::vector<double> default_u_bins(const TimeGrid& tgrid);

// Pair enumeration is O(n^2); estimation refuses grids beyond this many points.
inline constexpr std::size_t kVariogramPointCap = 20000;

/// gamma_hat(theta) = sum of squared increments over unordered pairs whose
/// geodesic distance is within `bandwidth` of the bin center, divided by twice
/// the pair count, so that E[gamma_hat] = sigma^2 (1 - r). Coincident pole
/// copies participate like any other pair (they only reach the theta = 0 bin).
VariogramEstimate empirical_variogram(const FieldRealization& field, const SphereGrid& grid,
                                      std::span<const double> centers, double bandwidth);

/// Mean of the estimator over replicate fields (single pair sweep, so it is
/// much cheaper than averaging separate estimates).
VariogramEstimate mean_variogram(std::span<const FieldRealization> fields,
                                 const SphereGrid& grid, std::span<const double> centers,
                                 double bandwidth);

/// Space-time estimator over unordered pairs of (point, time) sites with
/// |theta - theta_c| <= l and ||t1 - t2| - u_c| <= l'. The u = 0 bins give the
/// spatial margin; the theta = 0 bins (coincident points, i.e. pole copies)
/// give the temporal margin.
VariogramEstimate empirical_st_variogram(const FieldRealization& field, const SphereGrid& grid,
                                         const TimeGrid& tgrid,
                                         std::span<const double> theta_centers,
                                         std::span<const double> u_centers, double bandwidth,
                                         double time_bandwidth);

VariogramEstimate mean_st_variogram(std::span<const FieldRealization> fields,
                                    const SphereGrid& grid, const TimeGrid& tgrid,
                                    std::span<const double> theta_centers,
                                    std::span<const double> u_centers, double bandwidth,
                                    double time_bandwidth);

/// CSV with columns theta,u,gamma,count (u left empty for spatial estimates).
void write_variogram_csv(std::ostream& out, const VariogramEstimate& est);

}  // namespace sgrf

#endif
