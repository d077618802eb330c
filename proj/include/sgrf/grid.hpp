#ifndef SGRF_GRID_HPP
#define SGRF_GRID_HPP

#include <array>
#include <cstddef>
#include <vector>

namespace sgrf {

/// A single grid location, with its Cartesian embedding on the unit sphere.
struct GridPoint {
  double longitude = 0.0;   // radians, in (0, 2*pi]
  double colatitude = 0.0;  // radians, in (0, pi]
  std::array<double, 3> cartesian{0.0, 0.0, 0.0};
};

/// Regular longitude x colatitude lattice on the unit sphere.
///
/// Longitudes are 2*pi*i/N for i = 1..N and colatitudes pi*j/M for j = 1..M,
/// so the south pole (colatitude pi) appears once per ring and the north pole
/// is not a grid point. Point (ring, colat) accessors are 0-based.
class SphereGrid {
public:
  SphereGrid(int n_lon, int n_colat);

  int n_lon() const { return n_lon_; }
  int n_colat() const { return n_colat_; }
  std::size_t size() const { return static_cast<std::size_t>(n_lon_) * n_colat_; }

  const std::vector<double>& longitudes() const { return longitudes_; }
  const std::vector<double>& colatitudes() const { return colatitudes_; }

  GridPoint point(int ring, int colat) const;

private:
  int n_lon_;
  int n_colat_;
  std::vector<double> longitudes_;
  std::vector<double> colatitudes_;
};

/// Regular time grid t_tau = tau*H/T for tau = 1..T.
class TimeGrid {
public:
  TimeGrid(int steps, double horizon);

  int steps() const { return steps_; }
  double horizon() const { return horizon_; }
  double step() const { return horizon_ / steps_; }
  const std::vector<double>& times() const { return times_; }

private:
  int steps_;
  double horizon_;
  std::vector<double> times_;
};

/// Great-circle angle between two points, in [0, pi]. The inner-product
/// argument is clamped to [-1, 1] so near-coincident points cannot produce NaN.
double geodesic_distance(double lon_a, double colat_a, double lon_b, double colat_b);
double geodesic_distance(const GridPoint& a, const GridPoint& b);

}  // namespace sgrf

#endif
