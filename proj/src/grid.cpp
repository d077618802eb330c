#include "sgrf/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace sgrf {

namespace {
constexpr double kPi = std::numbers::pi;
}

SphereGrid::SphereGrid(int n_lon, int n_colat) : n_lon_(n_lon), n_colat_(n_colat) {
  if (n_lon < 2 || n_colat < 2) {
    throw std::invalid_argument("SphereGrid: need N >= 2 longitudes and M >= 2 colatitudes, got N=" +
                                std::to_string(n_lon) + " M=" + std::to_string(n_colat));
  }
  longitudes_.resize(n_lon);
  for (int i = 0; i < n_lon; ++i) longitudes_[i] = 2.0 * kPi * (i + 1) / n_lon;
  colatitudes_.resize(n_colat);
  for (int j = 0; j < n_colat; ++j) colatitudes_[j] = kPi * (j + 1) / n_colat;
}

GridPoint SphereGrid::point(int ring, int colat) const {
  if (ring < 0 || ring >= n_lon_ || colat < 0 || colat >= n_colat_) {
    throw std::out_of_range("SphereGrid::point: index (" + std::to_string(ring) + ", " +
                            std::to_string(colat) + ") outside " + std::to_string(n_lon_) + " x " +
                            std::to_string(n_colat_));
  }
  const double lam = longitudes_[ring];
  const double phi = colatitudes_[colat];
  return GridPoint{lam, phi,
                   {std::cos(lam) * std::sin(phi), std::sin(lam) * std::sin(phi), std::cos(phi)}};
}

TimeGrid::TimeGrid(int steps, double horizon) : steps_(steps), horizon_(horizon) {
  if (steps < 1) throw std::invalid_argument("TimeGrid: need T >= 1, got " + std::to_string(steps));
  if (!(horizon > 0.0)) throw std::invalid_argument("TimeGrid: need horizon H > 0");
  times_.resize(steps);
  for (int t = 0; t < steps; ++t) times_[t] = (t + 1) * horizon / steps;
}

double geodesic_distance(double lon_a, double colat_a, double lon_b, double colat_b) {
  const double c = std::sin(colat_a) * std::sin(colat_b) * std::cos(lon_b - lon_a) +
                   std::cos(colat_a) * std::cos(colat_b);
  return std::acos(std::clamp(c, -1.0, 1.0));
}

double geodesic_distance(const GridPoint& a, const GridPoint& b) {
  return geodesic_distance(a.longitude, a.colatitude, b.longitude, b.colatitude);
}

}  // namespace sgrf
