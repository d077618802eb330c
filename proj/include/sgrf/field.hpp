#ifndef SGRF_FIELD_HPP
#define SGRF_FIELD_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace sgrf {

/// Which of the two independent fields obtained from one complex draw.
enum class PairId : std::uint8_t { A = 0, B = 1 };

/// A sampled field on the grid, values indexed (time, ring, colatitude) with
/// colatitude fastest — the same ordering as the stacked vector the samplers
/// operate on.
struct FieldRealization {
  int n_lon = 0;
  int n_colat = 0;
  int n_time = 1;
  bool has_time = false;  // distinguishes a T=1 space-time field from a spatial one
  std::uint64_t seed = 0;
  std::uint32_t replicate = 0;
  PairId pair = PairId::A;
  std::vector<double> values;

  std::size_t size() const { return values.size(); }

  double& at(int t, int ring, int colat) {
    return values[(static_cast<std::size_t>(t) * n_lon + ring) * n_colat + colat];
  }
  double at(int t, int ring, int colat) const {
    return values[(static_cast<std::size_t>(t) * n_lon + ring) * n_colat + colat];
  }
  double& at(int ring, int colat) { return at(0, ring, colat); }
  double at(int ring, int colat) const { return at(0, ring, colat); }
};

}  // namespace sgrf

#endif
