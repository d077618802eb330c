#ifndef SGRF_RNG_HPP
#define SGRF_RNG_HPP

#include <array>
#include <cstdint>
#include <utility>

namespace sgrf {

/// Philox4x64-10 counter-based block function (Salmon et al., SC'11 constants).
/// Stateless: each (counter, key) pair maps to four 64-bit words, so any
/// coordinate of the random stream can be generated independently.
struct Philox4x64 {
  static std::array<std::uint64_t, 4> block(std::array<std::uint64_t, 4> counter,
                                            std::array<std::uint64_t, 2> key);
};

/// Standard normal quantile function, algorithm AS 241 (PPND16).
/// Accurate to ~1e-16 relative over the full double range of p in (0, 1).
double inverse_normal_cdf(double p);

/// Map 64 random bits to a uniform double in the open interval (0, 1)
/// with 53-bit resolution; never returns 0 or 1.
double uniform_from_bits(std::uint64_t bits);

// Stream domain tags keep samplers on disjoint substreams of the same seed.
inline constexpr std::uint64_t kStreamSphere = 1;
inline constexpr std::uint64_t kStreamSphereTime = 2;
inline constexpr std::uint64_t kStreamDense = 3;

/// Deterministic N(0,1) source addressed by (block, index): draw k of
/// replicate block b is Philox(counter = {b, k}, key = {seed, domain}) pushed
/// through the inverse normal CDF. Replicates can therefore be generated out
/// of order or in parallel with bit-identical results.
class NormalStream {
public:
  NormalStream(std::uint64_t seed, std::uint64_t domain) : key_{seed, domain} {}

  /// Two independent N(0,1) values (used as real/imaginary parts of one
  /// complex draw).
  std::pair<double, double> normal_pair(std::uint64_t block, std::uint64_t index) const;

  /// One N(0,1) value.
  double normal(std::uint64_t block, std::uint64_t index) const;

private:
  std::array<std::uint64_t, 2> key_;
};

}  // namespace sgrf

#endif
