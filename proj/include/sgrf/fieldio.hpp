#ifndef SGRF_FIELDIO_HPP
#define SGRF_FIELDIO_HPP

#include <filesystem>
#include <iosfwd>

#include "sgrf/field.hpp"

namespace sgrf {

// Binary field format, little-endian throughout:
//   offset  0  magic "SGRF"
//   offset  4  u32 version (1)
//   offset  8  u32 flags (bit 0: space-time)
//   offset 12  u32 N   (longitudes)
//   offset 16  u32 M   (colatitudes)
//   offset 20  u32 T   (time steps; 1 for spatial)
//   offset 24  u64 seed
//   offset 32  N*M*T float64 values, colatitude fastest, then ring, then time
inline constexpr std::uint32_t kFieldFormatVersion = 1;

void write_field(const std::filesystem::path& path, const FieldRealization& field);

/// Throws FormatError naming the byte offset of the first malformed content.
FieldRealization read_field(const std::filesystem::path& path);

/// CSV rows lon_deg,colat_deg[,time],value in storage order. Times are
/// tau*horizon/T for tau = 1..T; horizon defaults to T (unit steps) when <= 0.
void write_field_csv(std::ostream& out, const FieldRealization& field, double horizon = 0.0);

}  // namespace sgrf

#endif
