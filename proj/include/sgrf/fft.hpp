#ifndef SGRF_FFT_HPP
#define SGRF_FFT_HPP

#include <complex>
#include <cstddef>

namespace sgrf::fft {

/// FFTW-aligned complex buffer (SIMD alignment keeps plans, and therefore
/// results, reproducible run to run).
class ComplexBuffer {
public:
  explicit ComplexBuffer(std::size_t n);
  ~ComplexBuffer();
  ComplexBuffer(const ComplexBuffer&) = delete;
  ComplexBuffer& operator=(const ComplexBuffer&) = delete;

  std::complex<double>* data() { return data_; }
  const std::complex<double>* data() const { return data_; }
  std::size_t size() const { return size_; }
  std::complex<double>& operator[](std::size_t i) { return data_[i]; }
  const std::complex<double>& operator[](std::size_t i) const { return data_[i]; }

private:
  std::complex<double>* data_;
  std::size_t size_;
};

inline constexpr int kForward = -1;   // exponent sign -2*pi*i/N, as in F_N
inline constexpr int kBackward = +1;  // conjugate direction

/// In-place unnormalized DFT of length `n` along the leading axis of data laid
/// out as [n][stride]: `stride` independent transforms whose elements are
/// `stride` apart.
void transform_axis(std::complex<double>* data, int n, int stride, int sign);

/// In-place unnormalized 2-D DFT over the two leading axes of data laid out as
/// [n0][n1][stride].
void transform_axes2(std::complex<double>* data, int n0, int n1, int stride, int sign);

}  // namespace sgrf::fft

#endif
