#ifndef SGRF_ERRORS_HPP
#define SGRF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sgrf {

/// Spectral blocks came out complex: the input was not an even block-circulant
/// row (wrong grid, or a covariance that is not isotropic in longitude).
class RealnessViolation : public std::runtime_error {
public:
  explicit RealnessViolation(const std::string& what) : std::runtime_error(what) {}
};

/// A spectral block has an eigenvalue far below zero, beyond anything rounding
/// can produce; the covariance model is not positive semi-definite.
class IndefiniteBlocks : public std::runtime_error {
public:
  explicit IndefiniteBlocks(const std::string& what) : std::runtime_error(what) {}
};

/// Triangular factorization was requested on a matrix that is not strictly
/// positive definite.
class NotPositiveDefinite : public std::runtime_error {
public:
  explicit NotPositiveDefinite(const std::string& what) : std::runtime_error(what) {}
};

/// A field file failed to parse; the message names the byte offset.
class FormatError : public std::runtime_error {
public:
  explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sgrf

#endif
