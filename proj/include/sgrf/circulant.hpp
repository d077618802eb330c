#ifndef SGRF_CIRCULANT_HPP
#define SGRF_CIRCULANT_HPP

#include <Eigen/Core>
#include <complex>
#include <cstdint>
#include <vector>

#include "sgrf/covmodels.hpp"
#include "sgrf/field.hpp"
#include "sgrf/grid.hpp"

namespace sgrf {

/// First block row [Sigma_1 ... Sigma_N] of the block circulant covariance;
/// block i holds cov(X_1, X_i) between colatitude vectors of rings 1 and i.
struct BlockRow {
  int n_blocks = 0;   // N
  int block_size = 0; // M
  std::vector<Eigen::MatrixXd> blocks;
};

/// What eigenvalue clipping did while taking block square roots.
struct ClipReport {
  std::size_t clipped = 0;      // eigenvalues replaced by zero
  double most_negative = 0.0;   // most negative pre-clip eigenvalue (0 if none)
  double threshold = 0.0;       // absolute clip threshold applied
  double clipped_mass = 0.0;    // sum of |clipped eigenvalues|
  double total_trace = 0.0;     // sum of all block traces
};

enum class FactorMethod {
  Eigen,     // symmetric eigendecomposition with PSD clipping (default)
  Cholesky,  // triangular; fails loudly on semi-definite blocks
};

/// Spectral blocks Lambda_i = DFT of the block row, and their square roots.
struct SpectralBlocks {
  int n_blocks = 0;
  int block_size = 0;
  std::vector<Eigen::MatrixXd> lambda;
  std::vector<Eigen::MatrixXd> sqrt_lambda;  // empty until compute_sqrt_blocks
  double max_imag_residue = 0.0;  // largest |imag| discarded from the DFT output
  double max_abs_lambda = 0.0;    // largest |entry| of the DFT output (scale)
  ClipReport clip;

  bool has_sqrt() const { return !sqrt_lambda.empty(); }
};

/// Evaluate [Sigma_i]_{j,l} = sigma^2 r(theta(s_{1j}, s_{il})) for all blocks.
/// O(N M^2) covariance evaluations; the full NM x NM matrix is never formed.
BlockRow assemble_block_row(const SphereGrid& grid, const SpatialModel& model);

/// Entrywise length-N forward DFT of the block row (unnormalized, exponent
/// w = e^{-2 pi i / N}). Throws RealnessViolation when the imaginary residue
/// exceeds 1e-8 of the block-row magnitude, which signals a non-circulant
/// input rather than rounding.
SpectralBlocks block_diagonalize(const BlockRow& row);

/// Factor each Lambda_i so that sqrt_lambda[i] * sqrt_lambda[i]^T = Lambda_i.
/// With FactorMethod::Eigen, eigenvalues below clip_tol * (largest eigenvalue
/// over all blocks) are set to zero and reported; an eigenvalue below
/// -1e-6 * max signals an invalid model and throws IndefiniteBlocks.
/// FactorMethod::Cholesky throws NotPositiveDefinite on semi-definite blocks.
void compute_sqrt_blocks(SpectralBlocks& spectral, double clip_tol = 1e-12,
                         FactorMethod method = FactorMethod::Eigen);

/// The sampling map S = N^{-1/2} (F_N^* ⊗ I_M) Lambda^{1/2} applied to a
/// stacked complex vector z of length N*M (ring-major, colatitude fastest).
/// S satisfies S S^* = Sigma. Exposed so tests can materialize S column by
/// column.
std::vector<std::complex<double>> apply_factor(const SpectralBlocks& spectral,
                                               const std::vector<std::complex<double>>& z);

/// Draw `count` independent realizations with law N(0, Sigma). Each complex
/// normal draw yields two independent fields (real and imaginary parts), so
/// ceil(count/2) draws are consumed. Deterministic in (seed, count).
std::vector<FieldRealization> sample_sphere(const SpectralBlocks& spectral,
                                            std::uint64_t seed, int count);

}  // namespace sgrf

#endif
