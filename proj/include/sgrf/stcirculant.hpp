#ifndef SGRF_STCIRCULANT_HPP
#define SGRF_STCIRCULANT_HPP

#include <Eigen/Core>
#include <complex>
#include <cstdint>
#include <vector>

#include "sgrf/circulant.hpp"
#include "sgrf/covmodels.hpp"
#include "sgrf/field.hpp"
#include "sgrf/grid.hpp"

namespace sgrf {

/// Padding factor for the torus-wrapped temporal embedding. The embedded
/// time axis has length Q = 2*kappa*T, the period on which the reflected lag
/// map is even.
struct EmbeddingConfig {
  int kappa = 1;

  explicit EmbeddingConfig(int kappa_ = 1);
  int embedded_length(const TimeGrid& tgrid) const { return 2 * kappa * tgrid.steps(); }
};

/// Reflected ("tent") lag map g: g(tau) = tau*H/T for tau <= kappa*T and
/// (2*kappa*T - tau)*H/T beyond, so lags wrap smoothly around the torus.
/// Valid for 0 <= tau <= 2*kappa*T - 1; out-of-range tau is rejected.
double reflect_time(int tau, int steps, double horizon, int kappa);

/// First block row of the embedded covariance: entry (tau, k) is the M x M
/// block Psi_{1,k}(g(tau)) for tau = 0..Q-1, k = 1..N.
struct SpaceTimeBlockRow {
  int n_time = 0;     // Q
  int n_blocks = 0;   // N
  int block_size = 0; // M
  std::vector<Eigen::MatrixXd> blocks;  // index tau * N + k

  const Eigen::MatrixXd& block(int tau, int k) const { return blocks[static_cast<std::size_t>(tau) * n_blocks + k]; }
  Eigen::MatrixXd& block(int tau, int k) { return blocks[static_cast<std::size_t>(tau) * n_blocks + k]; }
};

/// Q*N spectral blocks Upsilon_q from the 2-D DFT over the (tau, k) axes,
/// plus their square roots.
struct SpaceTimeSpectralBlocks {
  int n_time = 0;
  int n_blocks = 0;
  int block_size = 0;
  std::vector<Eigen::MatrixXd> upsilon;
  std::vector<Eigen::MatrixXd> sqrt_upsilon;
  double max_imag_residue = 0.0;
  double max_abs_upsilon = 0.0;
  ClipReport clip;
  // set when clipped mass exceeds 1% of the trace: the embedding is far from
  // PSD and a larger kappa is advised
  bool large_clip_warning = false;

  bool has_sqrt() const { return !sqrt_upsilon.empty(); }
};

/// O(Q N M^2) covariance evaluations; nothing larger is materialized.
SpaceTimeBlockRow assemble_st_block_row(const SphereGrid& grid, const TimeGrid& tgrid,
                                        const EmbeddingConfig& cfg,
                                        const SpaceTimeModel& model);

/// Entrywise 2-D unnormalized forward DFT over the (tau, k) axes. Realness
/// checked as in block_diagonalize.
SpaceTimeSpectralBlocks st_block_diagonalize(const SpaceTimeBlockRow& row);

/// Same clipping policy as the spatial path, except that a heavily clipped
/// embedding (clipped mass > 1% of trace) sets large_clip_warning instead of
/// failing; the remedy is a larger kappa.
void compute_sqrt_blocks(SpaceTimeSpectralBlocks& spectral, double clip_tol = 1e-12,
                         FactorMethod method = FactorMethod::Eigen);

/// The embedded sampling map S = (NQ)^{-1/2} (2-D inverse-direction DFT over
/// block axes) Upsilon^{1/2} applied to a stacked complex vector of length
/// Q*N*M; S S^* equals the embedded covariance.
std::vector<std::complex<double>> apply_st_factor(const SpaceTimeSpectralBlocks& spectral,
                                                  const std::vector<std::complex<double>>& z);

/// Sample the embedded torus and keep the first T time blocks; each complex
/// draw yields two independent T x N x M fields with law N(0, Psi).
std::vector<FieldRealization> sample_spheretime(const SpaceTimeSpectralBlocks& spectral,
                                                const SphereGrid& grid, const TimeGrid& tgrid,
                                                const EmbeddingConfig& cfg,
                                                std::uint64_t seed, int count);

}  // namespace sgrf

#endif
