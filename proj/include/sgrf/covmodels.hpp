#ifndef SGRF_COVMODELS_HPP
#define SGRF_COVMODELS_HPP

#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <variant>

namespace sgrf {

enum class SpatialFamily { Exponential, GeneralizedCauchy, Matern };

/// Validated isotropic correlation model on the sphere, with sill sigma^2.
///
/// Catalog (theta in [0, pi]):
///   exponential          r(theta) = exp(-theta/phi0)
///   generalized Cauchy   r(theta) = (1 + (theta/phi1)^alpha)^(-beta/alpha),
///                        alpha in (0,1], beta > 0
///   Matern               r(theta) = 2^(1-nu)/Gamma(nu) (theta/phi2)^nu
///                                   K_nu(theta/phi2),  nu in (0, 1/2]
/// The Matern smoothness is restricted to (0, 1/2], the range on which the
/// model is positive definite with the geodesic distance.
class SpatialModel {
public:
  static SpatialModel exponential(double range, double sill = 1.0);
  static SpatialModel generalized_cauchy(double range, double alpha, double beta,
                                         double sill = 1.0);
  static SpatialModel matern(double range, double smoothness, double sill = 1.0);

  /// r(theta); rejects theta outside [0, pi].
  double correlation(double theta) const;
  /// sigma^2 * r(theta)
  double covariance(double theta) const { return sill_ * correlation(theta); }
  /// gamma(theta) = sigma^2 * (1 - r(theta))
  double variogram(double theta) const { return sill_ * (1.0 - correlation(theta)); }

  SpatialFamily family() const { return family_; }
  double sill() const { return sill_; }
  double range() const { return range_; }
  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  double smoothness() const { return smoothness_; }

private:
  SpatialModel() = default;
  SpatialFamily family_ = SpatialFamily::Exponential;
  double range_ = 1.0;
  double alpha_ = 0.0;
  double beta_ = 0.0;
  double smoothness_ = 0.0;
  double sill_ = 1.0;
};

/// Temporal correlation g(u) with g(0) = 1 and |g| <= 1.
class TemporalCorrelation {
public:
  enum class Kind { Exponential, Cauchy };

  /// g(u) = exp(-u/c0)
  static TemporalCorrelation exponential(double scale);
  /// g(u) = 1 / (1 + (u/c1)^2)
  static TemporalCorrelation cauchy(double scale);

  double operator()(double u) const;
  Kind kind() const { return kind_; }
  double scale() const { return scale_; }

private:
  TemporalCorrelation(Kind kind, double scale);
  Kind kind_;
  double scale_;
};

/// Spatially isotropic, temporally stationary covariance family
///   C(theta, u) = sigma^2 * ((1 - delta) / (1 - delta g(u) cos theta))^tau
/// with delta in (0, 1), tau > 0, and g from the temporal catalog.
class SpaceTimeModel {
public:
  SpaceTimeModel(double delta, double exponent, TemporalCorrelation temporal,
                 double sill = 1.0);

  /// C(theta, u) / sigma^2; rejects theta outside [0, pi] or u < 0.
  double correlation(double theta, double u) const;
  double covariance(double theta, double u) const { return sill_ * correlation(theta, u); }
  double variogram(double theta, double u) const { return sill_ * (1.0 - correlation(theta, u)); }

  double delta() const { return delta_; }
  double exponent() const { return exponent_; }
  const TemporalCorrelation& temporal() const { return temporal_; }
  double sill() const { return sill_; }

private:
  double delta_;
  double exponent_;
  TemporalCorrelation temporal_;
  double sill_;
};

/// Solve r(theta_star) = r_star for the free parameter of a monotone family.
/// `family` maps a candidate parameter to the model it induces; the root is
/// bracketed in [1e-8, 1e4] and bisected until the correlation matches within
/// 1e-10. Throws std::invalid_argument when r_star is outside (0,1) or the
/// bracket does not contain a root.
double calibrate_range(const std::function<SpatialModel(double)>& family,
                       double theta_star, double r_star);

using AnyModel = std::variant<SpatialModel, SpaceTimeModel>;

/// Build a model from key=value pairs. Recognized keys: model, sill, phi0,
/// phi1, alpha, beta, phi2, nu, delta, tau, c0, c1, gkind. `model` is one of
/// exp, cauchy, matern, st (with gkind = exp|cauchy), st-exp, st-cauchy.
AnyModel parse_model_spec(const std::map<std::string, std::string>& kv);

/// Same, reading `key=value` lines ('#' starts a comment).
AnyModel parse_model_config(std::istream& in);

}  // namespace sgrf

#endif
