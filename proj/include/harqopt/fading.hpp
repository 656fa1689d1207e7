#pragma once

#include <cmath>
#include <limits>
#include <numbers>

#include "harqopt/errors.hpp"
#include "harqopt/rng.hpp"
#include "harqopt/scenario.hpp"
#include "harqopt/special_functions.hpp"

// Distribution of the per-block decodable bits c = L * log2(1 + S * |z|^2 * p)
// where the fading power |z|^2 follows the Gamma(shape, rate) law of the
// configured model. Alongside the exact density/CDF, this module provides the
// power-relaxed versions in which the transmit power inside the exponential
// decay is replaced by the cap P; those are the building blocks of the
// monomial outage bounds.

namespace harqopt {

/// Law of the decodable bits contributed by one block.
struct RateDistribution {
  FadingModel model;
  double block_length = 1.0;
  double snr = 1.0;
  double power = 1.0;
  double power_cap = 1.0;

  RateDistribution(FadingModel m, double length, double s, double p, double cap)
      : model(m), block_length(length), snr(s), power(p), power_cap(cap) {
    m.validate();
    if (!(block_length > 0.0)) throw ValidationError("block_length: must be positive");
    if (!(snr > 0.0)) throw ValidationError("snr: must be positive");
    if (!(power > 0.0)) throw ValidationError("power: must be positive");
    if (!(power_cap >= power)) throw ValidationError("power_cap: must be >= power");
  }

  /// Fading-power threshold (2^(x/L) - 1) / (S p): the block fails to carry x
  /// bits exactly when |z|^2 falls below this value.
  double power_threshold(double x) const {
    return std::expm1(x * std::numbers::ln2 / block_length) / (snr * power);
  }

  /// Same threshold with the cap P in place of the actual power.
  double relaxed_power_threshold(double x) const {
    return std::expm1(x * std::numbers::ln2 / block_length) / (snr * power_cap);
  }

  double threshold_derivative(double x) const {
    return std::exp2(x / block_length) * std::numbers::ln2 / (block_length * snr * power);
  }
};

/// CDF of the per-block bits at x >= 0.
inline double rate_cdf(const RateDistribution& d, double x) {
  if (!(x >= 0.0)) throw std::domain_error("rate_cdf: x must be nonnegative");
  const double shape = d.model.power_shape();
  const double rate = d.model.power_rate();
  return regularized_gamma_p(shape, rate * d.power_threshold(x));
}

/// Density of the per-block bits at x >= 0. For Nakagami shapes below 1 the
/// density diverges as x^(shape-1) at the origin; the value +inf is returned
/// there and the cell mass over [0,x] is available exactly as rate_cdf(d,x).
inline double rate_pdf(const RateDistribution& d, double x) {
  if (!(x >= 0.0)) throw std::domain_error("rate_pdf: x must be nonnegative");
  const double shape = d.model.power_shape();
  const double rate = d.model.power_rate();
  const double u = d.power_threshold(x);
  const double du = d.threshold_derivative(x);
  if (u == 0.0) {
    if (shape > 1.0) return 0.0;
    if (shape == 1.0) return rate * du;
    return std::numeric_limits<double>::infinity();
  }
  return std::exp(shape * std::log(rate) + (shape - 1.0) * std::log(u) - rate * u -
                  lgamma_fn(shape)) *
         du;
}

/// Density with the cap P substituted into the exponential decay; dominates
/// rate_pdf pointwise, with equality iff power == power_cap.
inline double relaxed_rate_pdf(const RateDistribution& d, double x) {
  if (!(x >= 0.0)) throw std::domain_error("relaxed_rate_pdf: x must be nonnegative");
  const double shape = d.model.power_shape();
  const double rate = d.model.power_rate();
  const double u = d.power_threshold(x);
  const double uhat = d.relaxed_power_threshold(x);
  const double du = d.threshold_derivative(x);
  if (u == 0.0) {
    if (shape > 1.0) return 0.0;
    if (shape == 1.0) return rate * du;
    return std::numeric_limits<double>::infinity();
  }
  return std::exp(shape * std::log(rate) + (shape - 1.0) * std::log(u) - rate * uhat -
                  lgamma_fn(shape)) *
         du;
}

/// Integral of relaxed_rate_pdf over [0,x]: (P/p)^shape * Preg(shape, rate*uhat).
/// Not a CDF; it may exceed 1 and serves as the per-block bound factor.
inline double relaxed_rate_cdf(const RateDistribution& d, double x) {
  if (!(x >= 0.0)) throw std::domain_error("relaxed_rate_cdf: x must be nonnegative");
  const double shape = d.model.power_shape();
  const double rate = d.model.power_rate();
  return std::pow(d.power_cap / d.power, shape) *
         regularized_gamma_p(shape, rate * d.relaxed_power_threshold(x));
}

/// One draw of the fading power |z|^2 under the given model.
inline double sample_fading_power(const FadingModel& model, StreamRng& rng) {
  switch (model.family) {
    case FadingModel::Family::Rayleigh:
      return sample_exponential(rng);
    case FadingModel::Family::RayleighDiversity: {
      double sum = 0.0;
      for (int i = 0; i < model.antennas; ++i) sum += sample_exponential(rng);
      return sum;
    }
    case FadingModel::Family::Nakagami:
    case FadingModel::Family::Rician: {
      const double shape = model.power_shape();
      return sample_gamma(rng, shape) / model.power_rate();
    }
  }
  return sample_exponential(rng);
}

/// One draw of the decodable bits of a block.
inline double sample_rate(const RateDistribution& d, StreamRng& rng) {
  const double lambda = sample_fading_power(d.model, rng);
  return d.block_length * std::log2(1.0 + d.snr * lambda * d.power);
}

}  // namespace harqopt
