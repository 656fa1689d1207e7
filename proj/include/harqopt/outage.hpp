#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

#include "harqopt/density_grid.hpp"
#include "harqopt/errors.hpp"
#include "harqopt/fading.hpp"
#include "harqopt/scenario.hpp"
#include "harqopt/special_functions.hpp"

// Outage probabilities for HARQ with incremental redundancy are CDFs of sums
// of per-block rates, evaluated here by successive numerical convolution of
// closed-form kernels. The same machinery, run on power-stripped kernels,
// yields the coefficients A_n of the monomial upper bounds; the classic
// (unbounded-power) coefficients are the P -> inf limits of those kernels.
// Chase combining accumulates energy instead and admits closed forms.

namespace harqopt {

enum class BoundFlavor { NewBound, ClassicBound };

/// Coefficients A_1..A_N of a monomial outage bound: the bound after block n
/// is A_n / prod_{i<=n} p_i^exponent.
struct BoundSet {
  std::vector<double> coefficients;
  double exponent = 1.0;  // 1 for Rayleigh, kappa for Nakagami, M for diversity
  BoundFlavor flavor = BoundFlavor::NewBound;
};

namespace detail {

// One convolution stage in closed form:
//   value(x) = coeff * w^(shape-1) * (1+w) * exp(-decay * w),  w = 2^(x/length) - 1.
// Substituting w gives the exact cell mass
//   integral_0^x value = coeff * length/ln2 * gamma(shape, decay*w) / decay^shape,
// which also covers the decay = 0 (classic) limit.
struct StageKernel {
  double coeff = 1.0;
  double shape = 1.0;
  double decay = 0.0;
  double length = 1.0;

  double value(double x) const {
    const double w = std::expm1(x * std::numbers::ln2 / length);
    double body;
    if (w == 0.0) {
      if (shape > 1.0) return 0.0;
      if (shape == 1.0) body = 1.0;
      else return std::numeric_limits<double>::infinity();
    } else {
      body = std::pow(w, shape - 1.0);
    }
    return coeff * body * (1.0 + w) * std::exp(-decay * w);
  }

  double mass(double x) const {
    const double w = std::expm1(x * std::numbers::ln2 / length);
    const double scale = coeff * length / std::numbers::ln2;
    if (decay <= 0.0) return scale * std::pow(w, shape) / shape;
    return scale * regularized_gamma_p(shape, decay * w) * gamma_fn(shape) /
           std::pow(decay, shape);
  }
};

// Head of a chain (the CDF-like first factor):
//   coeff * Preg(shape, beta * w)   for beta > 0,
//   coeff * w^shape                 for the classic beta -> 0 form.
struct HeadFunction {
  double coeff = 1.0;
  double shape = 1.0;
  double beta = 1.0;  // 0 marks the classic limiting form
  double length = 1.0;

  double value(double x) const {
    const double w = std::expm1(x * std::numbers::ln2 / length);
    if (beta > 0.0) return coeff * regularized_gamma_p(shape, beta * w);
    return coeff * std::pow(w, shape);
  }
};

enum class ChainFlavor {
  Exact,            // F_1 * f_2 * ... with the actual schedule
  Relaxed,          // hat F_1 * hat f_2 * ... with the actual schedule
  Stripped,         // power factored out: yields the bound coefficients A_n
  ClassicStripped,  // P -> inf limit of Stripped: classic coefficients A'_n
};

inline HeadFunction make_head(ChainFlavor flavor, const FadingModel& fading, double length,
                              double snr, double power, double power_cap) {
  const double s = fading.power_shape();
  const double a = fading.power_rate();
  HeadFunction h;
  h.shape = s;
  h.length = length;
  switch (flavor) {
    case ChainFlavor::Exact:
      h.coeff = 1.0;
      h.beta = a / (snr * power);
      break;
    case ChainFlavor::Relaxed:
      h.coeff = std::pow(power_cap / power, s);
      h.beta = a / (snr * power_cap);
      break;
    case ChainFlavor::Stripped:
      h.coeff = std::pow(power_cap, s);
      h.beta = a / (snr * power_cap);
      break;
    case ChainFlavor::ClassicStripped:
      h.coeff = std::pow(a / snr, s) / gamma_fn(s + 1.0);
      h.beta = 0.0;
      break;
  }
  return h;
}

inline StageKernel make_stage(ChainFlavor flavor, const FadingModel& fading, double length,
                              double snr, double power, double power_cap) {
  const double s = fading.power_shape();
  const double a = fading.power_rate();
  StageKernel k;
  k.shape = s;
  k.length = length;
  switch (flavor) {
    case ChainFlavor::Exact:
      k.coeff = std::exp(s * std::log(a / (snr * power)) - lgamma_fn(s)) * std::numbers::ln2 / length;
      k.decay = a / (snr * power);
      break;
    case ChainFlavor::Relaxed:
      k.coeff = std::exp(s * std::log(a / (snr * power)) - lgamma_fn(s)) * std::numbers::ln2 / length;
      k.decay = a / (snr * power_cap);
      break;
    case ChainFlavor::Stripped:
      k.coeff = std::exp(s * std::log(a / snr) - lgamma_fn(s)) * std::numbers::ln2 / length;
      k.decay = a / (snr * power_cap);
      break;
    case ChainFlavor::ClassicStripped:
      k.coeff = std::exp(s * std::log(a / snr) - lgamma_fn(s)) * std::numbers::ln2 / length;
      k.decay = 0.0;
      break;
  }
  return k;
}

inline DensityGrid sample_head(const HeadFunction& head, double t, int cells) {
  DensityGrid g;
  g.kind = DensityGrid::Kind::CdfLike;
  g.step = t / cells;
  g.values.resize(static_cast<std::size_t>(cells) + 1);
  g.values[0] = 0.0;
  for (int i = 1; i <= cells; ++i) g.values[i] = head.value(i * g.step);
  return g;
}

// Convolution of the accumulated function with the next stage kernel, by
// product integration: every cell contributes its exact closed-form kernel
// mass, applied to the accumulated function at the cell's mass centroid
// (leading-power centroid for the first cell, midpoint elsewhere). This stays
// second-order accurate and absorbs the endpoint singularity of shapes
// below 1.
inline DensityGrid convolve_stage(const DensityGrid& acc, const StageKernel& kernel) {
  const std::size_t n = acc.cells();
  const double step = acc.step;
  DensityGrid out;
  out.kind = acc.kind;
  out.step = step;
  out.values.assign(n + 1, 0.0);

  std::vector<double> cell_mass(n, 0.0);
  double prev = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double next = kernel.mass((i + 1) * step);
    cell_mass[i] = next - prev;
    prev = next;
  }
  // Centroid of the first cell under the leading power x^(shape-1), as the
  // interpolation weight on the accumulator value one node to the left.
  const double first_frac = kernel.shape / (kernel.shape + 1.0);

  const std::vector<double>& u = acc.values;
  for (std::size_t j = 1; j <= n; ++j) {
    double s = 0.0;
    for (std::size_t i = 1; i < j; ++i) s += cell_mass[i] * (u[j - i] + u[j - i - 1]);
    s *= 0.5;
    s += cell_mass[0] * (u[j] + (u[j - 1] - u[j]) * first_frac);
    out.values[j] = s;
  }
  return out;
}

// Runs a chain for one receiver and returns the stage grids (stage n holds
// (head * k_2 * ... * k_n) over [0, t], whose value at x is the stage-n
// quantity at message size x).
inline std::vector<DensityGrid> chain_grids(ChainFlavor flavor, const Receiver& rx,
                                            const std::vector<double>& block_lengths,
                                            const std::vector<double>& powers, double power_cap,
                                            double t, int cells) {
  const std::size_t n = block_lengths.size();
  std::vector<DensityGrid> stages;
  stages.reserve(n);
  const bool stripped =
      flavor == ChainFlavor::Stripped || flavor == ChainFlavor::ClassicStripped;
  const double p1 = stripped ? 1.0 : powers[0];
  DensityGrid g =
      sample_head(make_head(flavor, rx.fading, block_lengths[0], rx.snr, p1, power_cap), t, cells);
  stages.push_back(g);
  for (std::size_t i = 1; i < n; ++i) {
    const double pi = stripped ? 1.0 : powers[i];
    g = convolve_stage(
        g, make_stage(flavor, rx.fading, block_lengths[i], rx.snr, pi, power_cap));
    stages.push_back(g);
  }
  return stages;
}

inline std::vector<double> chain_values(ChainFlavor flavor, const Receiver& rx,
                                        const std::vector<double>& block_lengths,
                                        const std::vector<double>& powers, double power_cap,
                                        double t, int cells) {
  std::vector<double> vals;
  for (const DensityGrid& g : chain_grids(flavor, rx, block_lengths, powers, power_cap, t, cells))
    vals.push_back(g.back());
  return vals;
}

// --- Chase combining: exact CDF of sum p_i * lambda_i at a threshold ---

// Hypoexponential CDF by partial fractions. Reports the largest weight
// magnitude so callers can judge how much cancellation occurred.
inline double hypoexp_cdf_partial_fractions(const std::vector<double>& rates, double theta,
                                            double* max_weight) {
  double acc = 0.0;
  double wmax = 0.0;
  for (std::size_t i = 0; i < rates.size(); ++i) {
    double weight = 1.0;
    for (std::size_t j = 0; j < rates.size(); ++j) {
      if (j == i) continue;
      weight *= rates[j] / (rates[j] - rates[i]);
    }
    wmax = std::max(wmax, std::abs(weight));
    acc += weight * (-std::expm1(-rates[i] * theta));
  }
  if (max_weight) *max_weight = wmax;
  return acc;
}

// Absorption-time CDF of the chain of exponential stages via uniformization.
// All-positive arithmetic, so it is stable for clustered rates; cost scales
// with max(rate) * theta.
inline double hypoexp_cdf_uniformization(const std::vector<double>& rates, double theta) {
  const std::size_t m = rates.size();
  double max_rate = 0.0;
  for (double r : rates) max_rate = std::max(max_rate, r);
  const double big = max_rate * theta;
  if (big > 2e6)
    throw ValidationError(
        "chase combining exact outage: power spread too large for stable evaluation");
  std::vector<double> q(m);
  for (std::size_t i = 0; i < m; ++i) q[i] = rates[i] / max_rate;
  std::vector<double> v(m + 1, 0.0);
  v[0] = 1.0;
  // Poisson weights accumulated in linear scale; log-scale start avoids
  // underflow of exp(-big) for large arguments.
  double log_weight = -big;
  double acc = 0.0;
  double weight_sum = 0.0;
  const auto k_max = static_cast<std::size_t>(big + 40.0 * std::sqrt(big + 1.0) + 60.0);
  for (std::size_t k = 0;; ++k) {
    if (log_weight > -745.0) {
      const double w = std::exp(log_weight);
      acc += w * v[m];
      weight_sum += w;
    }
    if (k >= k_max && weight_sum > 1.0 - 1e-15) break;
    if (k > k_max + 1000) break;
    // one step of the uniformized chain
    for (std::size_t i = m; i-- > 0;) {
      v[i + 1] += v[i] * q[i];
      v[i] *= 1.0 - q[i];
    }
    log_weight += std::log(big) - std::log(static_cast<double>(k + 1));
  }
  return std::min(acc, 1.0);
}

// CDF of sum p_i * Gamma(shape_per_block, rate) fading energies below theta.
inline double cc_energy_cdf(const std::vector<double>& powers, double per_block_shape,
                            double gamma_rate, double theta) {
  const std::size_t n = powers.size();
  double pmin = powers[0], pmax = powers[0];
  for (double p : powers) {
    pmin = std::min(pmin, p);
    pmax = std::max(pmax, p);
  }
  if (pmax - pmin <= 1e-9 * pmax) {
    // Equal powers: the sum is Gamma(n * shape, rate), scaled by p.
    double mean = 0.0;
    for (double p : powers) mean += p;
    mean /= static_cast<double>(n);
    return regularized_gamma_p(static_cast<double>(n) * per_block_shape,
                               gamma_rate * theta / mean);
  }
  const double shape_int = std::round(per_block_shape);
  if (std::abs(per_block_shape - shape_int) > 1e-12)
    throw ValidationError(
        "chase combining exact outage: non-uniform powers need an integer fading shape "
        "(Rayleigh or diversity)");
  const auto mult = static_cast<std::size_t>(shape_int);
  std::vector<double> rates;
  rates.reserve(n * mult);
  for (double p : powers)
    for (std::size_t j = 0; j < mult; ++j) rates.push_back(gamma_rate / p);
  if (mult == 1) {
    double wmax = 0.0;
    const double f = hypoexp_cdf_partial_fractions(rates, theta, &wmax);
    // Accept the closed form only while cancellation leaves enough digits;
    // ties and the deep tail fall through to the stable series.
    if (std::isfinite(f) && f >= wmax * 1e-10 && f <= 1.0 + 1e-9) return std::min(f, 1.0);
  }
  return hypoexp_cdf_uniformization(rates, theta);
}

inline double cc_exact_outage_one(const Receiver& rx, double block_length, double t,
                                  const std::vector<double>& powers) {
  const double theta = std::expm1(t * std::numbers::ln2 / block_length) / rx.snr;
  return cc_energy_cdf(powers, rx.fading.power_shape(), rx.fading.power_rate(), theta);
}

inline std::vector<double> schedule_prefix(const PowerSchedule& s, std::size_t n) {
  return std::vector<double>(s.powers.begin(), s.powers.begin() + n);
}

}  // namespace detail

/// Exact outage probabilities Q_1..Q_N for the given schedule. For broadcast
/// scenarios this is the union outage across receivers (fading is independent
/// between receivers).
inline std::vector<double> exact_outage_all(const ScenarioConfig& cfg,
                                            const PowerSchedule& schedule) {
  cfg.validate();
  validate_power_schedule(cfg, schedule);
  const auto receivers = cfg.effective_receivers();
  const auto n = static_cast<std::size_t>(cfg.n_blocks);
  std::vector<double> success(n, 1.0);  // prod_k (1 - Q_kn)
  for (const Receiver& rx : receivers) {
    std::vector<double> q;
    if (cfg.harq_type == HarqType::IncrementalRedundancy) {
      q = detail::chain_values(detail::ChainFlavor::Exact, rx, cfg.block_lengths, schedule.powers,
                               cfg.max_power, cfg.message_bits, cfg.grid_points);
    } else {
      q.reserve(n);
      for (std::size_t i = 1; i <= n; ++i)
        q.push_back(detail::cc_exact_outage_one(rx, cfg.block_lengths[0], cfg.message_bits,
                                                detail::schedule_prefix(schedule, i)));
    }
    for (std::size_t i = 0; i < n; ++i) success[i] *= std::max(0.0, 1.0 - q[i]);
  }
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = 1.0 - success[i];
  return out;
}

/// Exact outage probability after block n (1-based).
inline double exact_outage(const ScenarioConfig& cfg, const PowerSchedule& schedule, int n) {
  if (n < 1 || n > cfg.n_blocks) throw ValidationError("n: block index out of range");
  return exact_outage_all(cfg, schedule)[static_cast<std::size_t>(n) - 1];
}

namespace detail {

inline BoundSet bound_coefficients_one(const Receiver& rx, const ScenarioConfig& cfg,
                                       BoundFlavor flavor, bool verify) {
  BoundSet b;
  b.flavor = flavor;
  b.exponent = rx.fading.power_shape();
  const auto n = static_cast<std::size_t>(cfg.n_blocks);
  if (cfg.harq_type == HarqType::ChaseCombining) {
    // Energy accumulation: after n blocks at uniform power the fading energy
    // sum is Gamma(n*shape, rate), so the power-stripped bound coefficient is
    // P^(n*shape) * Preg(n*shape, rate*theta_P); classic is its P -> inf limit.
    const double s = rx.fading.power_shape();
    const double a = rx.fading.power_rate();
    const double w = std::expm1(cfg.message_bits * std::numbers::ln2 / cfg.block_lengths[0]);
    for (std::size_t i = 1; i <= n; ++i) {
      const double total_shape = static_cast<double>(i) * s;
      double coeff;
      if (flavor == BoundFlavor::NewBound) {
        coeff = std::pow(cfg.max_power, total_shape) *
                regularized_gamma_p(total_shape, a * w / (rx.snr * cfg.max_power));
      } else {
        coeff = std::exp(total_shape * std::log(a * w / rx.snr) - lgamma_fn(total_shape + 1.0));
      }
      b.coefficients.push_back(coeff);
    }
    return b;
  }
  const ChainFlavor cf = flavor == BoundFlavor::NewBound ? ChainFlavor::Stripped
                                                         : ChainFlavor::ClassicStripped;
  b.coefficients = chain_values(cf, rx, cfg.block_lengths, {}, cfg.max_power, cfg.message_bits,
                                cfg.grid_points);
  if (flavor == BoundFlavor::NewBound && verify) {
    // Consistency of the two algebraic routes: A_n / prod p_i^e must equal the
    // direct relaxed chain for a probe schedule (first three stages).
    const std::size_t probe_n = std::min<std::size_t>(n, 3);
    const std::vector<double> probe(probe_n, 0.7 * cfg.max_power);
    std::vector<double> lb(cfg.block_lengths.begin(), cfg.block_lengths.begin() + probe_n);
    const auto direct = chain_values(ChainFlavor::Relaxed, rx, lb, probe, cfg.max_power,
                                     cfg.message_bits, cfg.grid_points);
    double denom = 1.0;
    for (std::size_t i = 0; i < probe_n; ++i) {
      denom *= std::pow(probe[i], b.exponent);
      const double from_coeff = b.coefficients[i] / denom;
      if (std::abs(from_coeff - direct[i]) > 1e-10 * std::max(std::abs(direct[i]), 1e-300))
        throw std::logic_error("bound coefficients inconsistent with the direct relaxed chain");
    }
  }
  return b;
}

}  // namespace detail

/// Coefficients of the power-cap-aware monomial bound (point-to-point).
inline BoundSet new_bound_coefficients(const ScenarioConfig& cfg, bool verify = true) {
  cfg.validate();
  return detail::bound_coefficients_one(Receiver{cfg.snr, cfg.fading}, cfg, BoundFlavor::NewBound,
                                        verify);
}

/// Coefficients of the classic unbounded-power bound; equals the P -> inf
/// limit of the new bound and requires equal block lengths.
inline BoundSet classic_bound_coefficients(const ScenarioConfig& cfg) {
  cfg.validate();
  if (!cfg.equal_block_lengths())
    throw ValidationError("block_lengths: the classic bound assumes equal block lengths");
  return detail::bound_coefficients_one(Receiver{cfg.snr, cfg.fading}, cfg,
                                        BoundFlavor::ClassicBound, false);
}

/// Per-receiver bound sets for a broadcast scenario; the aggregate bound at
/// block n is the sum over receivers, a posynomial in (p_1..p_n).
inline std::vector<BoundSet> broadcast_bound_terms(const ScenarioConfig& cfg,
                                                   BoundFlavor flavor = BoundFlavor::NewBound) {
  cfg.validate();
  if (cfg.receivers.empty()) throw ValidationError("receivers: broadcast bound needs a receiver list");
  if (flavor == BoundFlavor::ClassicBound && !cfg.equal_block_lengths())
    throw ValidationError("block_lengths: the classic bound assumes equal block lengths");
  std::vector<BoundSet> out;
  for (const Receiver& rx : cfg.receivers)
    out.push_back(detail::bound_coefficients_one(rx, cfg, flavor, false));
  return out;
}

/// Bound sets for every effective receiver (one for point-to-point).
inline std::vector<BoundSet> bound_terms(const ScenarioConfig& cfg,
                                         BoundFlavor flavor = BoundFlavor::NewBound) {
  if (cfg.is_broadcast()) return broadcast_bound_terms(cfg, flavor);
  return {flavor == BoundFlavor::NewBound ? new_bound_coefficients(cfg)
                                          : classic_bound_coefficients(cfg)};
}

/// Monomial bound value A_n / prod_{i<=n} p_i^e. May exceed 1.
inline double bound_outage(const BoundSet& bounds, const PowerSchedule& schedule, int n) {
  if (n < 1 || static_cast<std::size_t>(n) > bounds.coefficients.size())
    throw ValidationError("n: block index out of range");
  if (schedule.powers.size() < static_cast<std::size_t>(n))
    throw ValidationError("powers: schedule shorter than block index");
  double denom = 1.0;
  for (int i = 0; i < n; ++i) denom *= std::pow(schedule.powers[i], bounds.exponent);
  return bounds.coefficients[static_cast<std::size_t>(n) - 1] / denom;
}

/// Aggregate (sum over receivers) bound value at block n.
inline double aggregate_bound_outage(const std::vector<BoundSet>& terms,
                                     const PowerSchedule& schedule, int n) {
  double acc = 0.0;
  for (const BoundSet& b : terms) acc += bound_outage(b, schedule, n);
  return acc;
}

/// Closed-form Chase-combining bound for a uniform power p shared by all
/// blocks; equals the exact CC outage when p == P.
inline double cc_bound_outage(const ScenarioConfig& cfg, double p, int n) {
  cfg.validate();
  if (cfg.harq_type != HarqType::ChaseCombining)
    throw ValidationError("harq_type: cc_bound_outage needs a Chase-combining scenario");
  if (!(p > 0.0) || p > cfg.max_power * (1.0 + 1e-12))
    throw ValidationError("powers: must lie in (0, max_power]");
  if (n < 1 || n > cfg.n_blocks) throw ValidationError("n: block index out of range");
  const BoundSet b = new_bound_coefficients(cfg);
  return bound_outage(b, PowerSchedule::uniform(p, static_cast<std::size_t>(n)), n);
}

/// Full outage curves over message sizes [0, t_max] for one receiver:
/// stage n grid value at x equals Q_n (or the bound quantity) at message
/// size x. Used by the CSV experiment harness.
inline std::vector<DensityGrid> exact_outage_curves(const ScenarioConfig& cfg,
                                                    const Receiver& rx,
                                                    const PowerSchedule& schedule, double t_max) {
  if (cfg.harq_type == HarqType::IncrementalRedundancy)
    return detail::chain_grids(detail::ChainFlavor::Exact, rx, cfg.block_lengths, schedule.powers,
                               cfg.max_power, t_max, cfg.grid_points);
  std::vector<DensityGrid> out;
  const auto n = static_cast<std::size_t>(cfg.n_blocks);
  for (std::size_t i = 1; i <= n; ++i) {
    DensityGrid g;
    g.kind = DensityGrid::Kind::CdfLike;
    g.step = t_max / cfg.grid_points;
    g.values.resize(static_cast<std::size_t>(cfg.grid_points) + 1);
    const auto prefix = detail::schedule_prefix(schedule, i);
    for (int j = 0; j <= cfg.grid_points; ++j)
      g.values[static_cast<std::size_t>(j)] =
          j == 0 ? 0.0
                 : detail::cc_exact_outage_one(rx, cfg.block_lengths[0], j * g.step, prefix);
    out.push_back(g);
  }
  return out;
}

/// Bound-coefficient curves A_n(x) over [0, t_max] for one receiver.
inline std::vector<DensityGrid> bound_coefficient_curves(const ScenarioConfig& cfg,
                                                         const Receiver& rx, BoundFlavor flavor,
                                                         double t_max) {
  if (cfg.harq_type == HarqType::ChaseCombining) {
    std::vector<DensityGrid> out;
    const auto n = static_cast<std::size_t>(cfg.n_blocks);
    const double s = rx.fading.power_shape();
    const double a = rx.fading.power_rate();
    for (std::size_t i = 1; i <= n; ++i) {
      DensityGrid g;
      g.kind = DensityGrid::Kind::CdfLike;
      g.step = t_max / cfg.grid_points;
      g.values.resize(static_cast<std::size_t>(cfg.grid_points) + 1);
      const double total_shape = static_cast<double>(i) * s;
      for (int j = 0; j <= cfg.grid_points; ++j) {
        const double w = std::expm1(j * g.step * std::numbers::ln2 / cfg.block_lengths[0]);
        g.values[static_cast<std::size_t>(j)] =
            flavor == BoundFlavor::NewBound
                ? std::pow(cfg.max_power, total_shape) *
                      regularized_gamma_p(total_shape, a * w / (rx.snr * cfg.max_power))
                : (w > 0.0 ? std::exp(total_shape * std::log(a * w / rx.snr) -
                                      lgamma_fn(total_shape + 1.0))
                           : 0.0);
      }
      out.push_back(g);
    }
    return out;
  }
  const detail::ChainFlavor cf = flavor == BoundFlavor::NewBound
                                     ? detail::ChainFlavor::Stripped
                                     : detail::ChainFlavor::ClassicStripped;
  return detail::chain_grids(cf, rx, cfg.block_lengths, {}, cfg.max_power, t_max, cfg.grid_points);
}

}  // namespace harqopt
