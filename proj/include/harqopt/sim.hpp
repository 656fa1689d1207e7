#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <thread>
#include <vector>

#include "harqopt/fading.hpp"
#include "harqopt/gpsolve.hpp"
#include "harqopt/outage.hpp"
#include "harqopt/rng.hpp"
#include "harqopt/scenario.hpp"

// Block-by-block HARQ protocol simulator, independent of the convolution
// engine. Trials are partitioned into fixed-size batches, one RNG stream per
// batch, so results are bit-identical for a given seed regardless of worker
// count.

namespace harqopt {

struct SimOptions {
  bool exponential_feedback = false;  // default: deterministic mean delay
  int threads = 0;                    // 0 = hardware concurrency
};

struct SimulationReport {
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  double outage_rate = 0.0;
  double outage_ci = 0.0;    // 95% half-width; one-sided upper bound if no outages
  bool outage_ci_one_sided = false;
  double energy_mean = 0.0;  // units of E0 = P * L_1
  double energy_ci = 0.0;
  double latency_mean = 0.0;  // units of L_1
  double latency_ci = 0.0;
  std::vector<double> block_usage;  // frequency block n was transmitted
};

namespace detail {

struct TrialOutcome {
  bool outage = false;
  double energy = 0.0;
  double latency = 0.0;
  int blocks_used = 0;
};

// One protocol run. All fading powers are drawn up front so that the draw
// sequence is independent of the schedule; coupled comparisons across
// schedules then share identical channel realizations.
inline TrialOutcome simulate_trial(const ScenarioConfig& cfg,
                                   const std::vector<Receiver>& receivers,
                                   const PowerSchedule& schedule, const SimOptions& opts,
                                   StreamRng& rng) {
  const auto n = static_cast<std::size_t>(cfg.n_blocks);
  const std::size_t k = receivers.size();
  thread_local std::vector<double> lambda;
  thread_local std::vector<double> feedback;
  thread_local std::vector<double> acc;
  thread_local std::vector<bool> done;
  lambda.assign(n * k, 0.0);
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t r = 0; r < k; ++r)
      lambda[b * k + r] = sample_fading_power(receivers[r].fading, rng);
  feedback.assign(n > 0 ? n - 1 : 0, cfg.feedback_delay_mean);
  if (opts.exponential_feedback)
    for (double& f : feedback) f = cfg.feedback_delay_mean * sample_exponential(rng);

  acc.assign(k, 0.0);  // IR: accumulated bits; CC: accumulated fading energy
  done.assign(k, false);
  const bool chase = cfg.harq_type == HarqType::ChaseCombining;

  TrialOutcome out;
  for (std::size_t b = 0; b < n; ++b) {
    bool all_done = true;
    for (std::size_t r = 0; r < k; ++r) all_done = all_done && done[r];
    if (all_done) break;
    out.blocks_used = static_cast<int>(b + 1);
    out.energy += schedule.powers[b] * cfg.block_lengths[b];
    out.latency += cfg.block_lengths[b];
    if (b > 0) out.latency += feedback[b - 1];
    for (std::size_t r = 0; r < k; ++r) {
      if (done[r]) continue;
      const double s = receivers[r].snr;
      if (chase) {
        acc[r] += lambda[b * k + r] * schedule.powers[b];
        if (cfg.block_lengths[0] * std::log2(1.0 + s * acc[r]) >= cfg.message_bits)
          done[r] = true;
      } else {
        acc[r] += cfg.block_lengths[b] *
                  std::log2(1.0 + s * lambda[b * k + r] * schedule.powers[b]);
        if (acc[r] >= cfg.message_bits) done[r] = true;
      }
    }
  }
  for (std::size_t r = 0; r < k; ++r) out.outage = out.outage || !done[r];
  return out;
}

struct BatchTotals {
  std::uint64_t outages = 0;
  double energy_sum = 0.0, energy_sq = 0.0;
  double latency_sum = 0.0, latency_sq = 0.0;
  std::vector<std::uint64_t> block_counts;
};

inline constexpr std::uint64_t kBatchSize = 1u << 16;

}  // namespace detail

inline SimulationReport run_trials(const ScenarioConfig& cfg, const PowerSchedule& schedule,
                                   std::uint64_t trials, std::uint64_t seed,
                                   const SimOptions& opts = {}) {
  cfg.validate();
  validate_power_schedule(cfg, schedule);
  if (trials < 1) throw ValidationError("trials: must be >= 1");
  const auto receivers = cfg.effective_receivers();
  const auto n = static_cast<std::size_t>(cfg.n_blocks);

  const std::uint64_t n_batches = (trials + detail::kBatchSize - 1) / detail::kBatchSize;
  std::vector<detail::BatchTotals> totals(n_batches);

  const auto run_batch = [&](std::uint64_t b) {
    StreamRng rng = make_stream(seed, b);
    detail::BatchTotals t;
    t.block_counts.assign(n, 0);
    const std::uint64_t count =
        std::min<std::uint64_t>(detail::kBatchSize, trials - b * detail::kBatchSize);
    for (std::uint64_t i = 0; i < count; ++i) {
      const auto o = detail::simulate_trial(cfg, receivers, schedule, opts, rng);
      t.outages += o.outage ? 1 : 0;
      t.energy_sum += o.energy;
      t.energy_sq += o.energy * o.energy;
      t.latency_sum += o.latency;
      t.latency_sq += o.latency * o.latency;
      for (int u = 0; u < o.blocks_used; ++u) ++t.block_counts[static_cast<std::size_t>(u)];
    }
    totals[b] = std::move(t);
  };

  unsigned hw = std::thread::hardware_concurrency();
  const auto n_threads = static_cast<std::uint64_t>(
      opts.threads > 0 ? opts.threads : std::max(1u, hw));
  if (n_threads <= 1 || n_batches <= 1) {
    for (std::uint64_t b = 0; b < n_batches; ++b) run_batch(b);
  } else {
    std::atomic<std::uint64_t> next{0};
    std::vector<std::thread> pool;
    for (std::uint64_t w = 0; w < std::min(n_threads, n_batches); ++w)
      pool.emplace_back([&] {
        for (;;) {
          const std::uint64_t b = next.fetch_add(1);
          if (b >= n_batches) return;
          run_batch(b);
        }
      });
    for (auto& th : pool) th.join();
  }

  // Reduce in batch order: totals are order-independent sums anyway, but this
  // keeps the floating-point reduction identical across worker counts.
  detail::BatchTotals all;
  all.block_counts.assign(n, 0);
  for (const auto& t : totals) {
    all.outages += t.outages;
    all.energy_sum += t.energy_sum;
    all.energy_sq += t.energy_sq;
    all.latency_sum += t.latency_sum;
    all.latency_sq += t.latency_sq;
    for (std::size_t i = 0; i < n; ++i) all.block_counts[i] += t.block_counts[i];
  }

  const auto nt = static_cast<double>(trials);
  const double e0 = cfg.max_power * cfg.block_lengths[0];
  const double l0 = cfg.block_lengths[0];
  SimulationReport rep;
  rep.trials = trials;
  rep.seed = seed;
  rep.outage_rate = static_cast<double>(all.outages) / nt;
  if (all.outages == 0) {
    // One-sided 95% Clopper-Pearson upper bound for zero observed events.
    rep.outage_ci = 1.0 - std::pow(0.05, 1.0 / nt);
    rep.outage_ci_one_sided = true;
  } else {
    rep.outage_ci = 1.96 * std::sqrt(rep.outage_rate * (1.0 - rep.outage_rate) / nt);
  }
  const double e_mean = all.energy_sum / nt;
  const double e_var = std::max(0.0, all.energy_sq / nt - e_mean * e_mean);
  rep.energy_mean = e_mean / e0;
  rep.energy_ci = trials > 1 ? 1.96 * std::sqrt(e_var / (nt - 1.0)) / e0
                             : std::numeric_limits<double>::quiet_NaN();
  const double d_mean = all.latency_sum / nt;
  const double d_var = std::max(0.0, all.latency_sq / nt - d_mean * d_mean);
  rep.latency_mean = d_mean / l0;
  rep.latency_ci = trials > 1 ? 1.96 * std::sqrt(d_var / (nt - 1.0)) / l0
                              : std::numeric_limits<double>::quiet_NaN();
  rep.block_usage.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    rep.block_usage[i] = static_cast<double>(all.block_counts[i]) / nt;
  return rep;
}

/// Side-by-side comparison of empirical, exact-convolution, and bound
/// predictions for one schedule, with CI-aware agreement flags.
struct ScheduleValidation {
  SimulationReport sim;
  Metrics exact;         // raw units
  Metrics bound_new;     // raw units, may exceed probability/feasible ranges
  bool has_classic = false;
  Metrics bound_classic;
  bool outage_matches_exact = false;
  bool energy_matches_exact = false;
  bool latency_matches_exact = false;
  bool outage_below_new_bound = false;
};

inline ScheduleValidation validate_schedule(const ScenarioConfig& cfg,
                                            const PowerSchedule& schedule, std::uint64_t trials,
                                            std::uint64_t seed, const SimOptions& opts = {}) {
  ScheduleValidation v;
  v.sim = run_trials(cfg, schedule, trials, seed, opts);
  v.exact = predicted_metrics_exact(cfg, schedule);
  v.bound_new = predicted_metrics_bound(cfg, bound_terms(cfg, BoundFlavor::NewBound), schedule);
  if (cfg.equal_block_lengths()) {
    v.has_classic = true;
    v.bound_classic =
        predicted_metrics_bound(cfg, bound_terms(cfg, BoundFlavor::ClassicBound), schedule);
  }
  const double nt = static_cast<double>(trials);
  const double sigma_q = std::sqrt(std::max(v.exact.outage * (1.0 - v.exact.outage), 1e-12) / nt);
  v.outage_matches_exact = std::abs(v.sim.outage_rate - v.exact.outage) <= 3.0 * sigma_q;
  const double e0 = cfg.max_power * cfg.block_lengths[0];
  const double l0 = cfg.block_lengths[0];
  const double e_sigma = v.sim.energy_ci / 1.96;
  const double d_sigma = v.sim.latency_ci / 1.96;
  v.energy_matches_exact = std::abs(v.sim.energy_mean - v.exact.energy / e0) <= 3.0 * e_sigma;
  v.latency_matches_exact = std::abs(v.sim.latency_mean - v.exact.latency / l0) <= 3.0 * d_sigma;
  v.outage_below_new_bound = v.sim.outage_rate <= v.bound_new.outage + 3.0 * sigma_q;
  return v;
}

}  // namespace harqopt
