#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "harqopt/sim.hpp"

using namespace harqopt;

namespace {

ScenarioConfig sim_config(int n_blocks, double snr, double t) {
  ScenarioConfig cfg;
  cfg.n_blocks = n_blocks;
  cfg.block_lengths.assign(static_cast<std::size_t>(n_blocks), 1.0);
  cfg.snr = snr;
  cfg.max_power = 1.0;
  cfg.message_bits = t;
  cfg.outage_target = 0.5;
  cfg.latency_target = 100.0;
  cfg.validate();
  return cfg;
}

}  // namespace

TEST_CASE("vanishing message finishes in one block") {
  const ScenarioConfig cfg = sim_config(2, 2.0, 1e-12);
  const PowerSchedule s{{0.8, 0.7}};
  const SimulationReport rep = run_trials(cfg, s, 20000, 7);
  CHECK(rep.outage_rate == 0.0);
  CHECK(rep.energy_mean == Catch::Approx(0.8).epsilon(1e-12));  // p1 L1 / E0
  CHECK(rep.latency_mean == Catch::Approx(1.0).epsilon(1e-12));
  CHECK(rep.block_usage[0] == 1.0);
  CHECK(rep.block_usage[1] == 0.0);
  // zero observed outages: one-sided Clopper-Pearson upper bound
  CHECK(rep.outage_ci_one_sided);
  CHECK(rep.outage_ci == Catch::Approx(1.0 - std::pow(0.05, 1.0 / 20000.0)).epsilon(1e-12));
}

TEST_CASE("empirical outage matches the convolution engine") {
  const ScenarioConfig cfg = sim_config(2, 2.0, 1.0);
  const PowerSchedule s{{0.8, 0.8}};
  const SimulationReport rep = run_trials(cfg, s, 1000000, 99);
  const double q2 = exact_outage(cfg, s, 2);
  const double sigma = std::sqrt(q2 * (1.0 - q2) / 1e6);
  CHECK(std::abs(rep.outage_rate - q2) <= 3.0 * sigma);

  // block-usage frequency at block n estimates the outage after n-1 blocks
  const double q1 = exact_outage(cfg, s, 1);
  const double sigma1 = std::sqrt(q1 * (1.0 - q1) / 1e6);
  CHECK(rep.block_usage[0] == 1.0);
  CHECK(std::abs(rep.block_usage[1] - q1) <= 3.0 * sigma1);
  for (std::size_t i = 1; i < rep.block_usage.size(); ++i)
    CHECK(rep.block_usage[i] <= rep.block_usage[i - 1]);
}

TEST_CASE("energy and latency converge to the expectation formulas") {
  ScenarioConfig cfg = sim_config(3, 2.0, 1.5);
  cfg.feedback_delay_mean = 0.5;
  const PowerSchedule s{{0.9, 0.7, 0.8}};
  const SimulationReport rep = run_trials(cfg, s, 1000000, 1234);
  const Metrics m = predicted_metrics_exact(cfg, s);
  const double e0 = cfg.max_power * cfg.block_lengths[0];
  CHECK(std::abs(rep.energy_mean - m.energy / e0) <= 3.0 * rep.energy_ci / 1.96);
  CHECK(std::abs(rep.latency_mean - m.latency) <= 3.0 * rep.latency_ci / 1.96);

  // exponential feedback keeps the same mean
  SimOptions opts;
  opts.exponential_feedback = true;
  const SimulationReport rexp = run_trials(cfg, s, 1000000, 1234, opts);
  CHECK(std::abs(rexp.latency_mean - m.latency) <= 3.0 * rexp.latency_ci / 1.96);
}

TEST_CASE("fixed seed reproduces the report bit for bit") {
  const ScenarioConfig cfg = sim_config(3, 2.0, 1.5);
  const PowerSchedule s{{0.9, 0.7, 0.8}};
  const SimulationReport a = run_trials(cfg, s, 300000, 42);
  const SimulationReport b = run_trials(cfg, s, 300000, 42);
  CHECK(a.outage_rate == b.outage_rate);
  CHECK(a.energy_mean == b.energy_mean);
  CHECK(a.latency_mean == b.latency_mean);
  CHECK(a.block_usage == b.block_usage);

  // worker count must not change the result
  SimOptions serial;
  serial.threads = 1;
  const SimulationReport c = run_trials(cfg, s, 300000, 42, serial);
  CHECK(a.outage_rate == c.outage_rate);
  CHECK(a.energy_mean == c.energy_mean);
  CHECK(a.latency_mean == c.latency_mean);
}

TEST_CASE("one-block runs are protocol independent") {
  ScenarioConfig ir = sim_config(1, 2.0, 1.0);
  ScenarioConfig cc = ir;
  cc.harq_type = HarqType::ChaseCombining;
  const PowerSchedule s{{0.8}};
  const SimulationReport a = run_trials(ir, s, 200000, 5);
  const SimulationReport b = run_trials(cc, s, 200000, 5);
  CHECK(a.outage_rate == b.outage_rate);
  CHECK(a.energy_mean == b.energy_mean);
  CHECK(a.latency_mean == b.latency_mean);
}

TEST_CASE("chase combining simulation matches its exact outage") {
  ScenarioConfig cc = sim_config(3, 2.0, 1.0);
  cc.harq_type = HarqType::ChaseCombining;
  const PowerSchedule s{{0.8, 0.8, 0.8}};
  const SimulationReport rep = run_trials(cc, s, 1000000, 2718);
  const double q = exact_outage(cc, s, 3);
  CHECK(std::abs(rep.outage_rate - q) <= 3.0 * std::sqrt(q * (1.0 - q) / 1e6));
}

TEST_CASE("coupled draws make outage monotone in the schedule") {
  const ScenarioConfig cfg = sim_config(3, 2.0, 2.0);
  const auto receivers = cfg.effective_receivers();
  const PowerSchedule lo{{0.5, 0.6, 0.7}};
  const PowerSchedule hi{{0.6, 0.8, 0.9}};
  const SimOptions opts;
  for (int trial = 0; trial < 20000; ++trial) {
    StreamRng a = make_stream(11, static_cast<std::uint64_t>(trial));
    StreamRng b = make_stream(11, static_cast<std::uint64_t>(trial));
    const auto oa = detail::simulate_trial(cfg, receivers, lo, opts, a);
    const auto ob = detail::simulate_trial(cfg, receivers, hi, opts, b);
    // identical fading draws: more power never turns success into failure
    CHECK_FALSE((ob.outage && !oa.outage));
    CHECK(ob.blocks_used <= oa.blocks_used);
  }
}

TEST_CASE("broadcast union outage sanity") {
  ScenarioConfig cfg = sim_config(2, 2.0, 1.0);
  cfg.receivers = {Receiver{2.0, FadingModel::rayleigh()}, Receiver{2.0, FadingModel::rayleigh()},
                   Receiver{2.0, FadingModel::rayleigh()}};
  const PowerSchedule s{{0.8, 0.8}};
  const SimulationReport rep = run_trials(cfg, s, 500000, 17);
  const double q_union = exact_outage(cfg, s, 2);
  CHECK(std::abs(rep.outage_rate - q_union) <= 3.0 * std::sqrt(q_union * (1.0 - q_union) / 5e5));
  // union bound: never more than the receiver-count multiple of one receiver
  const ScenarioConfig single = sim_config(2, 2.0, 1.0);
  const SimulationReport one = run_trials(single, s, 500000, 18);
  CHECK(rep.outage_rate <= 3.0 * (one.outage_rate + one.outage_ci));
}

TEST_CASE("schedule validation record") {
  // relaxed target so Monte Carlo resolves the outage level
  ScenarioConfig cfg = paper_default_scenario(8.0);
  cfg.outage_target = 1e-2;
  const SolveReport rep = solve_gp(build_gp(cfg, bound_terms(cfg)));
  REQUIRE(rep.status == SolveStatus::Optimal);
  const ScheduleValidation v = validate_schedule(cfg, rep.schedule, 1000000, 77);
  CHECK(v.outage_matches_exact);
  CHECK(v.energy_matches_exact);
  CHECK(v.latency_matches_exact);
  CHECK(v.outage_below_new_bound);
  CHECK(v.sim.outage_rate <= cfg.outage_target);
  CHECK(v.has_classic);
  CHECK(v.exact.outage <= v.bound_new.outage);
  CHECK(v.bound_new.outage <= v.bound_classic.outage * (1.0 + 1e-12));

  // full-power schedule: empirical energy matches the exact expectation
  const PowerSchedule maxp = PowerSchedule::uniform(1.0, 5);
  const ScheduleValidation vm = validate_schedule(cfg, maxp, 500000, 78);
  CHECK(vm.energy_matches_exact);
  CHECK(vm.latency_matches_exact);
}

TEST_CASE("trial budget validation") {
  const ScenarioConfig cfg = sim_config(1, 2.0, 1.0);
  CHECK_THROWS_AS(run_trials(cfg, PowerSchedule{{0.8}}, 0, 1), ValidationError);
  const SimulationReport rep = run_trials(cfg, PowerSchedule{{0.8}}, 1, 1);
  CHECK(rep.trials == 1);
  CHECK(std::isnan(rep.energy_ci));  // degenerate with a single trial
}
