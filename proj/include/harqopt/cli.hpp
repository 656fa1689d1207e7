#pragma once

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "harqopt/gpsolve.hpp"
#include "harqopt/outage.hpp"
#include "harqopt/scenario.hpp"
#include "harqopt/sim.hpp"

// Experiment harness behind the command-line tool: each subcommand renders
// deterministic CSV (or plain text for optimize) so that figure data can be
// regenerated and diffed. Exit codes: 0 ok, 2 infeasible, 3 validation error,
// 4 solver non-convergence.

namespace harqopt {

enum class Method { MaxPower, GpClassic, GpNew };

inline const char* method_name(Method m) {
  switch (m) {
    case Method::MaxPower: return "max_power";
    case Method::GpClassic: return "gp_classic";
    case Method::GpNew: return "gp_new";
  }
  return "max_power";
}

inline std::optional<Method> method_from_name(const std::string& s) {
  if (s == "max_power") return Method::MaxPower;
  if (s == "gp_classic") return Method::GpClassic;
  if (s == "gp_new") return Method::GpNew;
  return std::nullopt;
}

struct SweepSpec {
  enum class Param { Snr, LatencyTarget, MessageBits, MaxPower };

  Param parameter = Param::Snr;
  std::vector<double> values;
  std::vector<Method> methods;

  void validate() const {
    if (values.empty()) throw ValidationError("sweep values: must be nonempty");
    const bool increasing = values.size() < 2 || values[1] > values[0];
    for (std::size_t i = 1; i < values.size(); ++i) {
      const bool step_up = values[i] > values[i - 1];
      if (step_up != increasing || values[i] == values[i - 1])
        throw ValidationError("sweep values: must be strictly monotone");
    }
    if (methods.empty()) throw ValidationError("sweep methods: must be nonempty");
  }
};

inline const char* sweep_param_name(SweepSpec::Param p) {
  switch (p) {
    case SweepSpec::Param::Snr: return "snr";
    case SweepSpec::Param::LatencyTarget: return "latency_target";
    case SweepSpec::Param::MessageBits: return "message_bits";
    case SweepSpec::Param::MaxPower: return "max_power";
  }
  return "snr";
}

inline std::optional<SweepSpec::Param> sweep_param_from_name(const std::string& s) {
  if (s == "snr") return SweepSpec::Param::Snr;
  if (s == "latency_target") return SweepSpec::Param::LatencyTarget;
  if (s == "message_bits") return SweepSpec::Param::MessageBits;
  if (s == "max_power") return SweepSpec::Param::MaxPower;
  return std::nullopt;
}

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

namespace detail {

inline std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

inline void write_metadata(std::ostream& out, const ScenarioConfig& cfg, const char* command,
                           std::optional<std::uint64_t> seed) {
  char hash[32];
  std::snprintf(hash, sizeof hash, "0x%016" PRIx64, scenario_hash(cfg));
  out << "# harqopt " << command << "\n";
  out << "# config_hash " << hash << "\n";
  if (seed) out << "# seed " << *seed << "\n";
  out << "# units energy=E0(P*L1) latency=L1\n";
}

}  // namespace detail

/// Outage-vs-message-size table: exact, new-bound, and classic-bound values
/// for every block count, one row per message size.
inline int cmd_bounds(const ScenarioConfig& cfg, const PowerSchedule& schedule, double t_from,
                      double t_to, int t_points, std::ostream& out) {
  cfg.validate();
  validate_power_schedule(cfg, schedule);
  if (!(t_from > 0.0) || !(t_to >= t_from)) throw ValidationError("t range: need 0 < t_from <= t_to");
  if (t_points < 1) throw ValidationError("t points: must be >= 1");
  if (!cfg.equal_block_lengths())
    throw ValidationError("block_lengths: the classic bound assumes equal block lengths");

  ScenarioConfig curve_cfg = cfg;
  curve_cfg.message_bits = t_to;
  const auto receivers = cfg.effective_receivers();
  const auto n = static_cast<std::size_t>(cfg.n_blocks);
  std::vector<std::vector<DensityGrid>> exact, bnew, bclassic;
  for (const Receiver& rx : receivers) {
    exact.push_back(exact_outage_curves(curve_cfg, rx, schedule, t_to));
    bnew.push_back(bound_coefficient_curves(curve_cfg, rx, BoundFlavor::NewBound, t_to));
    bclassic.push_back(bound_coefficient_curves(curve_cfg, rx, BoundFlavor::ClassicBound, t_to));
  }

  detail::write_metadata(out, cfg, "bounds", std::nullopt);
  out << "t";
  for (std::size_t i = 1; i <= n; ++i) out << ",exact_" << i;
  for (std::size_t i = 1; i <= n; ++i) out << ",new_" << i;
  for (std::size_t i = 1; i <= n; ++i) out << ",classic_" << i;
  out << "\n";

  for (int row = 0; row < t_points; ++row) {
    const double t = t_points == 1
                         ? t_from
                         : t_from + (t_to - t_from) * row / static_cast<double>(t_points - 1);
    out << detail::fmt(t);
    for (std::size_t i = 0; i < n; ++i) {
      double success = 1.0;
      for (std::size_t r = 0; r < receivers.size(); ++r)
        success *= std::max(0.0, 1.0 - exact[r][i].interpolate(t));
      out << "," << detail::fmt(1.0 - success);
    }
    for (const auto& curves : {std::cref(bnew), std::cref(bclassic)}) {
      for (std::size_t i = 0; i < n; ++i) {
        double agg = 0.0;
        for (std::size_t r = 0; r < receivers.size(); ++r) {
          double denom = 1.0;
          for (std::size_t b = 0; b <= i; ++b)
            denom *= std::pow(schedule.powers[b], receivers[r].fading.power_shape());
          agg += curves.get()[r][i].interpolate(t) / denom;
        }
        out << "," << detail::fmt(agg);
      }
    }
    out << "\n";
  }
  return 0;
}

/// Schedule for a method: the cap for max_power, otherwise a GP solve on the
/// requested bound flavor.
inline SolveReport optimize_schedule(const ScenarioConfig& cfg, Method method,
                                     const SolverOptions& opts = {}) {
  if (method == Method::MaxPower) {
    SolveReport rep;
    rep.schedule = PowerSchedule::uniform(cfg.max_power, static_cast<std::size_t>(cfg.n_blocks));
    const Metrics m = predicted_metrics_exact(cfg, rep.schedule);
    rep.objective_value = m.energy;
    rep.predicted_latency = m.latency;
    rep.status = (m.outage <= cfg.outage_target && m.latency <= cfg.latency_target)
                     ? SolveStatus::Optimal
                     : SolveStatus::Infeasible;
    return rep;
  }
  const BoundFlavor flavor =
      method == Method::GpNew ? BoundFlavor::NewBound : BoundFlavor::ClassicBound;
  try {
    return solve_gp(build_gp(cfg, bound_terms(cfg, flavor)), opts);
  } catch (const InfeasibleLatency&) {
    SolveReport rep;
    rep.status = SolveStatus::Infeasible;
    rep.schedule = PowerSchedule::uniform(cfg.max_power, static_cast<std::size_t>(cfg.n_blocks));
    return rep;
  }
}

inline int exit_code_for(SolveStatus s) {
  switch (s) {
    case SolveStatus::Optimal: return 0;
    case SolveStatus::Infeasible: return 2;
    case SolveStatus::MaxIterations: return 4;
  }
  return 4;
}

inline int cmd_optimize(const ScenarioConfig& cfg, Method method, const SolverOptions& opts,
                        bool unconstrained, std::ostream& out, std::ostream* powers_csv) {
  cfg.validate();
  if (unconstrained) {
    if (method == Method::MaxPower)
      throw ValidationError("method: unconstrained mode needs gp_new or gp_classic");
    const BoundFlavor flavor =
        method == Method::GpNew ? BoundFlavor::NewBound : BoundFlavor::ClassicBound;
    const BoundSet bounds = flavor == BoundFlavor::NewBound ? new_bound_coefficients(cfg)
                                                            : classic_bound_coefficients(cfg);
    const UnconstrainedSolution sol = solve_unconstrained(cfg, bounds);
    out << "mode: unconstrained\n";
    out << "method: " << method_name(method) << "\n";
    out << "objective: " << detail::fmt(sol.objective) << "\n";
    out << "iterations: " << sol.iterations << "\n";
    for (std::size_t i = 0; i < sol.schedule.powers.size(); ++i)
      out << "p_" << (i + 1) << ": " << detail::fmt(sol.schedule.powers[i]) << "\n";
    if (powers_csv) {
      detail::write_metadata(*powers_csv, cfg, "optimize", std::nullopt);
      *powers_csv << "block,power\n";
      for (std::size_t i = 0; i < sol.schedule.powers.size(); ++i)
        *powers_csv << (i + 1) << "," << detail::fmt(sol.schedule.powers[i]) << "\n";
    }
    return 0;
  }

  const SolveReport rep = optimize_schedule(cfg, method, opts);
  out << "method: " << method_name(method) << "\n";
  out << "status: "
      << (rep.status == SolveStatus::Optimal
              ? "optimal"
              : rep.status == SolveStatus::Infeasible ? "infeasible" : "max_iterations")
      << "\n";
  if (rep.status != SolveStatus::Infeasible) {
    out << "objective_energy: " << detail::fmt(rep.objective_value) << "\n";
    out << "predicted_latency: " << detail::fmt(rep.predicted_latency) << "\n";
    out << "iterations: " << rep.iterations << "\n";
    out << "kkt_residual: " << detail::fmt(rep.kkt_residual) << "\n";
    for (std::size_t i = 0; i < rep.constraint_names.size(); ++i)
      out << "slack_" << rep.constraint_names[i] << ": " << detail::fmt(rep.constraint_slacks[i])
          << "\n";
    out << "outage_tight: " << (rep.outage_tight ? 1 : 0) << "\n";
    const Metrics exact = predicted_metrics_exact(cfg, rep.schedule);
    out << "exact_outage: " << detail::fmt(exact.outage) << "\n";
    out << "exact_energy: " << detail::fmt(exact.energy) << "\n";
    out << "exact_latency: " << detail::fmt(exact.latency) << "\n";
    for (std::size_t i = 0; i < rep.schedule.powers.size(); ++i)
      out << "p_" << (i + 1) << ": " << detail::fmt(rep.schedule.powers[i]) << "\n";
    if (powers_csv) {
      detail::write_metadata(*powers_csv, cfg, "optimize", std::nullopt);
      *powers_csv << "block,power\n";
      for (std::size_t i = 0; i < rep.schedule.powers.size(); ++i)
        *powers_csv << (i + 1) << "," << detail::fmt(rep.schedule.powers[i]) << "\n";
    }
  }
  return exit_code_for(rep.status);
}

inline int cmd_simulate(const ScenarioConfig& cfg, const PowerSchedule& schedule,
                        std::uint64_t trials, std::uint64_t seed, const SimOptions& opts,
                        bool as_json, std::ostream& out) {
  const SimulationReport rep = run_trials(cfg, schedule, trials, seed, opts);
  if (as_json) {
    nlohmann::json j;
    j["trials"] = rep.trials;
    j["seed"] = rep.seed;
    j["outage"] = rep.outage_rate;
    j["outage_ci"] = rep.outage_ci;
    j["outage_ci_one_sided"] = rep.outage_ci_one_sided;
    j["energy_e0"] = rep.energy_mean;
    j["energy_ci"] = rep.energy_ci;
    j["latency_l1"] = rep.latency_mean;
    j["latency_ci"] = rep.latency_ci;
    j["block_usage"] = rep.block_usage;
    out << j.dump(2) << "\n";
    return 0;
  }
  detail::write_metadata(out, cfg, "simulate", seed);
  if (trials < 2) out << "# warning degenerate confidence intervals (trials < 2)\n";
  out << "trials,seed,outage,outage_ci,outage_ci_one_sided,energy_e0,energy_ci,latency_l1,"
         "latency_ci";
  for (std::size_t i = 1; i <= rep.block_usage.size(); ++i) out << ",usage_" << i;
  out << "\n";
  out << rep.trials << "," << rep.seed << "," << detail::fmt(rep.outage_rate) << ","
      << detail::fmt(rep.outage_ci) << "," << (rep.outage_ci_one_sided ? 1 : 0) << ","
      << detail::fmt(rep.energy_mean) << "," << detail::fmt(rep.energy_ci) << ","
      << detail::fmt(rep.latency_mean) << "," << detail::fmt(rep.latency_ci);
  for (double u : rep.block_usage) out << "," << detail::fmt(u);
  out << "\n";
  return 0;
}

inline int cmd_sweep(const ScenarioConfig& cfg, const SweepSpec& spec, std::uint64_t trials,
                     std::uint64_t seed, const SolverOptions& opts, std::ostream& out) {
  cfg.validate();
  spec.validate();
  detail::write_metadata(out, cfg, "sweep", trials > 0 ? std::optional<std::uint64_t>(seed)
                                                       : std::nullopt);
  out << "# parameter " << sweep_param_name(spec.parameter) << "\n";
  out << "param,value,method,feasible,energy_e0,latency_l1,outage_exact,sim_outage,"
         "sim_outage_ci,sim_energy_e0,sim_energy_ci,sim_latency_l1,sim_latency_ci\n";

  const double nan = std::numeric_limits<double>::quiet_NaN();
  std::uint64_t row = 0;
  for (double value : spec.values) {
    ScenarioConfig point = cfg;
    switch (spec.parameter) {
      case SweepSpec::Param::Snr:
        point.snr = value;
        for (Receiver& r : point.receivers) r.snr = value;
        break;
      case SweepSpec::Param::LatencyTarget: point.latency_target = value; break;
      case SweepSpec::Param::MessageBits: point.message_bits = value; break;
      case SweepSpec::Param::MaxPower: point.max_power = value; break;
    }
    point.validate();
    const double e0 = point.max_power * point.block_lengths[0];
    const double l0 = point.block_lengths[0];
    for (Method method : spec.methods) {
      const SolveReport rep = optimize_schedule(point, method, opts);
      const bool feasible = rep.status == SolveStatus::Optimal;
      double energy = nan, latency = nan, outage = nan;
      double sq = nan, sqc = nan, se = nan, sec = nan, sl = nan, slc = nan;
      if (feasible) {
        const Metrics m = predicted_metrics_exact(point, rep.schedule);
        energy = m.energy / e0;
        latency = m.latency / l0;
        outage = m.outage;
        if (trials > 0) {
          const SimulationReport sim = run_trials(point, rep.schedule, trials, seed + row);
          sq = sim.outage_rate;
          sqc = sim.outage_ci;
          se = sim.energy_mean;
          sec = sim.energy_ci;
          sl = sim.latency_mean;
          slc = sim.latency_ci;
        }
      }
      out << sweep_param_name(spec.parameter) << "," << detail::fmt(value) << ","
          << method_name(method) << "," << (feasible ? 1 : 0) << "," << detail::fmt(energy) << ","
          << detail::fmt(latency) << "," << detail::fmt(outage) << "," << detail::fmt(sq) << ","
          << detail::fmt(sqc) << "," << detail::fmt(se) << "," << detail::fmt(sec) << ","
          << detail::fmt(sl) << "," << detail::fmt(slc) << "\n";
      ++row;
    }
  }
  return 0;
}

}  // namespace harqopt
