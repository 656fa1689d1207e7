#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "harqopt/cli.hpp"

namespace {

using namespace harqopt;

std::vector<double> parse_number_list(const std::string& text, const char* what) {
  std::vector<double> out;
  std::string item;
  std::stringstream ss(text);
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t pos = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &pos);
    } catch (const std::exception&) {
      throw ParseError(std::string(what) + ": expected a comma-separated number list");
    }
    while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
    if (pos != item.size())
      throw ParseError(std::string(what) + ": expected a comma-separated number list");
    out.push_back(v);
  }
  if (out.empty()) throw ParseError(std::string(what) + ": expected at least one number");
  return out;
}

ScenarioConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("config: cannot open '" + path + "'");
  return load_scenario(in);
}

PowerSchedule resolve_schedule(const ScenarioConfig& cfg, const std::string& powers,
                               const std::string& schedule_file) {
  std::vector<double> values;
  if (!schedule_file.empty()) {
    std::ifstream in(schedule_file);
    if (!in) throw ParseError("schedule: cannot open '" + schedule_file + "'");
    std::string token;
    while (in >> token) {
      if (!token.empty() && token.back() == ',') token.pop_back();
      if (token.empty()) continue;
      try {
        values.push_back(std::stod(token));
      } catch (const std::exception&) {
        throw ParseError("schedule: file must contain numbers");
      }
    }
    if (values.empty()) throw ParseError("schedule: file is empty");
  } else if (powers == "max" || powers.empty()) {
    values.assign(static_cast<std::size_t>(cfg.n_blocks), cfg.max_power);
  } else {
    values = parse_number_list(powers, "powers");
  }
  if (values.size() == 1) values.assign(static_cast<std::size_t>(cfg.n_blocks), values[0]);
  PowerSchedule schedule{values};
  validate_power_schedule(cfg, schedule);
  return schedule;
}

struct CommonOpts {
  std::string config_path;
  std::string out_path;
  int grid_points = 0;
  double snr_override = 0.0;
  bool snr_given = false;
  bool snr_db = false;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--config", o.config_path, "scenario JSON file")->required();
  cmd->add_option("--out", o.out_path, "output path (default: stdout)");
  cmd->add_option("--grid-points", o.grid_points, "override convolution grid resolution");
  cmd->add_option("--snr", o.snr_override, "override pathloss-to-noise ratio")
      ->each([&](const std::string&) { o.snr_given = true; });
  cmd->add_flag("--snr-db", o.snr_db, "interpret SNR values as dB");
}

ScenarioConfig resolve_config(const CommonOpts& o) {
  ScenarioConfig cfg = load_config_file(o.config_path);
  if (o.grid_points > 0) cfg.grid_points = o.grid_points;
  if (o.snr_given) {
    const double s = o.snr_db ? db_to_linear(o.snr_override) : o.snr_override;
    cfg.snr = s;
    for (Receiver& r : cfg.receivers) r.snr = s;
  }
  cfg.validate();
  return cfg;
}

int run(int argc, char** argv) {
  CLI::App app{"HARQ power optimization: outage bounds, geometric programming, simulation"};
  app.require_subcommand(1);

  CommonOpts bounds_opts;
  std::string bounds_powers = "max";
  double t_from = 0.0, t_to = 0.0;
  int t_points = 1;
  CLI::App* bounds = app.add_subcommand("bounds", "exact outage and both bounds vs message size");
  add_common(bounds, bounds_opts);
  bounds->add_option("--powers", bounds_powers, "schedule: comma list, one value, or 'max'");
  bounds->add_option("--t-from", t_from, "first message size (default: config message_bits)");
  bounds->add_option("--t-to", t_to, "last message size (default: config message_bits)");
  bounds->add_option("--t-points", t_points, "number of rows")->check(CLI::PositiveNumber);

  CommonOpts opt_opts;
  std::string method_str = "gp_new";
  double tol = 1e-10;
  int max_newton = 800;
  bool unconstrained = false;
  std::string powers_csv_path;
  CLI::App* optimize = app.add_subcommand("optimize", "solve the power-control program");
  add_common(optimize, opt_opts);
  optimize->add_option("--method", method_str, "max_power | gp_classic | gp_new");
  optimize->add_option("--tol", tol, "relative duality-gap target");
  optimize->add_option("--max-iterations", max_newton, "Newton iteration budget");
  optimize->add_flag("--unconstrained", unconstrained,
                     "drop box and latency constraints, substitute the tight outage constraint");
  optimize->add_option("--powers-csv", powers_csv_path, "also write the schedule as CSV");

  CommonOpts sim_opts;
  std::string sim_powers = "max", sim_schedule_file;
  std::uint64_t sim_trials = 1000000, sim_seed = 12345;
  bool sim_json = false, exp_feedback = false;
  int threads = 0;
  CLI::App* simulate = app.add_subcommand("simulate", "Monte Carlo HARQ protocol run");
  add_common(simulate, sim_opts);
  simulate->add_option("--powers", sim_powers, "schedule: comma list, one value, or 'max'");
  simulate->add_option("--schedule-file", sim_schedule_file, "file with one power per line");
  simulate->add_option("--trials", sim_trials, "number of trials")->check(CLI::PositiveNumber);
  simulate->add_option("--seed", sim_seed, "RNG seed");
  simulate->add_flag("--json", sim_json, "emit JSON instead of CSV");
  simulate->add_flag("--exp-feedback", exp_feedback, "exponential feedback delays");
  simulate->add_option("--threads", threads, "worker threads (0 = auto)");

  CommonOpts sweep_opts;
  std::string param_str = "snr", values_str, methods_str = "max_power,gp_classic,gp_new";
  std::uint64_t sweep_trials = 0, sweep_seed = 12345;
  double sweep_tol = 1e-10;
  CLI::App* sweep = app.add_subcommand("sweep", "energy/latency/outage across a parameter range");
  add_common(sweep, sweep_opts);
  sweep->add_option("--param", param_str, "snr | latency_target | message_bits | max_power");
  sweep->add_option("--values", values_str, "comma-separated sweep values")->required();
  sweep->add_option("--methods", methods_str, "subset of max_power,gp_classic,gp_new");
  sweep->add_option("--trials", sweep_trials, "Monte Carlo trials per feasible point (0 = none)");
  sweep->add_option("--seed", sweep_seed, "RNG seed");
  sweep->add_option("--tol", sweep_tol, "relative duality-gap target");

  CLI11_PARSE(app, argc, argv);

  const auto open_out = [](const std::string& path, std::ofstream& file) -> std::ostream& {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw ParseError("out: cannot open '" + path + "'");
    return file;
  };

  if (bounds->parsed()) {
    const ScenarioConfig cfg = resolve_config(bounds_opts);
    if (t_from <= 0.0) t_from = cfg.message_bits;
    if (t_to <= 0.0) t_to = std::max(t_from, cfg.message_bits);
    std::ofstream file;
    std::ostream& out = open_out(bounds_opts.out_path, file);
    return cmd_bounds(cfg, resolve_schedule(cfg, bounds_powers, ""), t_from, t_to, t_points, out);
  }
  if (optimize->parsed()) {
    const ScenarioConfig cfg = resolve_config(opt_opts);
    const auto method = method_from_name(method_str);
    if (!method) throw ValidationError("method: expected max_power|gp_classic|gp_new");
    SolverOptions solver;
    solver.gap_tol = tol;
    solver.max_newton = max_newton;
    std::ofstream file;
    std::ostream& out = open_out(opt_opts.out_path, file);
    std::ofstream powers_file;
    std::ostream* powers_out = nullptr;
    if (!powers_csv_path.empty()) {
      powers_file.open(powers_csv_path);
      if (!powers_file) throw ParseError("powers-csv: cannot open '" + powers_csv_path + "'");
      powers_out = &powers_file;
    }
    return cmd_optimize(cfg, *method, solver, unconstrained, out, powers_out);
  }
  if (simulate->parsed()) {
    const ScenarioConfig cfg = resolve_config(sim_opts);
    SimOptions so;
    so.exponential_feedback = exp_feedback;
    so.threads = threads;
    std::ofstream file;
    std::ostream& out = open_out(sim_opts.out_path, file);
    return cmd_simulate(cfg, resolve_schedule(cfg, sim_powers, sim_schedule_file), sim_trials,
                        sim_seed, so, sim_json, out);
  }
  const ScenarioConfig cfg = resolve_config(sweep_opts);
  SweepSpec spec;
  const auto param = sweep_param_from_name(param_str);
  if (!param) throw ValidationError("param: expected snr|latency_target|message_bits|max_power");
  spec.parameter = *param;
  spec.values = parse_number_list(values_str, "values");
  if (spec.parameter == SweepSpec::Param::Snr && sweep_opts.snr_db)
    for (double& v : spec.values) v = db_to_linear(v);
  std::string item;
  std::stringstream ms(methods_str);
  while (std::getline(ms, item, ',')) {
    if (item.empty()) continue;
    const auto m = method_from_name(item);
    if (!m) throw ValidationError("methods: expected subset of max_power,gp_classic,gp_new");
    spec.methods.push_back(*m);
  }
  SolverOptions solver;
  solver.gap_tol = sweep_tol;
  std::ofstream file;
  std::ostream& out = open_out(sweep_opts.out_path, file);
  return cmd_sweep(cfg, spec, sweep_trials, sweep_seed, solver, out);
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const harqopt::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const harqopt::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
