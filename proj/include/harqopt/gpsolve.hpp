#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "harqopt/errors.hpp"
#include "harqopt/outage.hpp"
#include "harqopt/scenario.hpp"

// Power control as a geometric program: the energy objective and the outage
// and latency constraints are posynomials once every Q_n is replaced by its
// monomial bound. The change of variables y = log p turns every monomial into
// exp(affine), so the program is convex and is solved with a log-barrier
// interior-point method (damped Newton inner iterations).

namespace harqopt {

struct Monomial {
  double coefficient = 1.0;            // > 0
  std::vector<double> exponents;       // one entry per power variable

  double eval(const std::vector<double>& p) const {
    double v = coefficient;
    for (std::size_t i = 0; i < exponents.size(); ++i)
      if (exponents[i] != 0.0) v *= std::pow(p[i], exponents[i]);
    return v;
  }
};

struct Posynomial {
  std::vector<Monomial> terms;

  double eval(const std::vector<double>& p) const {
    double v = 0.0;
    for (const Monomial& m : terms) v += m.eval(p);
    return v;
  }
};

struct GpModel {
  struct Constraint {
    Posynomial lhs;
    double bound = 1.0;  // > 0
    std::string name;
  };

  std::size_t n_vars = 0;
  Posynomial objective;
  std::vector<Constraint> constraints;
  double upper = 1.0;           // shared box upper bound (the power cap)
  int n_blocks = 0;             // for expanding single-variable CC schedules
  bool single_variable = false;
  int outage_constraint = -1;
  int latency_constraint = -1;
  double latency_base = 0.0;    // L_1
};

enum class SolveStatus { Optimal, Infeasible, MaxIterations };

struct SolverOptions {
  double gap_tol = 1e-10;          // relative duality-gap proxy target
  int max_outer = 80;
  int max_newton = 800;            // total Newton iterations across the path
  double power_floor_factor = 1e-8;
};

struct SolveReport {
  PowerSchedule schedule;                  // expanded to n_blocks entries
  double objective_value = 0.0;            // surrogate expected energy
  SolveStatus status = SolveStatus::Optimal;
  std::vector<double> constraint_slacks;   // bound - lhs, per constraint
  std::vector<std::string> constraint_names;
  double kkt_residual = 0.0;
  int iterations = 0;
  double predicted_latency = 0.0;          // surrogate expected latency
  bool outage_tight = false;
};

/// Builds problem: minimize surrogate E subject to the bounded outage after
/// block N, the surrogate latency budget, and the per-block power box. One
/// BoundSet per receiver; their bound values add up (union bound).
inline GpModel build_gp(const ScenarioConfig& cfg, const std::vector<BoundSet>& terms) {
  cfg.validate();
  if (terms.empty()) throw ValidationError("bounds: at least one receiver bound set required");
  const auto n = static_cast<std::size_t>(cfg.n_blocks);
  for (const BoundSet& b : terms)
    if (b.coefficients.size() != n)
      throw ValidationError("bounds: coefficient count must match n_blocks");

  GpModel model;
  model.n_blocks = cfg.n_blocks;
  model.single_variable = cfg.harq_type == HarqType::ChaseCombining;
  model.n_vars = model.single_variable ? 1 : n;
  model.upper = cfg.max_power;
  model.latency_base = cfg.block_lengths.front();

  // hat Q_{k,m} as a monomial in the decision variables (m blocks, receiver k).
  const auto qhat = [&](const BoundSet& b, std::size_t m) {
    Monomial mono;
    mono.coefficient = b.coefficients[m - 1];
    mono.exponents.assign(model.n_vars, 0.0);
    if (model.single_variable)
      mono.exponents[0] = -static_cast<double>(m) * b.exponent;
    else
      for (std::size_t i = 0; i < m; ++i) mono.exponents[i] = -b.exponent;
    return mono;
  };

  Monomial first;
  first.coefficient = cfg.block_lengths[0];
  first.exponents.assign(model.n_vars, 0.0);
  first.exponents[0] = 1.0;
  model.objective.terms.push_back(first);
  for (std::size_t m = 2; m <= n; ++m) {
    for (const BoundSet& b : terms) {
      Monomial mono = qhat(b, m - 1);
      mono.coefficient *= cfg.block_lengths[m - 1];
      mono.exponents[model.single_variable ? 0 : m - 1] += 1.0;
      model.objective.terms.push_back(mono);
    }
  }

  GpModel::Constraint outage;
  outage.name = "outage";
  outage.bound = cfg.outage_target;
  for (const BoundSet& b : terms) outage.lhs.terms.push_back(qhat(b, n));
  model.outage_constraint = static_cast<int>(model.constraints.size());
  model.constraints.push_back(std::move(outage));

  if (n >= 2) {
    const double budget = cfg.latency_target - cfg.block_lengths.front();
    if (!(budget > 0.0))
      throw InfeasibleLatency("latency_target: budget beyond the first block must be positive");
    GpModel::Constraint latency;
    latency.name = "latency";
    latency.bound = budget;
    for (std::size_t m = 1; m + 1 <= n; ++m) {
      for (const BoundSet& b : terms) {
        Monomial mono = qhat(b, m);
        mono.coefficient *= cfg.block_lengths[m] + cfg.feedback_delay_mean;
        latency.lhs.terms.push_back(mono);
      }
    }
    model.latency_constraint = static_cast<int>(model.constraints.size());
    model.constraints.push_back(std::move(latency));
  }
  return model;
}

namespace detail {

struct LogTerm {
  double log_c;
  std::vector<double> expo;
};

inline std::vector<LogTerm> to_log_terms(const Posynomial& p) {
  std::vector<LogTerm> out;
  out.reserve(p.terms.size());
  for (const Monomial& m : p.terms) {
    if (!(m.coefficient > 0.0)) throw ValidationError("monomial coefficient must be positive");
    out.push_back({std::log(m.coefficient), m.exponents});
  }
  return out;
}

// value / gradient / Hessian accumulation of sum_j exp(log_c_j + a_j . y).
inline double posy_eval(const std::vector<LogTerm>& terms, const std::vector<double>& y,
                        std::vector<double>* grad = nullptr, std::vector<double>* hess = nullptr) {
  const std::size_t n = y.size();
  double val = 0.0;
  for (const LogTerm& t : terms) {
    double ex = t.log_c;
    for (std::size_t i = 0; i < n; ++i) ex += t.expo[i] * y[i];
    const double v = std::exp(ex);
    val += v;
    if (grad)
      for (std::size_t i = 0; i < n; ++i) (*grad)[i] += v * t.expo[i];
    if (hess)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) (*hess)[i * n + j] += v * t.expo[i] * t.expo[j];
  }
  return val;
}

// In-place Cholesky solve of H d = rhs with a growing ridge as a fallback.
inline bool solve_spd(std::vector<double> h, std::vector<double> rhs, std::size_t n,
                      std::vector<double>& out) {
  double trace = 0.0;
  for (std::size_t i = 0; i < n; ++i) trace += h[i * n + i];
  double ridge = 0.0;
  for (int attempt = 0; attempt < 8; ++attempt) {
    std::vector<double> a = h;
    if (ridge > 0.0)
      for (std::size_t i = 0; i < n; ++i) a[i * n + i] += ridge;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        double s = a[i * n + j];
        for (std::size_t k = 0; k < j; ++k) s -= a[i * n + k] * a[j * n + k];
        if (i == j) {
          if (!(s > 0.0)) { ok = false; break; }
          a[i * n + i] = std::sqrt(s);
        } else {
          a[i * n + j] = s / a[j * n + j];
        }
      }
    }
    if (ok) {
      std::vector<double> x = rhs;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < i; ++k) x[i] -= a[i * n + k] * x[k];
        x[i] /= a[i * n + i];
      }
      for (std::size_t ii = n; ii-- > 0;) {
        for (std::size_t k = ii + 1; k < n; ++k) x[ii] -= a[k * n + ii] * x[k];
        x[ii] /= a[ii * n + ii];
      }
      out = std::move(x);
      return true;
    }
    ridge = ridge == 0.0 ? std::max(1e-14 * trace / n, 1e-300) : ridge * 100.0;
  }
  return false;
}

struct BarrierProblem {
  std::vector<LogTerm> objective;
  struct Ineq {
    std::vector<LogTerm> terms;
    double bound;
  };
  std::vector<Ineq> ineqs;
  std::vector<double> y_lo, y_hi;

  std::size_t barrier_count() const { return ineqs.size() + 2 * y_lo.size(); }

  bool strictly_feasible(const std::vector<double>& y) const {
    for (std::size_t i = 0; i < y.size(); ++i)
      if (!(y[i] > y_lo[i] && y[i] < y_hi[i])) return false;
    for (const Ineq& q : ineqs)
      if (!(posy_eval(q.terms, y) < q.bound)) return false;
    return true;
  }

  // Barrier objective; +inf outside the strictly feasible region.
  double phi(const std::vector<double>& y, double mu, std::vector<double>* grad = nullptr,
             std::vector<double>* hess = nullptr) const {
    const std::size_t n = y.size();
    if (grad) grad->assign(n, 0.0);
    if (hess) hess->assign(n * n, 0.0);
    double val = posy_eval(objective, y, grad, hess);
    for (const Ineq& q : ineqs) {
      std::vector<double> g(n, 0.0);
      std::vector<double> h;
      if (hess) h.assign(n * n, 0.0);
      const double gv = posy_eval(q.terms, y, &g, hess ? &h : nullptr);
      const double slack = q.bound - gv;
      if (!(slack > 0.0)) return std::numeric_limits<double>::infinity();
      val -= mu * std::log(slack);
      if (grad)
        for (std::size_t i = 0; i < n; ++i) (*grad)[i] += mu * g[i] / slack;
      if (hess)
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j)
            (*hess)[i * n + j] += mu * (h[i * n + j] / slack + g[i] * g[j] / (slack * slack));
    }
    for (std::size_t i = 0; i < n; ++i) {
      const double up = y_hi[i] - y[i];
      const double lo = y[i] - y_lo[i];
      if (!(up > 0.0 && lo > 0.0)) return std::numeric_limits<double>::infinity();
      val -= mu * (std::log(up) + std::log(lo));
      if (grad) (*grad)[i] += mu * (1.0 / up - 1.0 / lo);
      if (hess) (*hess)[i * n + i] += mu * (1.0 / (up * up) + 1.0 / (lo * lo));
    }
    return val;
  }
};

}  // namespace detail

inline SolveReport solve_gp(const GpModel& model, const SolverOptions& opts = {}) {
  const std::size_t n = model.n_vars;
  const double cap = model.upper;
  const double floor = opts.power_floor_factor * cap;

  const auto finish = [&](const std::vector<double>& p, SolveStatus status, int iters,
                          double kkt) {
    SolveReport rep;
    rep.status = status;
    rep.iterations = iters;
    rep.kkt_residual = kkt;
    std::vector<double> full(static_cast<std::size_t>(model.n_blocks));
    for (std::size_t i = 0; i < full.size(); ++i) full[i] = model.single_variable ? p[0] : p[i];
    rep.schedule.powers = full;
    rep.objective_value = model.objective.eval(p);
    for (const auto& c : model.constraints) {
      rep.constraint_names.push_back(c.name);
      rep.constraint_slacks.push_back(c.bound - c.lhs.eval(p));
    }
    if (model.outage_constraint >= 0) {
      const auto& oc = model.constraints[static_cast<std::size_t>(model.outage_constraint)];
      rep.outage_tight = rep.constraint_slacks[static_cast<std::size_t>(model.outage_constraint)] <=
                         1e-6 * oc.bound;
    }
    rep.predicted_latency = model.latency_base;
    if (model.latency_constraint >= 0)
      rep.predicted_latency +=
          model.constraints[static_cast<std::size_t>(model.latency_constraint)].lhs.eval(p);
    return rep;
  };

  // Every constraint monomial has nonpositive exponents, so p = cap minimizes
  // each constraint posynomial: infeasibility at the cap is conclusive.
  const std::vector<double> at_cap(n, cap);
  for (const auto& c : model.constraints)
    if (c.lhs.eval(at_cap) > c.bound * (1.0 + 1e-9))
      return finish(at_cap, SolveStatus::Infeasible, 0, 0.0);

  detail::BarrierProblem bp;
  bp.objective = detail::to_log_terms(model.objective);
  for (const auto& c : model.constraints)
    bp.ineqs.push_back({detail::to_log_terms(c.lhs), c.bound});
  bp.y_lo.assign(n, std::log(floor));
  bp.y_hi.assign(n, std::log(cap));

  // Strictly feasible start: back off from the cap until all slacks open up.
  std::vector<double> y;
  for (double margin = 0.1; margin > 1e-10; margin *= 0.1) {
    std::vector<double> candidate(n, std::log((1.0 - margin) * cap));
    if (bp.strictly_feasible(candidate)) {
      y = std::move(candidate);
      break;
    }
  }
  if (y.empty()) {
    // The feasible set has collapsed onto the cap itself.
    return finish(at_cap, SolveStatus::Optimal, 0, 0.0);
  }

  // Objective-relative barrier scaling keeps the solve trajectory invariant
  // under a common rescaling of all coefficients and bounds.
  const double m_total = static_cast<double>(bp.barrier_count());
  const double f0_start = detail::posy_eval(bp.objective, y);
  double mu = std::max(1e-300, std::abs(f0_start)) / m_total;

  int newton_used = 0;
  bool converged = false;
  std::vector<double> grad, hess, step;
  for (int outer = 0; outer < opts.max_outer; ++outer) {
    double prev_val = std::numeric_limits<double>::infinity();
    for (;;) {
      if (newton_used >= opts.max_newton) break;
      const double val = bp.phi(y, mu, &grad, &hess);
      if (!std::isfinite(val)) break;
      if (val >= prev_val - 1e-15 * (1.0 + std::abs(val))) break;  // stalled at noise level
      prev_val = val;
      if (!detail::solve_spd(hess, grad, n, step)) break;
      ++newton_used;
      double decrement = 0.0;
      for (std::size_t i = 0; i < n; ++i) decrement += grad[i] * step[i];
      if (decrement <= 1e-20 * (1.0 + std::abs(val))) break;
      double t = 1.0;
      std::vector<double> trial(n);
      for (int ls = 0; ls < 60; ++ls) {
        for (std::size_t i = 0; i < n; ++i) trial[i] = y[i] - t * step[i];
        const double tv = bp.phi(trial, mu);
        if (tv <= val - 0.25 * t * decrement) break;
        t *= 0.5;
      }
      for (std::size_t i = 0; i < n; ++i) y[i] -= t * step[i];
    }
    const double f0 = detail::posy_eval(bp.objective, y);
    if (mu * m_total <= opts.gap_tol * std::max(1e-300, std::abs(f0))) {
      converged = true;
      break;
    }
    if (newton_used >= opts.max_newton) break;
    mu *= 0.1;
  }

  // Stationarity residual with least-squares multipliers over the active
  // constraints; the raw barrier gradient is a poor metric once slacks shrink
  // to the final-mu scale.
  std::vector<double> grad_f0(n, 0.0);
  detail::posy_eval(bp.objective, y, &grad_f0);
  double gf_norm = 0.0;
  for (double g : grad_f0) gf_norm = std::max(gf_norm, std::abs(g));
  std::vector<std::vector<double>> active;  // unit-norm gradients of active constraints
  const auto push_active = [&](std::vector<double> g) {
    double norm = 0.0;
    for (double v : g) norm += v * v;
    norm = std::sqrt(norm);
    if (norm <= 0.0) return;
    for (double& v : g) v /= norm;
    active.push_back(std::move(g));
  };
  for (const auto& q : bp.ineqs) {
    std::vector<double> g(n, 0.0);
    const double v = detail::posy_eval(q.terms, y, &g);
    if (q.bound - v <= 1e-5 * (1.0 + q.bound)) push_active(std::move(g));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (bp.y_hi[i] - y[i] <= 1e-5) {
      std::vector<double> g(n, 0.0);
      g[i] = 1.0;
      push_active(std::move(g));
    }
    if (y[i] - bp.y_lo[i] <= 1e-5) {
      std::vector<double> g(n, 0.0);
      g[i] = -1.0;
      push_active(std::move(g));
    }
  }
  double kkt = 0.0;
  {
    const std::size_t m = active.size();
    std::vector<double> lambda(m, 0.0);
    if (m > 0) {
      std::vector<double> gram(m * m, 0.0), rhs(m, 0.0);
      for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b)
          for (std::size_t i = 0; i < n; ++i) gram[a * m + b] += active[a][i] * active[b][i];
        gram[a * m + a] += 1e-12;
        for (std::size_t i = 0; i < n; ++i) rhs[a] -= active[a][i] * grad_f0[i];
      }
      detail::solve_spd(gram, rhs, m, lambda);
      for (double& l : lambda) l = std::max(0.0, l);
    }
    for (std::size_t i = 0; i < n; ++i) {
      double r = grad_f0[i];
      for (std::size_t a = 0; a < m; ++a) r += lambda[a] * active[a][i];
      kkt = std::max(kkt, std::abs(r));
    }
    kkt /= 1.0 + gf_norm;
  }

  std::vector<double> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = std::exp(y[i]);
  return finish(p, converged ? SolveStatus::Optimal : SolveStatus::MaxIterations, newton_used,
                kkt);
}

/// Expected-performance triple (final outage, energy, latency).
struct Metrics {
  double outage = 0.0;
  double energy = 0.0;
  double latency = 0.0;
};

/// Plugs a sequence Q_1..Q_N (exact probabilities or bound values) into the
/// energy and latency expectations.
inline Metrics metrics_from_outage(const ScenarioConfig& cfg, const PowerSchedule& schedule,
                                   const std::vector<double>& q) {
  const auto n = static_cast<std::size_t>(cfg.n_blocks);
  Metrics m;
  m.outage = q[n - 1];
  m.energy = schedule.powers[0] * cfg.block_lengths[0];
  m.latency = cfg.block_lengths[0];
  for (std::size_t i = 1; i < n; ++i) {
    m.energy += schedule.powers[i] * cfg.block_lengths[i] * q[i - 1];
    m.latency += (cfg.block_lengths[i] + cfg.feedback_delay_mean) * q[i - 1];
  }
  return m;
}

inline Metrics predicted_metrics_exact(const ScenarioConfig& cfg, const PowerSchedule& schedule) {
  return metrics_from_outage(cfg, schedule, exact_outage_all(cfg, schedule));
}

inline Metrics predicted_metrics_bound(const ScenarioConfig& cfg,
                                       const std::vector<BoundSet>& terms,
                                       const PowerSchedule& schedule) {
  const auto n = static_cast<std::size_t>(cfg.n_blocks);
  std::vector<double> q(n, 0.0);
  for (std::size_t i = 1; i <= n; ++i)
    q[i - 1] = aggregate_bound_outage(terms, schedule, static_cast<int>(i));
  return metrics_from_outage(cfg, schedule, q);
}

/// Result of the reduced solve with the box and latency constraints dropped
/// and the outage constraint substituted in as an equality.
struct UnconstrainedSolution {
  PowerSchedule schedule;
  double objective = 0.0;
  int iterations = 0;
  double grad_norm = 0.0;
};

/// Minimizes the surrogate energy with only the tight outage constraint,
/// eliminating p_N; exposes the stationarity structure of the solution.
inline UnconstrainedSolution solve_unconstrained(const ScenarioConfig& cfg,
                                                 const BoundSet& bounds) {
  cfg.validate();
  if (cfg.harq_type != HarqType::IncrementalRedundancy || cfg.is_broadcast())
    throw ValidationError("unconstrained mode supports point-to-point incremental redundancy");
  const auto n = static_cast<std::size_t>(cfg.n_blocks);
  if (n < 2) throw ValidationError("n_blocks: unconstrained mode needs N >= 2");
  const double e = bounds.exponent;
  const auto& a = bounds.coefficients;
  const std::size_t nv = n - 1;

  std::vector<detail::LogTerm> terms;
  {
    detail::LogTerm t0{std::log(cfg.block_lengths[0]), std::vector<double>(nv, 0.0)};
    t0.expo[0] = 1.0;
    terms.push_back(t0);
    for (std::size_t m = 2; m <= n - 1; ++m) {
      detail::LogTerm t{std::log(cfg.block_lengths[m - 1] * a[m - 2]),
                        std::vector<double>(nv, -e)};
      for (std::size_t i = m - 1; i < nv; ++i) t.expo[i] = 0.0;
      t.expo[m - 1] += 1.0;
      terms.push_back(t);
    }
    detail::LogTerm tn{std::log(cfg.block_lengths[n - 1] * a[n - 2]) +
                           std::log(a[n - 1] / cfg.outage_target) / e,
                       std::vector<double>(nv, -(1.0 + e))};
    terms.push_back(tn);
  }

  std::vector<double> y(nv, 0.0), grad, hess, step;
  int iters = 0;
  double gnorm = 0.0;
  for (; iters < 300; ++iters) {
    grad.assign(nv, 0.0);
    hess.assign(nv * nv, 0.0);
    const double val = detail::posy_eval(terms, y, &grad, &hess);
    gnorm = 0.0;
    for (double g : grad) gnorm = std::max(gnorm, std::abs(g));
    if (gnorm <= 1e-13 * (1.0 + std::abs(val))) break;
    if (!detail::solve_spd(hess, grad, nv, step)) break;
    double t = 1.0;
    std::vector<double> trial(nv);
    for (int ls = 0; ls < 60; ++ls) {
      for (std::size_t i = 0; i < nv; ++i) trial[i] = y[i] - t * step[i];
      if (detail::posy_eval(terms, trial) <= val) break;
      t *= 0.5;
    }
    for (std::size_t i = 0; i < nv; ++i) y[i] -= t * step[i];
  }

  UnconstrainedSolution sol;
  sol.iterations = iters;
  sol.grad_norm = gnorm;
  sol.objective = detail::posy_eval(terms, y);
  sol.schedule.powers.resize(n);
  double prod = 1.0;
  for (std::size_t i = 0; i < nv; ++i) {
    sol.schedule.powers[i] = std::exp(y[i]);
    prod *= sol.schedule.powers[i];
  }
  sol.schedule.powers[n - 1] = std::pow(a[n - 1] / cfg.outage_target, 1.0 / e) / prod;
  return sol;
}

/// Residuals of the stationarity relation for the latency-free problem:
///   L_n Qhat_{n-1} p_n = (1+e) L_{n+1} Qhat_n p_{n+1} + eta e (L_{n+1}+pi) Qhat_n,
/// one per n = 1..N-1, normalized by the left-hand side. With a unit exponent
/// this is the classical factor-2 relation.
inline std::vector<double> kkt_unconstrained_residuals(const ScenarioConfig& cfg,
                                                       const BoundSet& bounds,
                                                       const PowerSchedule& schedule, double eta) {
  const auto n = static_cast<std::size_t>(cfg.n_blocks);
  const double e = bounds.exponent;
  std::vector<double> qhat(n + 1, 1.0);  // qhat[0] = 1
  for (std::size_t i = 1; i <= n; ++i)
    qhat[i] = bound_outage(bounds, schedule, static_cast<int>(i));
  std::vector<double> res;
  for (std::size_t i = 1; i <= n - 1; ++i) {
    const double lhs = cfg.block_lengths[i - 1] * qhat[i - 1] * schedule.powers[i - 1];
    const double rhs =
        (1.0 + e) * cfg.block_lengths[i] * qhat[i] * schedule.powers[i] +
        eta * e * (cfg.block_lengths[i] + cfg.feedback_delay_mean) * qhat[i];
    res.push_back((lhs - rhs) / lhs);
  }
  return res;
}

/// Relative error of p_N / p_1 against the chained stationarity prediction
/// L_1 / ((1+e)^(N-1) Qhat_{N-1} L_N).
inline double power_ratio_error(const ScenarioConfig& cfg, const BoundSet& bounds,
                                const PowerSchedule& schedule) {
  const auto n = static_cast<std::size_t>(cfg.n_blocks);
  const double e = bounds.exponent;
  const double qhat = bound_outage(bounds, schedule, static_cast<int>(n - 1));
  const double predicted = cfg.block_lengths[0] /
                           (std::pow(1.0 + e, static_cast<double>(n - 1)) * qhat *
                            cfg.block_lengths[n - 1]);
  const double actual = schedule.powers[n - 1] / schedule.powers[0];
  return std::abs(actual - predicted) / predicted;
}

}  // namespace harqopt
