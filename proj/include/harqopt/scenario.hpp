#pragma once

#include <cmath>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "harqopt/errors.hpp"

namespace harqopt {

/// Per-block fading law for the channel power |z|^2.
///
/// Every supported family is a Gamma law for the fading power:
/// Rayleigh -> Gamma(1,1), Nakagami-kappa -> Gamma(kappa,kappa),
/// Rician-mu -> Nakagami with kappa=(mu+1)^2/(2mu+1), and M-branch
/// diversity -> Gamma(M,1).
struct FadingModel {
  enum class Family { Rayleigh, Nakagami, Rician, RayleighDiversity };

  Family family = Family::Rayleigh;
  double kappa = 1.0;  // Nakagami shape
  double mu = 0.0;     // Rician K-factor
  int antennas = 1;    // diversity branches

  static FadingModel rayleigh() { return FadingModel{}; }
  static FadingModel nakagami(double kappa) {
    FadingModel m;
    m.family = Family::Nakagami;
    m.kappa = kappa;
    return m;
  }
  static FadingModel rician(double mu) {
    FadingModel m;
    m.family = Family::Rician;
    m.mu = mu;
    return m;
  }
  static FadingModel diversity(int antennas) {
    FadingModel m;
    m.family = Family::RayleighDiversity;
    m.antennas = antennas;
    return m;
  }

  void validate() const {
    switch (family) {
      case Family::Rayleigh:
        break;
      case Family::Nakagami:
        if (!(kappa > 0.5)) throw ValidationError("fading.kappa: Nakagami requires kappa > 1/2");
        break;
      case Family::Rician:
        if (!(mu >= 0.0)) throw ValidationError("fading.mu: Rician requires mu >= 0");
        break;
      case Family::RayleighDiversity:
        if (antennas < 1) throw ValidationError("fading.antennas: diversity requires M >= 1");
        break;
    }
  }

  /// Shape parameter of the Gamma fading-power law (1, kappa, or M).
  double power_shape() const {
    switch (family) {
      case Family::Rayleigh: return 1.0;
      case Family::Nakagami: return kappa;
      case Family::Rician: return (mu + 1.0) * (mu + 1.0) / (2.0 * mu + 1.0);
      case Family::RayleighDiversity: return static_cast<double>(antennas);
    }
    return 1.0;
  }

  /// Rate parameter of the Gamma fading-power law (kappa for Nakagami-type
  /// families so the mean power stays 1, else 1).
  double power_rate() const {
    switch (family) {
      case Family::Rayleigh: return 1.0;
      case Family::Nakagami: return kappa;
      case Family::Rician: return power_shape();
      case Family::RayleighDiversity: return 1.0;
    }
    return 1.0;
  }

  bool operator==(const FadingModel&) const = default;
};

enum class HarqType { IncrementalRedundancy, ChaseCombining };

/// One broadcast receiver: its own pathloss-to-noise ratio and fading law.
struct Receiver {
  double snr = 1.0;
  FadingModel fading;
  bool operator==(const Receiver&) const = default;
};

/// Transmit power per HARQ round, linear scale.
struct PowerSchedule {
  std::vector<double> powers;

  static PowerSchedule uniform(double p, std::size_t n) {
    return PowerSchedule{std::vector<double>(n, p)};
  }
};

/// A full problem instance. Immutable by convention once validated.
struct ScenarioConfig {
  int n_blocks = 1;
  std::vector<double> block_lengths = {1.0};
  double snr = 1.0;                 // pathloss-to-noise ratio, linear
  double max_power = 1.0;           // per-block power cap, linear
  double message_bits = 1.0;
  double outage_target = 0.5;       // epsilon in (0,1)
  double latency_target = 1.0;      // delta, same units as block lengths
  double feedback_delay_mean = 0.0;
  HarqType harq_type = HarqType::IncrementalRedundancy;
  FadingModel fading;
  std::vector<Receiver> receivers;  // empty = point-to-point
  int grid_points = 4096;

  bool operator==(const ScenarioConfig&) const = default;

  bool is_broadcast() const { return !receivers.empty(); }

  /// Receivers the protocol actually serves: the explicit broadcast list, or
  /// the single (snr, fading) pair for point-to-point.
  std::vector<Receiver> effective_receivers() const {
    if (!receivers.empty()) return receivers;
    return {Receiver{snr, fading}};
  }

  bool equal_block_lengths() const {
    for (double l : block_lengths)
      if (l != block_lengths.front()) return false;
    return true;
  }

  void validate() const {
    if (n_blocks < 1) throw ValidationError("n_blocks: must be >= 1");
    if (block_lengths.size() != static_cast<std::size_t>(n_blocks))
      throw ValidationError("block_lengths: must have exactly n_blocks entries");
    for (double l : block_lengths)
      if (!(l > 0.0) || !std::isfinite(l)) throw ValidationError("block_lengths: must be positive");
    if (harq_type == HarqType::ChaseCombining && !equal_block_lengths())
      throw ValidationError("block_lengths: Chase combining repeats the initial block, all L_n must equal L_1");
    if (!(snr > 0.0) || !std::isfinite(snr)) throw ValidationError("snr: must be positive");
    if (!(max_power > 0.0) || !std::isfinite(max_power)) throw ValidationError("max_power: must be positive");
    if (!(message_bits > 0.0) || !std::isfinite(message_bits)) throw ValidationError("message_bits: must be positive");
    if (!(outage_target > 0.0 && outage_target < 1.0))
      throw ValidationError("outage_target: must lie in (0,1)");
    if (!(latency_target >= block_lengths.front()))
      throw ValidationError("latency_target: must be at least L_1");
    if (!(feedback_delay_mean >= 0.0)) throw ValidationError("feedback_delay_mean: must be >= 0");
    fading.validate();
    if (!receivers.empty()) {
      if (receivers.size() < 2)
        throw ValidationError("receivers: broadcast needs K >= 2 receivers (omit the list for point-to-point)");
      for (const Receiver& r : receivers) {
        if (!(r.snr > 0.0) || !std::isfinite(r.snr)) throw ValidationError("receivers.snr: must be positive");
        r.fading.validate();
      }
    }
    if (grid_points < 2) throw ValidationError("grid_points: must be >= 2");
  }
};

/// Checks a schedule against a scenario: N entries, each in (0, P].
inline void validate_power_schedule(const ScenarioConfig& cfg, const PowerSchedule& schedule) {
  if (schedule.powers.size() != static_cast<std::size_t>(cfg.n_blocks))
    throw ValidationError("powers: must have exactly n_blocks entries");
  for (double p : schedule.powers) {
    if (!(p > 0.0) || !std::isfinite(p)) throw ValidationError("powers: must be positive");
    if (p > cfg.max_power * (1.0 + 1e-12)) throw ValidationError("powers: must not exceed max_power");
  }
}

namespace detail {

inline const char* fading_family_name(FadingModel::Family f) {
  switch (f) {
    case FadingModel::Family::Rayleigh: return "rayleigh";
    case FadingModel::Family::Nakagami: return "nakagami";
    case FadingModel::Family::Rician: return "rician";
    case FadingModel::Family::RayleighDiversity: return "rayleigh_diversity";
  }
  return "rayleigh";
}

inline nlohmann::json fading_to_json(const FadingModel& m) {
  nlohmann::json j;
  j["family"] = fading_family_name(m.family);
  switch (m.family) {
    case FadingModel::Family::Nakagami: j["kappa"] = m.kappa; break;
    case FadingModel::Family::Rician: j["mu"] = m.mu; break;
    case FadingModel::Family::RayleighDiversity: j["antennas"] = m.antennas; break;
    default: break;
  }
  return j;
}

inline void require_keys(const nlohmann::json& j, std::initializer_list<const char*> allowed,
                         const char* where) {
  for (const auto& item : j.items()) {
    bool known = false;
    for (const char* k : allowed)
      if (item.key() == k) { known = true; break; }
    if (!known) throw ParseError(std::string("unknown key '") + item.key() + "' in " + where);
  }
}

inline FadingModel fading_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("family") || !j["family"].is_string())
    throw ParseError("fading: expected an object with a 'family' string");
  require_keys(j, {"family", "kappa", "mu", "antennas"}, "fading");
  const std::string family = j["family"].get<std::string>();
  if (family == "rayleigh") return FadingModel::rayleigh();
  if (family == "nakagami") {
    if (!j.contains("kappa") || !j["kappa"].is_number()) throw ParseError("fading: nakagami needs numeric 'kappa'");
    return FadingModel::nakagami(j["kappa"].get<double>());
  }
  if (family == "rician") {
    if (!j.contains("mu") || !j["mu"].is_number()) throw ParseError("fading: rician needs numeric 'mu'");
    return FadingModel::rician(j["mu"].get<double>());
  }
  if (family == "rayleigh_diversity") {
    if (!j.contains("antennas") || !j["antennas"].is_number_integer())
      throw ParseError("fading: rayleigh_diversity needs integer 'antennas'");
    return FadingModel::diversity(j["antennas"].get<int>());
  }
  throw ParseError("fading.family: expected one of rayleigh|nakagami|rician|rayleigh_diversity");
}

inline double number_field(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing key '") + key + "'");
  if (!j[key].is_number()) throw ParseError(std::string("key '") + key + "' must be a number");
  return j[key].get<double>();
}

}  // namespace detail

inline nlohmann::json scenario_to_json(const ScenarioConfig& cfg) {
  nlohmann::json j;
  j["n_blocks"] = cfg.n_blocks;
  j["block_lengths"] = cfg.block_lengths;
  j["snr"] = cfg.snr;
  j["max_power"] = cfg.max_power;
  j["message_bits"] = cfg.message_bits;
  j["outage_target"] = cfg.outage_target;
  j["latency_target"] = cfg.latency_target;
  j["feedback_delay_mean"] = cfg.feedback_delay_mean;
  j["harq_type"] = cfg.harq_type == HarqType::IncrementalRedundancy ? "incremental_redundancy"
                                                                    : "chase_combining";
  j["fading"] = detail::fading_to_json(cfg.fading);
  if (!cfg.receivers.empty()) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Receiver& r : cfg.receivers) {
      nlohmann::json rj;
      rj["snr"] = r.snr;
      rj["fading"] = detail::fading_to_json(r.fading);
      arr.push_back(rj);
    }
    j["receivers"] = arr;
  }
  j["grid_points"] = cfg.grid_points;
  return j;
}

inline std::string serialize_scenario(const ScenarioConfig& cfg) {
  return scenario_to_json(cfg).dump(2) + "\n";
}

inline ScenarioConfig scenario_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("config: top level must be a JSON object");
  detail::require_keys(j,
                       {"n_blocks", "block_lengths", "snr", "max_power", "message_bits",
                        "outage_target", "latency_target", "feedback_delay_mean", "harq_type",
                        "fading", "receivers", "grid_points"},
                       "config");
  ScenarioConfig cfg;
  if (!j.contains("n_blocks") || !j["n_blocks"].is_number_integer())
    throw ParseError("n_blocks: expected an integer");
  cfg.n_blocks = j["n_blocks"].get<int>();
  if (!j.contains("block_lengths") || !j["block_lengths"].is_array())
    throw ParseError("block_lengths: expected an array of numbers");
  cfg.block_lengths.clear();
  for (const auto& v : j["block_lengths"]) {
    if (!v.is_number()) throw ParseError("block_lengths: expected an array of numbers");
    cfg.block_lengths.push_back(v.get<double>());
  }
  cfg.snr = detail::number_field(j, "snr");
  cfg.max_power = detail::number_field(j, "max_power");
  cfg.message_bits = detail::number_field(j, "message_bits");
  cfg.outage_target = detail::number_field(j, "outage_target");
  cfg.latency_target = detail::number_field(j, "latency_target");
  cfg.feedback_delay_mean = j.contains("feedback_delay_mean")
                                ? detail::number_field(j, "feedback_delay_mean")
                                : 0.0;
  if (!j.contains("harq_type") || !j["harq_type"].is_string())
    throw ParseError("harq_type: expected a string");
  const std::string ht = j["harq_type"].get<std::string>();
  if (ht == "incremental_redundancy")
    cfg.harq_type = HarqType::IncrementalRedundancy;
  else if (ht == "chase_combining")
    cfg.harq_type = HarqType::ChaseCombining;
  else
    throw ParseError("harq_type: expected incremental_redundancy|chase_combining");
  if (!j.contains("fading")) throw ParseError("missing key 'fading'");
  cfg.fading = detail::fading_from_json(j["fading"]);
  if (j.contains("receivers")) {
    if (!j["receivers"].is_array()) throw ParseError("receivers: expected an array");
    for (const auto& rj : j["receivers"]) {
      detail::require_keys(rj, {"snr", "fading"}, "receivers[]");
      Receiver r;
      r.snr = detail::number_field(rj, "snr");
      if (!rj.contains("fading")) throw ParseError("receivers[]: missing 'fading'");
      r.fading = detail::fading_from_json(rj["fading"]);
      cfg.receivers.push_back(r);
    }
  }
  if (j.contains("grid_points")) {
    if (!j["grid_points"].is_number_integer()) throw ParseError("grid_points: expected an integer");
    cfg.grid_points = j["grid_points"].get<int>();
  }
  cfg.validate();
  return cfg;
}

inline ScenarioConfig load_scenario(std::istream& in) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("config: ") + e.what());
  }
  return scenario_from_json(j);
}

inline ScenarioConfig load_scenario(const std::string& text) {
  std::istringstream in(text);
  return load_scenario(in);
}

/// The reference experiment setting: N=5 unit-length blocks, t=4 bits,
/// epsilon=1e-5, delta=3, no feedback delay, unit power cap, incremental
/// redundancy over Rayleigh fading.
inline ScenarioConfig paper_default_scenario(double snr) {
  if (!(snr > 0.0)) throw ValidationError("snr: must be positive");
  ScenarioConfig cfg;
  cfg.n_blocks = 5;
  cfg.block_lengths = {1.0, 1.0, 1.0, 1.0, 1.0};
  cfg.snr = snr;
  cfg.max_power = 1.0;
  cfg.message_bits = 4.0;
  cfg.outage_target = 1e-5;
  cfg.latency_target = 3.0;
  cfg.feedback_delay_mean = 0.0;
  cfg.harq_type = HarqType::IncrementalRedundancy;
  cfg.fading = FadingModel::rayleigh();
  cfg.grid_points = 4096;
  cfg.validate();
  return cfg;
}

/// FNV-1a over the canonical serialized form; used to tag CSV outputs.
inline std::uint64_t scenario_hash(const ScenarioConfig& cfg) {
  const std::string text = scenario_to_json(cfg).dump();
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace harqopt
