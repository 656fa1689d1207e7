#include <catch2/catch_amalgamated.hpp>

#include <sstream>
#include <string>

#include "harqopt/scenario.hpp"

using namespace harqopt;

namespace {

const char* kMinimal = R"({
  "n_blocks": 1,
  "block_lengths": [1.0],
  "snr": 2.0,
  "max_power": 1.0,
  "message_bits": 1.0,
  "outage_target": 0.5,
  "latency_target": 10.0,
  "feedback_delay_mean": 0.0,
  "harq_type": "incremental_redundancy",
  "fading": {"family": "rayleigh"}
})";

std::string with_replacement(std::string text, const std::string& from, const std::string& to) {
  text.replace(text.find(from), from.size(), to);
  return text;
}

}  // namespace

TEST_CASE("minimal config loads") {
  const ScenarioConfig cfg = load_scenario(std::string(kMinimal));
  CHECK(cfg.n_blocks == 1);
  CHECK(cfg.snr == 2.0);
  CHECK(cfg.message_bits == 1.0);
  CHECK(cfg.harq_type == HarqType::IncrementalRedundancy);
  CHECK(cfg.fading.family == FadingModel::Family::Rayleigh);
  CHECK(cfg.grid_points == 4096);  // default
  CHECK_FALSE(cfg.is_broadcast());
  CHECK(cfg.effective_receivers().size() == 1);
}

TEST_CASE("invariant violations name the field") {
  CHECK_THROWS_WITH(load_scenario(with_replacement(kMinimal, "\"outage_target\": 0.5", "\"outage_target\": 1.5")),
                    Catch::Matchers::ContainsSubstring("outage_target"));
  CHECK_THROWS_AS(load_scenario(with_replacement(kMinimal, "\"snr\": 2.0", "\"snr\": -1")),
                  ValidationError);
  CHECK_THROWS_WITH(load_scenario(with_replacement(kMinimal, "\"latency_target\": 10.0", "\"latency_target\": 0.5")),
                    Catch::Matchers::ContainsSubstring("latency_target"));
  CHECK_THROWS_AS(load_scenario(with_replacement(kMinimal, "\"message_bits\": 1.0", "\"message_bits\": 0")),
                  ValidationError);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(load_scenario(std::string("{ not json")), ParseError);
  CHECK_THROWS_AS(load_scenario(with_replacement(kMinimal, "\"snr\"", "\"snr_db\"")), ParseError);
  CHECK_THROWS_AS(load_scenario(with_replacement(kMinimal, "\"harq_type\": \"incremental_redundancy\"",
                                                 "\"harq_type\": \"type_i\"")),
                  ParseError);
  // unknown top-level key
  CHECK_THROWS_AS(load_scenario(with_replacement(kMinimal, "\"snr\": 2.0", "\"snr\": 2.0, \"bogus\": 1")),
                  ParseError);
}

TEST_CASE("chase combining requires repeated block lengths") {
  ScenarioConfig cfg = load_scenario(std::string(kMinimal));
  cfg.n_blocks = 3;
  cfg.block_lengths = {1.0, 1.0, 1.0};
  cfg.harq_type = HarqType::ChaseCombining;
  CHECK_NOTHROW(cfg.validate());
  cfg.block_lengths = {1.0, 2.0, 1.0};
  CHECK_THROWS_AS(cfg.validate(), ValidationError);
}

TEST_CASE("broadcast receiver list needs at least two entries") {
  ScenarioConfig cfg = load_scenario(std::string(kMinimal));
  cfg.receivers = {Receiver{2.0, FadingModel::rayleigh()}};
  CHECK_THROWS_AS(cfg.validate(), ValidationError);
  cfg.receivers.push_back(Receiver{4.0, FadingModel::diversity(2)});
  CHECK_NOTHROW(cfg.validate());
  CHECK(cfg.effective_receivers().size() == 2);
}

TEST_CASE("fading parameter domains") {
  CHECK_THROWS_AS(FadingModel::nakagami(0.5).validate(), ValidationError);
  CHECK_NOTHROW(FadingModel::nakagami(0.51).validate());
  CHECK_THROWS_AS(FadingModel::rician(-0.1).validate(), ValidationError);
  CHECK_THROWS_AS(FadingModel::diversity(0).validate(), ValidationError);
  // Rician routes through the Nakagami shape
  CHECK(FadingModel::rician(0.0).power_shape() == Catch::Approx(1.0));
  CHECK(FadingModel::rician(1.0).power_shape() == Catch::Approx(4.0 / 3.0));
  CHECK(FadingModel::rayleigh().power_shape() == 1.0);
  CHECK(FadingModel::diversity(4).power_shape() == 4.0);
}

TEST_CASE("reference scenario") {
  const ScenarioConfig cfg = paper_default_scenario(8.0);
  CHECK(cfg.n_blocks == 5);
  CHECK(cfg.block_lengths == std::vector<double>(5, 1.0));
  CHECK(cfg.snr == 8.0);
  CHECK(cfg.max_power == 1.0);
  CHECK(cfg.message_bits == 4.0);
  CHECK(cfg.outage_target == 1e-5);
  CHECK(cfg.latency_target == 3.0);
  CHECK(cfg.feedback_delay_mean == 0.0);
  CHECK(paper_default_scenario(50.0).snr == 50.0);
  CHECK_THROWS_AS(paper_default_scenario(0.0), ValidationError);
}

TEST_CASE("serialization round trip") {
  ScenarioConfig a = paper_default_scenario(8.0);
  CHECK(load_scenario(serialize_scenario(a)) == a);

  ScenarioConfig b = a;
  b.harq_type = HarqType::ChaseCombining;
  b.fading = FadingModel::nakagami(2.25);
  b.feedback_delay_mean = 0.125;
  b.grid_points = 512;
  CHECK(load_scenario(serialize_scenario(b)) == b);

  ScenarioConfig c = a;
  c.receivers = {Receiver{8.0, FadingModel::rayleigh()},
                 Receiver{6.5, FadingModel::diversity(4)},
                 Receiver{5.0, FadingModel::rician(1.5)}};
  CHECK(load_scenario(serialize_scenario(c)) == c);
}

TEST_CASE("config hash keyed to content") {
  const ScenarioConfig a = paper_default_scenario(8.0);
  ScenarioConfig b = a;
  CHECK(scenario_hash(a) == scenario_hash(b));
  b.snr = 8.000001;
  CHECK(scenario_hash(a) != scenario_hash(b));
}

TEST_CASE("power schedule validation") {
  const ScenarioConfig cfg = paper_default_scenario(8.0);
  CHECK_NOTHROW(validate_power_schedule(cfg, PowerSchedule::uniform(1.0, 5)));
  CHECK_THROWS_AS(validate_power_schedule(cfg, PowerSchedule::uniform(1.0, 4)), ValidationError);
  CHECK_THROWS_AS(validate_power_schedule(cfg, PowerSchedule{{1, 1, 1, 1, 1.5}}), ValidationError);
  CHECK_THROWS_AS(validate_power_schedule(cfg, PowerSchedule{{1, 1, 0.0, 1, 1}}), ValidationError);
}
