#include <gtest/gtest.h>

#include <string>

#include "cascade/network_io.hpp"

namespace cascade {
namespace {

const std::string kData = CASCADE_TEST_DATA_DIR;

std::string message_of(auto&& fn) {
  try {
    fn();
  } catch (const std::exception& e) {
    return e.what();
  }
  return {};
}

TEST(LoadNetwork, Ref2WithDbGain) {
  const auto net = load_network(kData + "/ref2.json");
  EXPECT_EQ(net.input_signal, 100.0);
  EXPECT_EQ(net.input_noise, 1.0);
  ASSERT_EQ(net.stage_count(), 2u);
  EXPECT_DOUBLE_EQ(net.stages[0].power_gain, 10.0);
  EXPECT_EQ(net.stages[1].power_gain, 10.0);
  EXPECT_EQ(net.stages[0].external_noise, 10.0);
  EXPECT_EQ(net.stages[0].internal_noise, 0.0);
}

TEST(ParseNetwork, DbPowersAndDefaults) {
  const auto net = parse_network(R"({"input_noise": {"db": 20}, "stages": [{"gain": 2}]})");
  EXPECT_EQ(net.input_signal, 1.0);
  EXPECT_DOUBLE_EQ(net.input_noise, 100.0);
  EXPECT_EQ(net.stages[0].external_noise, 0.0);
}

TEST(ParseNetwork, MissingStages) {
  const auto msg = message_of([] { load_network(kData + "/missing_stages.json"); });
  EXPECT_NE(msg.find("stages: required, n >= 1"), std::string::npos) << msg;
  EXPECT_THROW(parse_network(R"({"input_noise": 1, "stages": []})"), InputError);
}

TEST(ParseNetwork, BothGainForms) {
  EXPECT_THROW(load_network(kData + "/both_gains.json"), InputError);
  const auto msg = message_of([] { load_network(kData + "/both_gains.json"); });
  EXPECT_NE(msg.find("stages[0]: exactly one of gain/gain_db"), std::string::npos) << msg;
  EXPECT_NE(message_of([] { parse_network(R"({"input_noise": 1, "stages": [{}]})"); })
                .find("exactly one of gain/gain_db"),
            std::string::npos);
}

TEST(ParseNetwork, SyntaxErrorHasLocation) {
  const auto msg = message_of([] { load_network(kData + "/malformed.json"); });
  EXPECT_NE(msg.find("malformed.json"), std::string::npos) << msg;
  EXPECT_NE(msg.find("line 4"), std::string::npos) << msg;
}

TEST(ParseNetwork, KeyContext) {
  const auto msg = message_of(
      [] { parse_network(R"({"input_noise": 1, "stages": [{"gain": 1}, {"gain": "x"}]})", "f.json"); });
  EXPECT_NE(msg.find("f.json: stages[1].gain: expected a number"), std::string::npos) << msg;
  EXPECT_NE(message_of([] { parse_network(R"({"input_noise": 1, "stages": [{"gian": 1}]})"); })
                .find("unknown key \"gian\""),
            std::string::npos);
  EXPECT_NE(message_of([] { parse_network(R"({"stages": [{"gain": 1}]})"); }).find("input_noise: required"),
            std::string::npos);
}

TEST(ParseNetwork, ValidationViolationsCarryStageIndex) {
  try {
    load_network(kData + "/negative_noise.json");
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    ASSERT_EQ(e.violations().size(), 1u);
    EXPECT_EQ(e.violations()[0].stage, 2u);
  }
}

TEST(ParseNetwork, ReadsEmbeddedNetwork) {
  const auto net = parse_network(
      R"({"network": {"input_noise": 2, "stages": [{"gain": 3}]}, "per_stage": [], "totals": {}})");
  EXPECT_EQ(net.input_noise, 2.0);
  EXPECT_EQ(net.stages[0].power_gain, 3.0);
}

TEST(LoadNetwork, MissingFile) {
  EXPECT_THROW(load_network(kData + "/does_not_exist.json"), InputError);
}

TEST(ApdSteps, Forms) {
  EXPECT_EQ(load_apd_steps(kData + "/apd_steps.json").steps, (std::vector<double>{0.5, 0.5}));
  EXPECT_EQ(parse_apd_steps("[0.1, 0.2, 1]").steps, (std::vector<double>{0.1, 0.2, 1.0}));
  EXPECT_THROW(parse_apd_steps("[]"), InputError);
  EXPECT_THROW(parse_apd_steps("[1.5]"), InputError);
  EXPECT_THROW(parse_apd_steps(R"({"p": [0.5]})"), InputError);
}

}  // namespace
}  // namespace cascade
