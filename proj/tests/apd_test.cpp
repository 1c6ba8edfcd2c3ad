#include <gtest/gtest.h>

#include "cascade/apd.hpp"
#include "cascade/engine.hpp"
#include "support/fixtures.hpp"

namespace cascade {
namespace {

using testing::within_rel;

TEST(StepStats, Endpoints) {
  const auto none = step_stats(0.0);
  EXPECT_EQ(none.mean_gain, 1.0);
  EXPECT_EQ(none.variance, 0.0);
  EXPECT_EQ(none.excess_noise.value(), 1.0);

  const auto full = step_stats(1.0);
  EXPECT_EQ(full.mean_gain, 2.0);
  EXPECT_EQ(full.variance, 0.0);
  EXPECT_EQ(full.second_moment, 4.0);
  EXPECT_EQ(full.excess_noise.value(), 1.0);
}

TEST(StepStats, Half) {
  const auto s = step_stats(0.5);
  EXPECT_EQ(s.mean_gain, 1.5);
  EXPECT_EQ(s.variance, 0.25);
  EXPECT_EQ(s.second_moment, 2.5);
  EXPECT_NEAR(s.excess_noise.value(), 10.0 / 9.0, 1e-15);
}

TEST(StepStats, MomentIdentities) {
  for (int i = 0; i <= 1000; ++i) {
    const double p = i / 1000.0;
    const auto s = step_stats(p);
    EXPECT_NEAR(s.second_moment, s.mean_gain * s.mean_gain + s.variance, 1e-15);
    const double ratio_form = (1.0 + 3.0 * p) / ((1.0 + p) * (1.0 + p));
    EXPECT_NEAR(s.excess_noise.value(), ratio_form, 1e-15) << p;
    EXPECT_GE(s.excess_noise.value(), 1.0);
  }
}

TEST(StepStats, RejectsOutOfRange) {
  EXPECT_THROW(step_stats(-0.01), std::domain_error);
  EXPECT_THROW(step_stats(1.01), std::domain_error);
  EXPECT_THROW(step_stats(std::nan("")), std::domain_error);
}

TEST(TotalExcessNoise, Examples) {
  EXPECT_NEAR(total_excess_noise({{0.5, 0.5}}).value(), 1.2345679012345678, 1e-15);
  EXPECT_EQ(total_excess_noise({{0.0, 0.0, 0.0}}).value(), 1.0);
  EXPECT_EQ(total_excess_noise({std::vector<double>(8, 1.0)}).value(), 1.0);
  EXPECT_THROW(total_excess_noise({{}}), std::domain_error);
}

TEST(ApdToCascade, SingleHalfStep) {
  const auto net = apd_to_cascade({{0.5}}, 1.0, 1.0);
  ASSERT_EQ(net.stage_count(), 1u);
  EXPECT_EQ(net.stages[0].power_gain, 2.25);
  EXPECT_NEAR(net.stages[0].internal_noise, 0.25, 1e-15);
  EXPECT_EQ(net.stages[0].external_noise, 0.0);
  EXPECT_EQ(net.stages[0].amplitude_gain(), 1.5);
  EXPECT_NEAR(stage_factor_corrected(net, 1).value(), 10.0 / 9.0, 1e-15);
}

TEST(ApdToCascade, NoIonizationIsNoiseless) {
  const auto net = apd_to_cascade({{0.0, 0.0}}, 1.0, 1.0);
  EXPECT_EQ(stage_factor_corrected(net, 1).value(), 1.0);
  EXPECT_EQ(stage_factor_corrected(net, 2).value(), 1.0);
}

TEST(ApdToCascade, TwoHalfSteps) {
  const auto net = apd_to_cascade({{0.5, 0.5}}, 1.0, 1.0);
  EXPECT_NEAR(total_product_composition(net).value(), 1.2345679012345678, 1e-12);
}

TEST(ApdToCascade, CorrespondenceRandom) {
  testing::NetworkGenerator gen(31);
  for (int i = 0; i < 1000; ++i) {
    const StaircaseApd apd{gen.probabilities(10)};
    const auto net = apd_to_cascade(apd, gen.log_uniform(1e-3, 1e3), gen.log_uniform(1e-3, 1e3));
    for (std::size_t x = 1; x <= apd.steps.size(); ++x) {
      ASSERT_TRUE(within_rel(stage_factor_corrected(net, x).value(),
                             step_stats(apd.steps[x - 1]).excess_noise.value(), 1e-12));
    }
    ASSERT_TRUE(within_rel(total_product_composition(net).value(),
                           total_excess_noise(apd).value(), 1e-12));
    // Classical factors see no external noise at all.
    ASSERT_EQ(total_friis_composition(net).value(), 1.0);
  }
}

TEST(ApdToCascade, RejectsBadInputs) {
  EXPECT_THROW(apd_to_cascade({{1.5}}, 1.0, 1.0), std::domain_error);
  EXPECT_THROW(apd_to_cascade({{0.5}}, 1.0, 0.0), ValidationError);
}

TEST(MonteCarlo, DegenerateProbabilities) {
  const auto none = mc_step_gain(0.0, {1000, 3});
  EXPECT_EQ(none.mean, 1.0);
  EXPECT_EQ(none.variance, 0.0);
  EXPECT_EQ(none.excess_noise, 1.0);
  const auto full = mc_step_gain(1.0, {1000, 3});
  EXPECT_EQ(full.mean, 2.0);
  EXPECT_EQ(full.variance, 0.0);

  const auto zero_chain = mc_total_gain({{0.0}}, {100, 5});
  EXPECT_EQ(zero_chain.mean, 1.0);
  EXPECT_EQ(zero_chain.excess_noise, 1.0);
  const auto doubling = mc_total_gain({{1.0, 1.0}}, {100, 5});
  EXPECT_EQ(doubling.mean, 4.0);
  EXPECT_EQ(doubling.second_moment, 16.0);
  EXPECT_EQ(doubling.excess_noise, 1.0);
}

TEST(MonteCarlo, HalfStepMean) {
  const auto est = mc_step_gain(0.5, {1'000'000, 42});
  EXPECT_EQ(est.trials, 1'000'000u);
  EXPECT_EQ(est.seed, 42u);
  EXPECT_NEAR(est.mean, 1.5, 3 * 0.0005);
  EXPECT_NEAR(est.std_error_mean, 0.0005, 1e-6);
}

TEST(MonteCarlo, HalfStepExcessNoise) {
  // Bootstrap and delta-method standard error of <M^2>/<M>^2 at 10^6 trials
  // is about 7.4e-5, so 0.002 is a very loose bound.
  const auto est = mc_total_gain({{0.5}}, {1'000'000, 7});
  EXPECT_NEAR(est.excess_noise, 1.1111, 0.002);
}

TEST(MonteCarlo, MeanOfBranchingProcess) {
  const StaircaseApd apd{{0.3, 0.6, 0.2, 0.9}};
  const auto est = mc_total_gain(apd, {200'000, 9});
  const double expected = 1.3 * 1.6 * 1.2 * 1.9;
  EXPECT_LE(std::abs(est.mean - expected), 4.0 * est.std_error_mean);
}

TEST(MonteCarlo, Deterministic) {
  const StaircaseApd apd{{0.3, 0.7}};
  const auto a = mc_total_gain(apd, {50'000, 123, 3});
  const auto b = mc_total_gain(apd, {50'000, 123, 3});
  EXPECT_EQ(a.mean, b.mean);
  EXPECT_EQ(a.second_moment, b.second_moment);
  EXPECT_EQ(a.std_error_mean, b.std_error_mean);
  EXPECT_EQ(a.workers, 3u);
  const auto c = mc_total_gain(apd, {50'000, 124, 3});
  EXPECT_NE(a.mean, c.mean);
}

TEST(MonteCarlo, WorkerSplitMatchesSerialBlocks) {
  // Worker w of seed s draws the same stream as a single worker seeded s + w.
  const StaircaseApd apd{{0.4, 0.8}};
  const auto both = mc_total_gain(apd, {20'000, 77, 2});
  const auto first = mc_total_gain(apd, {10'000, 77, 1});
  const auto second = mc_total_gain(apd, {10'000, 78, 1});
  EXPECT_EQ(both.trials, 20'000u);
  // Carrier sums are integers; recover them from the means.
  auto sum = [](double mean, double trials) { return std::llround(mean * trials); };
  EXPECT_EQ(sum(both.mean, 20'000), sum(first.mean, 10'000) + sum(second.mean, 10'000));
  EXPECT_EQ(sum(both.second_moment, 20'000),
            sum(first.second_moment, 10'000) + sum(second.second_moment, 10'000));
}

TEST(MonteCarlo, Errors) {
  EXPECT_THROW(mc_step_gain(0.5, {0, 1}), std::domain_error);
  EXPECT_THROW(mc_step_gain(1.5, {10, 1}), std::domain_error);
  EXPECT_THROW(mc_total_gain({{0.5}}, {10, 1, 0}), std::domain_error);
  EXPECT_THROW(mc_total_gain({std::vector<double>(20, 1.0)}, {10'000, 1}), BudgetExceeded);
}

TEST(MonteCarlo, SingleTrial) {
  const auto est = mc_step_gain(0.5, {1, 1});
  EXPECT_EQ(est.variance, 0.0);
  EXPECT_EQ(est.std_error_mean, 0.0);
}

}  // namespace
}  // namespace cascade
