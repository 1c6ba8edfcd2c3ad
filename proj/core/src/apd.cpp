#include "cascade/apd.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <random>
#include <thread>

#include <fmt/format.h>

namespace cascade {
namespace {

__extension__ using uint128 = unsigned __int128;

void require_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::domain_error(fmt::format("ionization probability must be in [0, 1], got {}", p));
  }
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Raw sums over one block of trials. s1 and s2 are exact.
struct GainSums {
  std::uint64_t s1 = 0;
  std::uint64_t s2 = 0;
  long double s4 = 0.0L;
};

GainSums simulate_block(const std::vector<double>& steps, std::uint64_t trials,
                        std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  GainSums sums;
  for (std::uint64_t t = 0; t < trials; ++t) {
    std::uint64_t carriers = 1;
    for (const double p : steps) {
      if (p >= 1.0) {
        carriers *= 2;
      } else if (p > 0.0) {
        std::uint64_t births = 0;
        for (std::uint64_t c = 0; c < carriers; ++c) {
          births += unit_uniform(rng) < p ? 1 : 0;
        }
        carriers += births;
      }
      if (carriers > kMaxCarrierEvents) {
        throw BudgetExceeded(fmt::format(
            "Monte Carlo budget exceeded: a single trial reached {} carriers (limit {})",
            carriers, kMaxCarrierEvents));
      }
    }
    sums.s1 += carriers;
    if (sums.s1 > kMaxCarrierEvents) {
      throw BudgetExceeded(fmt::format("Monte Carlo budget exceeded: more than {} carrier events",
                                       kMaxCarrierEvents));
    }
    sums.s2 += carriers * carriers;
    const auto m2 = static_cast<long double>(carriers) * static_cast<long double>(carriers);
    sums.s4 += m2 * m2;
  }
  return sums;
}

}  // namespace

void require_valid(const StaircaseApd& apd) {
  if (apd.steps.empty()) throw std::domain_error("staircase APD needs at least one step");
  for (const double p : apd.steps) require_probability(p);
}

StepStats step_stats(double p) {
  require_probability(p);
  const double mean = 1.0 + p;
  const double variance = p * (1.0 - p);
  return {mean, variance, 1.0 + 3.0 * p, NoiseFactor::from_excess(variance / (mean * mean))};
}

NoiseFactor total_excess_noise(const StaircaseApd& apd) {
  require_valid(apd);
  double product = 1.0;
  for (const double p : apd.steps) product *= step_stats(p).excess_noise.value();
  return NoiseFactor::from_value(product);
}

CascadeNetwork apd_to_cascade(const StaircaseApd& apd, double input_signal, double input_noise) {
  require_valid(apd);
  CascadeNetwork network{input_signal, input_noise, {}};
  network.stages.reserve(apd.steps.size());
  double stage_input = input_noise;
  for (const double p : apd.steps) {
    const auto stats = step_stats(p);
    const double gain = stats.mean_gain * stats.mean_gain;
    const double internal = stats.excess_noise.excess() * stage_input * gain;
    network.stages.push_back({gain, internal, 0.0});
    stage_input = stage_input * gain + internal;
  }
  require_valid(network);
  return network;
}

McEstimate mc_step_gain(double p, const McOptions& options) {
  return mc_total_gain(StaircaseApd{{p}}, options);
}

McEstimate mc_total_gain(const StaircaseApd& apd, const McOptions& options) {
  require_valid(apd);
  if (options.trials == 0) throw std::domain_error("Monte Carlo needs trials >= 1");
  if (options.workers == 0) throw std::domain_error("Monte Carlo needs workers >= 1");

  double expected_carriers = static_cast<double>(options.trials);
  for (const double p : apd.steps) expected_carriers *= 1.0 + p;
  if (expected_carriers > static_cast<double>(kMaxCarrierEvents)) {
    throw BudgetExceeded(fmt::format(
        "Monte Carlo budget exceeded: about {:.3g} carrier events expected (limit {})",
        expected_carriers, kMaxCarrierEvents));
  }

  const unsigned workers = options.workers;
  std::vector<GainSums> partial(workers);
  std::vector<std::exception_ptr> errors(workers);
  auto run_worker = [&](unsigned w) {
    const std::uint64_t base = options.trials / workers;
    const std::uint64_t block = base + (w < options.trials % workers ? 1 : 0);
    try {
      partial[w] = simulate_block(apd.steps, block, splitmix64(options.seed + w));
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    run_worker(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run_worker, w);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  GainSums total;
  for (const auto& s : partial) {
    total.s1 += s.s1;
    total.s2 += s.s2;
    total.s4 += s.s4;
  }
  if (total.s1 > kMaxCarrierEvents) {
    throw BudgetExceeded(fmt::format("Monte Carlo budget exceeded: more than {} carrier events",
                                     kMaxCarrierEvents));
  }

  const std::uint64_t n = options.trials;
  const auto nl = static_cast<long double>(n);
  McEstimate est;
  est.trials = n;
  est.seed = options.seed;
  est.workers = workers;
  est.mean = static_cast<double>(static_cast<long double>(total.s1) / nl);
  est.second_moment = static_cast<double>(static_cast<long double>(total.s2) / nl);
  if (n > 1) {
    // n*s2 - s1^2 is exact in 128 bits under the carrier budget.
    const uint128 spread =
        static_cast<uint128>(n) * total.s2 - static_cast<uint128>(total.s1) * total.s1;
    est.variance = static_cast<double>(static_cast<long double>(spread) / (nl * (nl - 1.0L)));
    const long double s2 = static_cast<long double>(total.s2);
    const long double var_m2 = std::max(0.0L, (total.s4 - s2 * s2 / nl) / (nl - 1.0L));
    est.std_error_second_moment = static_cast<double>(std::sqrt(var_m2 / nl));
  }
  est.excess_noise = est.second_moment / (est.mean * est.mean);
  est.std_error_mean = std::sqrt(est.variance / static_cast<double>(n));
  return est;
}

}  // namespace cascade
