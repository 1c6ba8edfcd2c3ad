#pragma once

// Staircase avalanche photodiode: per-step excess-noise statistics, the
// equivalent cascade network, and a Monte Carlo branching-process probe.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cascade/network.hpp"
#include "cascade/units.hpp"

namespace cascade {

/// Per-step ionization probabilities p_x, each in [0, 1].
struct StaircaseApd {
  std::vector<double> steps;
};

/// Throws std::domain_error on an empty step list or p outside [0, 1].
void require_valid(const StaircaseApd& apd);

/// Moments of the single-step carrier gain M_x = 1 + Bernoulli(p_x).
struct StepStats {
  double mean_gain = 1.0;      // 1 + p
  double variance = 0.0;       // p(1 - p)
  double second_moment = 1.0;  // 1 + 3p
  NoiseFactor excess_noise;    // <M^2> / <M>^2
};

StepStats step_stats(double p);

/// Product of the per-step excess-noise factors.
NoiseFactor total_excess_noise(const StaircaseApd& apd);

/// Cascade whose corrected stage factors equal the APD's per-step excess
/// noise: G_x = (1 + p_x)^2, no external noise, and internal noise sized so
/// that N_int(x) / (N_i(x) G_x) = p_x(1 - p_x) / (1 + p_x)^2.
CascadeNetwork apd_to_cascade(const StaircaseApd& apd, double input_signal, double input_noise);

/// Upper bound on simulated carriers (trials x final carriers).
inline constexpr std::uint64_t kMaxCarrierEvents = 1'000'000'000;

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct McOptions {
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
  unsigned workers = 1;
};

/// Sample statistics of the final carrier count M. Reproducible bit-for-bit
/// for a fixed (seed, trials, workers).
struct McEstimate {
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  double mean = 0.0;
  double second_moment = 0.0;
  double variance = 0.0;  // unbiased sample variance of M
  double excess_noise = 0.0;
  double std_error_mean = 0.0;           // sqrt(variance / trials)
  double std_error_second_moment = 0.0;  // sqrt(var(M^2) / trials)
};

/// Single-step gain M = 1 + Bernoulli(p).
McEstimate mc_step_gain(double p, const McOptions& options);

/// Branching process: one initial carrier; at step x every carrier
/// independently duplicates with probability p_x.
///
/// Each worker w draws from std::mt19937_64 seeded with splitmix64(seed + w);
/// a Bernoulli(p) draw is u < p with u the top 53 bits of one output scaled
/// to [0, 1). Trials are split into contiguous blocks, earlier workers taking
/// the remainder. Throws BudgetExceeded when the expected or realized
/// carrier count exceeds kMaxCarrierEvents.
McEstimate mc_total_gain(const StaircaseApd& apd, const McOptions& options);

}  // namespace cascade
