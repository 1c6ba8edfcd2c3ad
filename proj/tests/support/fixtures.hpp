#pragma once

#include <cmath>
#include <cstddef>
#include <random>
#include <vector>

#include "cascade/network.hpp"

namespace cascade::testing {

// Two identical stages, G = 10, N_ext = 10, no internal noise.
inline CascadeNetwork ref2() {
  return {100.0, 1.0, {{10.0, 0.0, 10.0}, {10.0, 0.0, 10.0}}};
}

// Two identical stages, G = 10, N_int = 5, no external noise.
inline CascadeNetwork refint() {
  return {100.0, 1.0, {{10.0, 5.0, 0.0}, {10.0, 5.0, 0.0}}};
}

inline CascadeNetwork noiseless(std::size_t n, double gain) {
  return {1.0, 1.0, std::vector<StageSpec>(n, StageSpec{gain, 0.0, 0.0})};
}

// Random networks with n <= 12, gains in [0.1, 1e4] and noises in [0, 1e6].
// Gains are log-uniform so lossy stages show up; noises mix exact zeros,
// uniform and log-uniform draws so both large and tiny added noise occur.
class NetworkGenerator {
 public:
  explicit NetworkGenerator(std::uint64_t seed) : rng_(seed) {}

  double log_uniform(double lo, double hi) {
    std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
    return std::exp(u(rng_));
  }

  double noise() {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double pick = u(rng_);
    if (pick < 0.2) return 0.0;
    if (pick < 0.6) return 1e6 * u(rng_);
    return log_uniform(1e-6, 1e6);
  }

  double gain(double lo = 0.1) { return log_uniform(lo, 1e4); }

  CascadeNetwork network(double min_gain = 0.1) {
    std::uniform_int_distribution<std::size_t> stages(1, 12);
    CascadeNetwork net;
    net.input_signal = log_uniform(1e-6, 1e6);
    net.input_noise = log_uniform(1e-6, 1e6);
    const std::size_t n = stages(rng_);
    for (std::size_t i = 0; i < n; ++i) {
      const double g = gain(min_gain);
      const double internal = noise();
      net.stages.push_back({g, internal, noise()});
    }
    return net;
  }

  std::vector<double> probabilities(std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len(1, max_len);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> out(len(rng_));
    for (auto& p : out) p = u(rng_);
    return out;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline bool within_rel(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}

}  // namespace cascade::testing
