#include "cascade/engine.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

namespace cascade {
namespace {

void require_stage(const CascadeNetwork& network, std::size_t x) {
  if (x < 1 || x > network.stage_count()) {
    throw std::out_of_range(
        fmt::format("stage index {} outside [1, {}]", x, network.stage_count()));
  }
}

// The *_unchecked helpers assume a validated network and an in-range index.

double input_noise_unchecked(const CascadeNetwork& network, std::size_t x) {
  // Walk back from stage x-1 so each earlier stage's added noise picks up the
  // gain of the stages after it.
  double downstream_gain = 1.0;
  double added = 0.0;
  for (std::size_t k = x - 1; k >= 1; --k) {
    const auto& s = network.stage(k);
    added += s.added_noise() * downstream_gain;
    downstream_gain *= s.power_gain;
  }
  return network.input_noise * downstream_gain + added;
}

NoiseFactor friis_unchecked(const CascadeNetwork& network, std::size_t x) {
  const auto& s = network.stage(x);
  return NoiseFactor::from_excess(s.external_noise / (network.input_noise * s.power_gain));
}

NoiseFactor corrected_from_input(const StageSpec& s, double stage_input) {
  return NoiseFactor::from_excess(s.added_noise() / (stage_input * s.power_gain));
}

std::vector<NoiseFactor> corrected_factors(const CascadeNetwork& network) {
  std::vector<NoiseFactor> out;
  out.reserve(network.stage_count());
  for (std::size_t x = 1; x <= network.stage_count(); ++x) {
    out.push_back(corrected_from_input(network.stage(x), input_noise_unchecked(network, x)));
  }
  return out;
}

PropagationTrace propagate_unchecked(const CascadeNetwork& network) {
  PropagationTrace trace;
  trace.nodes.reserve(network.stage_count() + 1);
  NodeState node{network.input_signal, network.input_noise};
  trace.nodes.push_back(node);
  for (const auto& s : network.stages) {
    node.signal *= s.power_gain;
    node.noise = node.noise * s.power_gain + s.internal_noise + s.external_noise;
    trace.nodes.push_back(node);
  }
  return trace;
}

template <typename AddedNoise>
NoiseFactor base_sum(const CascadeNetwork& network, AddedNoise added_noise) {
  double gain_product = 1.0;
  double excess = 0.0;
  for (const auto& s : network.stages) {
    gain_product *= s.power_gain;
    excess += added_noise(s) / (network.input_noise * gain_product);
  }
  return NoiseFactor::from_excess(excess);
}

NoiseFactor product_of(const std::vector<NoiseFactor>& factors) {
  double product = 1.0;
  for (const auto& f : factors) product *= f.value();
  return NoiseFactor::from_value(product);
}

}  // namespace

bool nearly_equal(double a, double b, double rel_tol) {
  if (a == b) return true;
  if (std::isnan(a) || std::isnan(b)) return false;
  return std::abs(a - b) <= rel_tol * std::max(std::abs(a), std::abs(b));
}

PropagationTrace propagate(const CascadeNetwork& network) {
  require_valid(network);
  return propagate_unchecked(network);
}

double stage_input_noise(const CascadeNetwork& network, std::size_t x) {
  require_valid(network);
  require_stage(network, x);
  return input_noise_unchecked(network, x);
}

NoiseFactor stage_factor_friis(const CascadeNetwork& network, std::size_t x) {
  require_valid(network);
  require_stage(network, x);
  return friis_unchecked(network, x);
}

NoiseFactor stage_factor_corrected(const CascadeNetwork& network, std::size_t x) {
  require_valid(network);
  require_stage(network, x);
  return corrected_from_input(network.stage(x), input_noise_unchecked(network, x));
}

NoiseFactor stage_factor_corrected_recursive(const CascadeNetwork& network, std::size_t x) {
  require_valid(network);
  require_stage(network, x);
  double gain_product = 1.0;
  double factor_product = 1.0;
  NoiseFactor factor;
  for (std::size_t k = 1; k <= x; ++k) {
    const auto& s = network.stage(k);
    gain_product *= s.power_gain;
    factor = NoiseFactor::from_excess(s.added_noise() /
                                      (network.input_noise * gain_product * factor_product));
    factor_product *= factor.value();
  }
  return factor;
}

NoiseFactor total_base_friis(const CascadeNetwork& network) {
  require_valid(network);
  return base_sum(network, [](const StageSpec& s) { return s.external_noise; });
}

NoiseFactor total_base_corrected(const CascadeNetwork& network) {
  require_valid(network);
  return base_sum(network, [](const StageSpec& s) { return s.added_noise(); });
}

NoiseFactor total_friis_composition(const CascadeNetwork& network) {
  require_valid(network);
  double excess = friis_unchecked(network, 1).excess();
  double preceding_gain = 1.0;
  for (std::size_t x = 2; x <= network.stage_count(); ++x) {
    preceding_gain *= network.stage(x - 1).power_gain;
    excess += friis_unchecked(network, x).excess() / preceding_gain;
  }
  return NoiseFactor::from_excess(excess);
}

NoiseFactor total_product_composition(const CascadeNetwork& network) {
  require_valid(network);
  return product_of(corrected_factors(network));
}

NoiseFactor snr_ratio_total(const CascadeNetwork& network) {
  require_valid(network);
  const auto trace = propagate_unchecked(network);
  return NoiseFactor::from_value(trace.nodes.front().snr() / trace.nodes.back().snr());
}

NoiseReport build_report(const CascadeNetwork& network) {
  require_valid(network);
  NoiseReport report;
  report.per_stage.reserve(network.stage_count());
  std::vector<NoiseFactor> corrected;
  corrected.reserve(network.stage_count());
  for (std::size_t x = 1; x <= network.stage_count(); ++x) {
    const double input = input_noise_unchecked(network, x);
    const auto f = corrected_from_input(network.stage(x), input);
    corrected.push_back(f);
    report.per_stage.push_back({x, input, friis_unchecked(network, x), f});
  }
  report.totals.base_friis = total_base_friis(network);
  report.totals.base_corrected = total_base_corrected(network);
  report.totals.friis_composition = total_friis_composition(network);
  report.totals.product_composition = product_of(corrected);
  report.totals.snr_ratio = snr_ratio_total(network);
  return report;
}

std::vector<InvariantBreach> check_report(const NoiseReport& report, double rel_tol) {
  std::vector<InvariantBreach> out;
  auto expect = [&](const char* identity, const NoiseFactor& lhs, const NoiseFactor& rhs) {
    if (!nearly_equal(lhs.value(), rhs.value(), rel_tol)) {
      out.push_back({identity, lhs.value(), rhs.value()});
    }
  };
  const auto& t = report.totals;
  expect("product_composition == base_corrected", t.product_composition, t.base_corrected);
  expect("product_composition == snr_ratio", t.product_composition, t.snr_ratio);
  expect("base_corrected == snr_ratio", t.base_corrected, t.snr_ratio);
  expect("friis_composition == base_friis", t.friis_composition, t.base_friis);
  return out;
}

}  // namespace cascade
