#include "cascade/network.hpp"

#include <fmt/format.h>

namespace cascade {
namespace {

std::string join(const std::vector<Violation>& violations) {
  std::string out = "invalid cascade network:";
  for (const auto& v : violations) {
    out += "\n  ";
    out += to_string(v);
  }
  return out;
}

}  // namespace

std::string to_string(const Violation& violation) {
  if (violation.stage) {
    return fmt::format("stage {}: {}", *violation.stage, violation.message);
  }
  return violation.message;
}

std::vector<Violation> validate(const CascadeNetwork& network) {
  std::vector<Violation> out;
  auto network_level = [&](std::string msg) { out.push_back({std::nullopt, std::move(msg)}); };

  if (!std::isfinite(network.input_signal) || !(network.input_signal > 0.0)) {
    network_level(fmt::format("input_signal must be > 0 and finite, got {}", network.input_signal));
  }
  if (!std::isfinite(network.input_noise) || !(network.input_noise > 0.0)) {
    network_level(fmt::format("input_noise must be > 0 and finite, got {}", network.input_noise));
  }
  if (network.stages.empty()) {
    network_level("stages: n >= 1 required");
  }
  if (network.stages.size() > kMaxStages) {
    network_level(fmt::format("stages: at most {} stages supported, got {}", kMaxStages,
                              network.stages.size()));
  }

  for (std::size_t i = 0; i < network.stages.size(); ++i) {
    const auto& s = network.stages[i];
    const std::size_t x = i + 1;
    if (!std::isfinite(s.power_gain) || !(s.power_gain > 0.0)) {
      out.push_back({x, fmt::format("power_gain must be > 0 and finite, got {}", s.power_gain)});
    }
    if (!std::isfinite(s.internal_noise) || s.internal_noise < 0.0) {
      out.push_back({x, fmt::format("internal_noise must be >= 0 and finite, got {}", s.internal_noise)});
    }
    if (!std::isfinite(s.external_noise) || s.external_noise < 0.0) {
      out.push_back({x, fmt::format("external_noise must be >= 0 and finite, got {}", s.external_noise)});
    }
  }
  return out;
}

ValidationError::ValidationError(std::vector<Violation> violations)
    : std::invalid_argument(join(violations)), violations_(std::move(violations)) {}

void require_valid(const CascadeNetwork& network) {
  auto violations = validate(network);
  if (!violations.empty()) throw ValidationError(std::move(violations));
}

}  // namespace cascade
