#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cascade {

/// Longest chain the engine accepts. Gain products over longer chains leave
/// double range for any realistic gain.
inline constexpr std::size_t kMaxStages = 10'000;

/// One stage of a cascade. All powers are linear and share the network's unit.
struct StageSpec {
  double power_gain = 1.0;      // G_x, output signal over input signal
  double internal_noise = 0.0;  // generated inside the stage
  double external_noise = 0.0;  // added at the stage output

  /// Amplitude (carrier) gain M_x with G_x = M_x^2.
  double amplitude_gain() const { return std::sqrt(power_gain); }
  double added_noise() const { return internal_noise + external_noise; }
};

/// Source powers at the cascade input followed by the ordered stages.
struct CascadeNetwork {
  double input_signal = 1.0;
  double input_noise = 1.0;
  std::vector<StageSpec> stages;

  std::size_t stage_count() const { return stages.size(); }
  const StageSpec& stage(std::size_t x) const { return stages.at(x - 1); }  // 1-based
};

struct Violation {
  std::optional<std::size_t> stage;  // 1-based; empty for network-level problems
  std::string message;
};

std::string to_string(const Violation& violation);

/// Every invariant violation in `network`; empty when the network is usable.
std::vector<Violation> validate(const CascadeNetwork& network);

class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(std::vector<Violation> violations);

  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

/// Throws ValidationError listing all violations, if any.
void require_valid(const CascadeNetwork& network);

}  // namespace cascade
