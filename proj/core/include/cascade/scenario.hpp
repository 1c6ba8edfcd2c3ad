#pragma once

// Comparison series for identical-stage cascades: noiseless stages, identical
// external noise, and internal noise proportional to each stage's input
// noise. Every value comes from the engine run on an explicit network.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cascade/network.hpp"

namespace cascade {

enum class ScenarioKind {
  no_noise,            // fig2a: no added noise anywhere
  identical_external,  // fig2b: same N_ext after every stage
  external_totals,     // fig2c: cumulative totals for fig2b's network
  internal_only,       // fig3: fig3a followed by fig3b
  internal_stages,     // fig3a: N_int(x) = delta * N_i(x), stage factors
  internal_totals,     // fig3b: cumulative totals for fig3a's network
};

std::string_view scenario_name(ScenarioKind kind);
std::optional<ScenarioKind> parse_scenario_name(std::string_view name);

/// Cumulative-total scenarios rebuild every prefix, so series stay short.
inline constexpr std::size_t kMaxScenarioStages = 1'000;

struct ScenarioConfig {
  std::size_t n = 6;
  double gain = 10.0;           // common G, >= 1
  double external_noise = 0.0;  // common N_ext
  double internal_ratio = 0.0;  // delta: N_int(x) / N_i(x)
  double input_noise = 1.0;
  double input_signal = 100.0;
};

/// Defaults for a scenario: n = 6, G = 10, N_i = 1, S_i = 100, with
/// N_ext = 10 for the external-noise scenarios and delta = 1 for the
/// internal-noise ones.
ScenarioConfig default_config(ScenarioKind kind);

/// Identical stages with N_int(x) = delta * N_i(x). Throws
/// std::invalid_argument when the config breaks its invariants.
CascadeNetwork scenario_network(const ScenarioConfig& config);

struct SeriesRow {
  std::size_t stage = 0;  // stage index, or prefix length for totals
  double friis = 1.0;
  double corrected = 1.0;
};

struct SeriesTable {
  std::string label;
  std::vector<SeriesRow> rows;
};

SeriesTable fig2a_no_noise(const ScenarioConfig& config);
SeriesTable fig2b_identical_external(const ScenarioConfig& config);
SeriesTable fig2c_totals(const ScenarioConfig& config);

struct InternalNoiseSeries {
  SeriesTable stage_factors;  // fig3a
  SeriesTable totals;         // fig3b
};

InternalNoiseSeries fig3_internal_only(const ScenarioConfig& config);

/// Tables for one scenario kind; only internal_only yields two.
std::vector<SeriesTable> run_scenario(ScenarioKind kind, const ScenarioConfig& config);

}  // namespace cascade
