#include "cascade/scenario.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <utility>

#include <fmt/format.h>

#include "cascade/engine.hpp"

namespace cascade {
namespace {

constexpr std::array<std::pair<ScenarioKind, std::string_view>, 6> kNames{{
    {ScenarioKind::no_noise, "fig2a"},
    {ScenarioKind::identical_external, "fig2b"},
    {ScenarioKind::external_totals, "fig2c"},
    {ScenarioKind::internal_only, "fig3"},
    {ScenarioKind::internal_stages, "fig3a"},
    {ScenarioKind::internal_totals, "fig3b"},
}};

void require(bool condition, std::string_view scenario, std::string_view what) {
  if (!condition) throw std::invalid_argument(fmt::format("{}: {}", scenario, what));
}

CascadeNetwork prefix(const CascadeNetwork& network, std::size_t m) {
  CascadeNetwork out{network.input_signal, network.input_noise, {}};
  out.stages.assign(network.stages.begin(), network.stages.begin() + static_cast<std::ptrdiff_t>(m));
  return out;
}

SeriesTable stage_series(std::string label, const CascadeNetwork& network) {
  SeriesTable table{std::move(label), {}};
  const auto report = build_report(network);
  for (const auto& s : report.per_stage) {
    table.rows.push_back({s.stage, s.friis.value(), s.corrected.value()});
  }
  return table;
}

SeriesTable total_series(std::string label, const CascadeNetwork& network) {
  SeriesTable table{std::move(label), {}};
  for (std::size_t m = 1; m <= network.stage_count(); ++m) {
    const auto head = prefix(network, m);
    table.rows.push_back(
        {m, total_friis_composition(head).value(), total_product_composition(head).value()});
  }
  return table;
}

void require_external_only(const ScenarioConfig& config, std::string_view scenario) {
  require(config.external_noise > 0.0, scenario, "external noise must be > 0");
  require(config.internal_ratio == 0.0, scenario, "internal ratio must be 0");
}

void require_internal_only(const ScenarioConfig& config, std::string_view scenario) {
  require(config.external_noise == 0.0, scenario, "external noise must be 0");
}

}  // namespace

std::string_view scenario_name(ScenarioKind kind) {
  for (const auto& [k, name] : kNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::optional<ScenarioKind> parse_scenario_name(std::string_view name) {
  for (const auto& [k, n] : kNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

ScenarioConfig default_config(ScenarioKind kind) {
  ScenarioConfig config;
  switch (kind) {
    case ScenarioKind::no_noise:
      break;
    case ScenarioKind::identical_external:
    case ScenarioKind::external_totals:
      config.external_noise = 10.0;
      break;
    case ScenarioKind::internal_only:
    case ScenarioKind::internal_stages:
    case ScenarioKind::internal_totals:
      config.internal_ratio = 1.0;
      break;
  }
  return config;
}

CascadeNetwork scenario_network(const ScenarioConfig& config) {
  constexpr std::string_view where = "scenario";
  require(config.n >= 1 && config.n <= kMaxScenarioStages, where,
          fmt::format("n must be in [1, {}], got {}", kMaxScenarioStages, config.n));
  require(std::isfinite(config.gain) && config.gain >= 1.0, where,
          fmt::format("gain must be >= 1, got {}", config.gain));
  require(std::isfinite(config.external_noise) && config.external_noise >= 0.0, where,
          "external noise must be >= 0");
  require(std::isfinite(config.internal_ratio) && config.internal_ratio >= 0.0, where,
          "internal ratio must be >= 0");

  CascadeNetwork network{config.input_signal, config.input_noise, {}};
  network.stages.reserve(config.n);
  double stage_input = config.input_noise;
  for (std::size_t x = 1; x <= config.n; ++x) {
    const double internal = config.internal_ratio * stage_input;
    network.stages.push_back({config.gain, internal, config.external_noise});
    stage_input = stage_input * config.gain + internal + config.external_noise;
  }
  require_valid(network);
  return network;
}

SeriesTable fig2a_no_noise(const ScenarioConfig& config) {
  require(config.external_noise == 0.0 && config.internal_ratio == 0.0, "fig2a",
          "external noise and internal ratio must both be 0");
  return stage_series("fig2a", scenario_network(config));
}

SeriesTable fig2b_identical_external(const ScenarioConfig& config) {
  require_external_only(config, "fig2b");
  return stage_series("fig2b", scenario_network(config));
}

SeriesTable fig2c_totals(const ScenarioConfig& config) {
  require_external_only(config, "fig2c");
  return total_series("fig2c", scenario_network(config));
}

InternalNoiseSeries fig3_internal_only(const ScenarioConfig& config) {
  require_internal_only(config, "fig3");
  const auto network = scenario_network(config);
  return {stage_series("fig3a", network), total_series("fig3b", network)};
}

std::vector<SeriesTable> run_scenario(ScenarioKind kind, const ScenarioConfig& config) {
  switch (kind) {
    case ScenarioKind::no_noise:
      return {fig2a_no_noise(config)};
    case ScenarioKind::identical_external:
      return {fig2b_identical_external(config)};
    case ScenarioKind::external_totals:
      return {fig2c_totals(config)};
    case ScenarioKind::internal_only: {
      auto series = fig3_internal_only(config);
      return {std::move(series.stage_factors), std::move(series.totals)};
    }
    case ScenarioKind::internal_stages:
      return {fig3_internal_only(config).stage_factors};
    case ScenarioKind::internal_totals:
      return {fig3_internal_only(config).totals};
  }
  throw std::invalid_argument("unknown scenario");
}

}  // namespace cascade
