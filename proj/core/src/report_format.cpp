#include "cascade/report_format.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include <fmt/format.h>
#include <json.hpp>

#include "cascade/network_io.hpp"

namespace cascade {
namespace {

using ojson = nlohmann::ordered_json;

struct TotalEntry {
  const char* key;      // NoiseTotals field
  const char* formula;  // label used in csv/table output
  NoiseFactor NoiseTotals::*member;
};

constexpr std::array<TotalEntry, 5> kTotals{{
    {"base_friis", "eq2", &NoiseTotals::base_friis},
    {"friis_composition", "eq4", &NoiseTotals::friis_composition},
    {"base_corrected", "eq8", &NoiseTotals::base_corrected},
    {"product_composition", "eq9", &NoiseTotals::product_composition},
    {"snr_ratio", "snr_ratio", &NoiseTotals::snr_ratio},
}};

double figure_db_or_nan(const NoiseFactor& f) {
  return f.value() > 0.0 ? f.figure_db() : std::nan("");
}

std::string num(double v) { return format_number(v); }

ojson out_number(double v) { return round_to_output_precision(v); }

ojson factor_json(const NoiseFactor& f, bool emit_db) {
  ojson j;
  j["value"] = out_number(f.value());
  if (emit_db) j["figure_db"] = out_number(figure_db_or_nan(f));
  return j;
}

ojson network_json(const CascadeNetwork& network) {
  ojson j;
  j["input_signal"] = network.input_signal;
  j["input_noise"] = network.input_noise;
  ojson stages = ojson::array();
  for (const auto& s : network.stages) {
    stages.push_back({{"gain", s.power_gain},
                      {"internal_noise", s.internal_noise},
                      {"external_noise", s.external_noise}});
  }
  j["stages"] = std::move(stages);
  return j;
}

std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

// First column left-aligned, the rest right-aligned, each sized to its widest cell.
std::string aligned(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    widths.resize(std::max(widths.size(), row.size()), 0);
    for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
  }
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out += "  ";
      out += c == 0 ? fmt::format("{:<{}}", row[c], widths[c])
                    : fmt::format("{:>{}}", row[c], widths[c]);
    }
    out += "\n";
  }
  return out;
}

std::string csv_line(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    if (c > 0) out += ",";
    out += cells[c];
  }
  return out + "\n";
}

double parse_value(const ojson& j) {
  if (j.is_null()) return std::nan("");
  if (!j.is_number()) throw InputError("noise report: expected a number");
  return j.get<double>();
}

double expected_mean_gain(const StaircaseApd& apd) {
  double mean = 1.0;
  for (const double p : apd.steps) mean *= 1.0 + p;
  return mean;
}

}  // namespace

std::optional<ReportFormat> parse_report_format(std::string_view name) {
  if (name == "table") return ReportFormat::table;
  if (name == "csv") return ReportFormat::csv;
  if (name == "json") return ReportFormat::json;
  return std::nullopt;
}

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  std::array<char, 32> buf{};
  std::snprintf(buf.data(), buf.size(), "%.12g", value);
  return buf.data();
}

double round_to_output_precision(double value) {
  if (!std::isfinite(value)) return value;
  return std::strtod(format_number(value).c_str(), nullptr);
}

std::string render_noise_report(const CascadeNetwork& network, const NoiseReport& report,
                                ReportFormat format, bool emit_db) {
  if (format == ReportFormat::json) {
    ojson j;
    j["network"] = network_json(network);
    ojson per_stage = ojson::array();
    for (const auto& s : report.per_stage) {
      per_stage.push_back({{"stage", s.stage},
                           {"stage_input_noise", out_number(s.stage_input_noise)},
                           {"friis", factor_json(s.friis, emit_db)},
                           {"corrected", factor_json(s.corrected, emit_db)}});
    }
    j["per_stage"] = std::move(per_stage);
    ojson totals = ojson::object();
    for (const auto& t : kTotals) {
      ojson entry = {{"formula", t.formula}};
      entry.update(factor_json(report.totals.*t.member, emit_db));
      totals[t.key] = std::move(entry);
    }
    j["totals"] = std::move(totals);
    return dump(j);
  }

  std::vector<std::vector<std::string>> stage_rows;
  stage_rows.push_back({"stage", "input_noise", "f_friis", "f_bang"});
  if (emit_db) {
    stage_rows.front().push_back("nf_friis_db");
    stage_rows.front().push_back("nf_bang_db");
  }
  for (const auto& s : report.per_stage) {
    std::vector<std::string> row{std::to_string(s.stage), num(s.stage_input_noise),
                                 num(s.friis.value()), num(s.corrected.value())};
    if (emit_db) {
      row.push_back(num(figure_db_or_nan(s.friis)));
      row.push_back(num(figure_db_or_nan(s.corrected)));
    }
    stage_rows.push_back(std::move(row));
  }

  std::vector<std::vector<std::string>> total_rows;
  total_rows.push_back({"total", "value"});
  if (emit_db) total_rows.front().push_back("nf_db");
  for (const auto& t : kTotals) {
    const auto& f = report.totals.*t.member;
    std::vector<std::string> row{t.formula, num(f.value())};
    if (emit_db) row.push_back(num(figure_db_or_nan(f)));
    total_rows.push_back(std::move(row));
  }

  if (format == ReportFormat::csv) {
    std::string out;
    for (const auto& row : stage_rows) out += csv_line(row);
    out += "\n";
    for (const auto& row : total_rows) out += csv_line(row);
    return out;
  }
  return aligned(stage_rows) + "\n" + aligned(total_rows);
}

NoiseReport parse_noise_report_json(std::string_view text) {
  ojson j;
  try {
    j = ojson::parse(text.begin(), text.end());
  } catch (const ojson::exception& e) {
    throw InputError(fmt::format("noise report: {}", e.what()));
  }
  try {
    NoiseReport report;
    for (const auto& s : j.at("per_stage")) {
      report.per_stage.push_back({s.at("stage").get<std::size_t>(),
                                  parse_value(s.at("stage_input_noise")),
                                  NoiseFactor::from_value(parse_value(s.at("friis").at("value"))),
                                  NoiseFactor::from_value(parse_value(s.at("corrected").at("value")))});
    }
    const auto& totals = j.at("totals");
    for (const auto& t : kTotals) {
      report.totals.*t.member = NoiseFactor::from_value(parse_value(totals.at(t.key).at("value")));
    }
    return report;
  } catch (const ojson::exception& e) {
    throw InputError(fmt::format("noise report: {}", e.what()));
  }
}

std::string render_series(const std::vector<SeriesTable>& tables, ReportFormat format) {
  if (format == ReportFormat::json) {
    ojson series = ojson::array();
    for (const auto& t : tables) {
      ojson rows = ojson::array();
      for (const auto& r : t.rows) {
        rows.push_back({{"stage", r.stage},
                        {"friis", out_number(r.friis)},
                        {"corrected", out_number(r.corrected)}});
      }
      series.push_back({{"label", t.label}, {"rows", std::move(rows)}});
    }
    return dump(ojson{{"series", std::move(series)}});
  }

  std::string out;
  for (std::size_t i = 0; i < tables.size(); ++i) {
    if (i > 0) out += "\n";
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"stage", "friis", "corrected"});
    for (const auto& r : tables[i].rows) {
      rows.push_back({std::to_string(r.stage), num(r.friis), num(r.corrected)});
    }
    if (format == ReportFormat::csv) {
      for (const auto& row : rows) out += csv_line(row);
    } else {
      out += tables[i].label + "\n" + aligned(rows);
    }
  }
  return out;
}

std::string render_apd(const StaircaseApd& apd, const std::optional<McEstimate>& monte_carlo,
                       ReportFormat format) {
  const auto total = total_excess_noise(apd);

  if (format == ReportFormat::json) {
    ojson steps = ojson::array();
    for (std::size_t i = 0; i < apd.steps.size(); ++i) {
      const auto s = step_stats(apd.steps[i]);
      steps.push_back({{"step", i + 1},
                       {"p", apd.steps[i]},
                       {"mean_gain", out_number(s.mean_gain)},
                       {"variance", out_number(s.variance)},
                       {"second_moment", out_number(s.second_moment)},
                       {"excess_noise", out_number(s.excess_noise.value())}});
    }
    ojson j;
    j["steps"] = std::move(steps);
    j["total_excess_noise"] = out_number(total.value());
    if (monte_carlo) {
      const auto& mc = *monte_carlo;
      j["diagnostic"] = {
          {"expected_mean_gain", out_number(expected_mean_gain(apd))},
          {"analytic_total_excess_noise", out_number(total.value())},
          {"monte_carlo",
           {{"trials", mc.trials},
            {"seed", mc.seed},
            {"workers", mc.workers},
            {"mean", out_number(mc.mean)},
            {"second_moment", out_number(mc.second_moment)},
            {"variance", out_number(mc.variance)},
            {"excess_noise", out_number(mc.excess_noise)},
            {"std_error_mean", out_number(mc.std_error_mean)},
            {"std_error_second_moment", out_number(mc.std_error_second_moment)}}}};
    }
    return dump(j);
  }

  std::vector<std::vector<std::string>> step_rows;
  step_rows.push_back({"step", "p", "mean_gain", "variance", "excess_noise"});
  for (std::size_t i = 0; i < apd.steps.size(); ++i) {
    const auto s = step_stats(apd.steps[i]);
    step_rows.push_back({std::to_string(i + 1), num(apd.steps[i]), num(s.mean_gain),
                         num(s.variance), num(s.excess_noise.value())});
  }
  std::vector<std::vector<std::string>> total_rows{{"quantity", "value"},
                                                   {"total_excess_noise", num(total.value())}};
  std::vector<std::vector<std::string>> mc_rows;
  if (monte_carlo) {
    const auto& mc = *monte_carlo;
    mc_rows = {{"diagnostic", "value"},
               {"expected_mean_gain", num(expected_mean_gain(apd))},
               {"analytic_total_excess_noise", num(total.value())},
               {"mc_trials", std::to_string(mc.trials)},
               {"mc_seed", std::to_string(mc.seed)},
               {"mc_workers", std::to_string(mc.workers)},
               {"mc_mean", num(mc.mean)},
               {"mc_second_moment", num(mc.second_moment)},
               {"mc_variance", num(mc.variance)},
               {"mc_excess_noise", num(mc.excess_noise)},
               {"mc_std_error_mean", num(mc.std_error_mean)},
               {"mc_std_error_second_moment", num(mc.std_error_second_moment)}};
  }

  std::string out;
  if (format == ReportFormat::csv) {
    for (const auto& row : step_rows) out += csv_line(row);
    out += "\n";
    for (const auto& row : total_rows) out += csv_line(row);
    if (!mc_rows.empty()) {
      out += "\n";
      for (const auto& row : mc_rows) out += csv_line(row);
    }
    return out;
  }
  out = aligned(step_rows) + "\n" + aligned(total_rows);
  if (!mc_rows.empty()) out += "\n" + aligned(mc_rows);
  return out;
}

}  // namespace cascade
