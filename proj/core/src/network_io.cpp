#include "cascade/network_io.hpp"

#include <fstream>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

#include "cascade/units.hpp"

namespace cascade {
namespace {

using nlohmann::json;

class Reader {
 public:
  explicit Reader(std::string_view source) : source_(source) {}

  [[noreturn]] void fail(std::string_view path, std::string_view what) const {
    throw InputError(fmt::format("{}: {}: {}", source_, path, what));
  }

  json parse(std::string_view text) const {
    try {
      return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
      throw InputError(fmt::format("{}: {}", source_, e.what()));
    }
  }

  double number(const json& j, std::string_view path) const {
    if (!j.is_number()) fail(path, fmt::format("expected a number, got {}", j.type_name()));
    return j.get<double>();
  }

  // A linear power or {"db": x}.
  double power(const json& j, std::string_view path) const {
    if (j.is_object()) {
      if (j.size() != 1 || !j.contains("db")) fail(path, "expected a number or {\"db\": number}");
      return db_to_linear(number(j.at("db"), fmt::format("{}.db", path)));
    }
    return number(j, path);
  }

  void reject_unknown(const json& object, std::string_view path,
                      std::initializer_list<std::string_view> known) const {
    for (const auto& item : object.items()) {
      bool ok = false;
      for (auto k : known) ok = ok || item.key() == k;
      if (!ok) {
        fail(path.empty() ? std::string_view(item.key()) : path,
             fmt::format("unknown key \"{}\"", item.key()));
      }
    }
  }

  StageSpec stage(const json& j, std::string_view path) const {
    if (!j.is_object()) fail(path, "expected an object");
    reject_unknown(j, path, {"gain", "gain_db", "internal_noise", "external_noise"});
    const bool linear = j.contains("gain");
    const bool db = j.contains("gain_db");
    if (linear == db) fail(path, "exactly one of gain/gain_db");

    StageSpec s;
    s.power_gain = linear ? number(j.at("gain"), fmt::format("{}.gain", path))
                          : db_to_linear(number(j.at("gain_db"), fmt::format("{}.gain_db", path)));
    if (j.contains("internal_noise")) {
      s.internal_noise = power(j.at("internal_noise"), fmt::format("{}.internal_noise", path));
    }
    if (j.contains("external_noise")) {
      s.external_noise = power(j.at("external_noise"), fmt::format("{}.external_noise", path));
    }
    return s;
  }

  CascadeNetwork network(const json& doc) const {
    if (!doc.is_object()) fail("<root>", "expected an object");
    if (doc.contains("network")) return network(doc.at("network"));
    reject_unknown(doc, "", {"input_signal", "input_noise", "stages"});

    CascadeNetwork net;
    if (doc.contains("input_signal")) net.input_signal = power(doc.at("input_signal"), "input_signal");
    if (!doc.contains("input_noise")) fail("input_noise", "required");
    net.input_noise = power(doc.at("input_noise"), "input_noise");

    if (!doc.contains("stages")) fail("stages", "required, n >= 1");
    const auto& stages = doc.at("stages");
    if (!stages.is_array()) fail("stages", "expected an array");
    if (stages.empty()) fail("stages", "required, n >= 1");
    net.stages.reserve(stages.size());
    for (std::size_t i = 0; i < stages.size(); ++i) {
      net.stages.push_back(stage(stages[i], fmt::format("stages[{}]", i)));
    }
    return net;
  }

 private:
  std::string source_;
};

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(fmt::format("{}: cannot open file", path.string()));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

CascadeNetwork parse_network(std::string_view text, std::string_view source) {
  const Reader reader(source);
  auto network = reader.network(reader.parse(text));
  require_valid(network);
  return network;
}

CascadeNetwork load_network(const std::filesystem::path& path) {
  return parse_network(read_text_file(path), path.string());
}

StaircaseApd parse_apd_steps(std::string_view text, std::string_view source) {
  const Reader reader(source);
  const json doc = reader.parse(text);
  const json* steps = &doc;
  if (doc.is_object()) {
    if (!doc.contains("steps")) reader.fail("steps", "required");
    steps = &doc.at("steps");
  }
  if (!steps->is_array() || steps->empty()) reader.fail("steps", "expected a non-empty array");

  StaircaseApd apd;
  for (std::size_t i = 0; i < steps->size(); ++i) {
    apd.steps.push_back(reader.number((*steps)[i], fmt::format("steps[{}]", i)));
  }
  try {
    require_valid(apd);
  } catch (const std::domain_error& e) {
    throw InputError(fmt::format("{}: {}", source, e.what()));
  }
  return apd;
}

StaircaseApd load_apd_steps(const std::filesystem::path& path) {
  return parse_apd_steps(read_text_file(path), path.string());
}

}  // namespace cascade
