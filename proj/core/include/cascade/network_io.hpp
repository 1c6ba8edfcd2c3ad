#pragma once

// JSON network and APD step files. Layout is documented in
// schema/network.schema.json and docs/file-formats.md.

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cascade/apd.hpp"
#include "cascade/network.hpp"

namespace cascade {

/// Unreadable or malformed input. The message names the source and the
/// offending key path (e.g. "stages[1].gain_db").
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses a network document: `input_signal` (optional, default 1) and
/// `input_noise` as a number or {"db": x}; `stages` as an array of
/// {gain | gain_db, internal_noise = 0, external_noise = 0}. A document
/// with a top-level "network" object (an analyze JSON report) is read
/// through that object. dB values are converted before validation.
///
/// Throws InputError for syntax or schema problems and ValidationError for
/// a well-formed network that breaks an invariant.
CascadeNetwork parse_network(std::string_view text, std::string_view source = "<input>");
CascadeNetwork load_network(const std::filesystem::path& path);

/// Steps as a JSON array of probabilities or {"steps": [...]}.
StaircaseApd parse_apd_steps(std::string_view text, std::string_view source = "<input>");
StaircaseApd load_apd_steps(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace cascade
