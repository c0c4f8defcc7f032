#pragma once

// Experiment runner behind the cext command-line tool: one command per
// experiment, each producing a JSON report.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cext/io.hpp"

namespace cext {

inline constexpr const char* kToolVersion = "0.1.0";

struct RunConfig {
  std::string command;
  std::string word;                 // positional word for word-problem, area, lift, max-section
  std::string presentation;         // JSON file; empty selects the built-in relator family
  RelatorForm relator_form = RelatorForm::consistent;
  std::size_t truncation = kDefaultTruncation;
  std::string alpha = "i";
  std::size_t radius = 3;
  std::size_t cap_slack = 8;
  std::optional<std::size_t> cap;
  std::size_t pullback_max = 10;
  std::optional<std::uint64_t> seed;
  bool randomize_reduction = false;
  std::string lambda = "1/7";
  std::size_t max_index = 20;
  std::string group = "cyclic:2";
  std::string coeff = "Z";
  std::string subgroup;
  std::string cocycle;              // JSON file with a finite cochain
  std::string emit_certificate;     // area: certificate output path
  std::string out;                  // report path; empty or "-" for stdout
  bool timing = false;
};

struct Report {
  std::string command;
  Json config;
  Json result;
  std::string version = kToolVersion;
  std::optional<double> duration_seconds;  // emitted only when timing was requested
};

const std::vector<std::string>& command_names();

Json config_to_json(const RunConfig& config);
Report run(const RunConfig& config);

// Sorted keys, two-space indentation, trailing newline.
std::string canonical_text(const Report& r);
void emit_report(const Report& r, const std::string& path);

Json error_json(const std::string& code, const std::string& message);

}  // namespace cext
