#pragma once

#include <string>

#include <json.hpp>

#include "entchain/errors.hpp"

namespace entchain {

inline constexpr const char* kToolVersion = "1.0.0";

enum class OutputFormat { Text, Json, Csv };

/// Machine-readable wrapper around one CLI command run.  All floating
/// numbers are rounded to 15 significant digits before serialization, so
/// identical invocations produce byte-identical output and values
/// round-trip losslessly at that precision.
struct ReportEnvelope {
  std::string command;
  nlohmann::ordered_json inputs;
  nlohmann::ordered_json results;
  /// Lines of the human-readable rendering, in print order.
  std::vector<std::string> textLines;
  /// False when a requested numeric cross-check exceeded its tolerance;
  /// the report is still printed but the CLI exits with the
  /// non-convergence code.
  bool checksPassed = true;

  nlohmann::ordered_json toJson() const;
  std::string render(OutputFormat format) const;
};

/// Fixed 15-significant-digit rendering used everywhere numbers are
/// printed.
std::string formatDouble(double value);

/// The same rounding applied to a value headed into a JSON payload.
double roundTripDouble(double value);

/// Exit code the CLI uses for an error: 2 for validation problems, 3 for
/// numerical non-convergence.
int exitCodeFor(const std::exception& error);

}  // namespace entchain
