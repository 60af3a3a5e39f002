#include "entchain/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace entchain {

std::string formatDouble(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.15g", value);
  return buffer;
}

double roundTripDouble(double value) { return std::strtod(formatDouble(value).c_str(), nullptr); }

nlohmann::ordered_json ReportEnvelope::toJson() const {
  nlohmann::ordered_json doc;
  doc["command"] = command;
  doc["tool_version"] = kToolVersion;
  doc["inputs"] = inputs;
  doc["results"] = results;
  return doc;
}

std::string ReportEnvelope::render(OutputFormat format) const {
  switch (format) {
    case OutputFormat::Json:
      return toJson().dump(2) + "\n";
    case OutputFormat::Csv: {
      if (!results.contains("rows"))
        throw ValidationError("csv output is only available for the sweep command");
      std::ostringstream out;
      out << "n,p,concurrence,entanglement_of_formation\n";
      for (const auto& row : results["rows"]) {
        out << row["n"].get<int>() << ',' << row["p"].get<int>() << ','
            << formatDouble(row["concurrence"].get<double>()) << ','
            << formatDouble(row["entanglement_of_formation"].get<double>()) << '\n';
      }
      return out.str();
    }
    case OutputFormat::Text:
    default: {
      std::ostringstream out;
      for (const std::string& line : textLines) out << line << '\n';
      return out.str();
    }
  }
}

int exitCodeFor(const std::exception& error) {
  if (dynamic_cast<const ConvergenceError*>(&error) != nullptr) return 3;
  return 2;
}

}  // namespace entchain
