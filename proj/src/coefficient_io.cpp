#include "entchain/coefficient_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace entchain {

namespace {

using nlohmann::json;

int requireInt(const json& object, const char* key) {
  if (!object.contains(key) || !object[key].is_number_integer())
    throw ValidationError(std::string("coefficient file needs an integer field \"") + key +
                          "\"");
  return object[key].get<int>();
}

double requireNumber(const json& entry, const char* key, size_t position) {
  if (!entry.contains(key) || !entry[key].is_number())
    throw ValidationError("coefficient entry #" + std::to_string(position) +
                          " needs a numeric field \"" + std::string(key) + "\"");
  return entry[key].get<double>();
}

}  // namespace

BlockState blockStateFromJsonText(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    // nlohmann reports the byte offset; translate it to line/column.
    size_t line = 1, column = 1;
    for (size_t i = 0; i < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ValidationError("coefficient file is not valid JSON (line " + std::to_string(line) +
                          ", column " + std::to_string(column) + "): " + e.what());
  }
  if (!doc.is_object()) throw ValidationError("coefficient file must be a JSON object");

  const int n = requireInt(doc, "n");
  const int p = requireInt(doc, "p");
  if (!doc.contains("coefficients") || !doc["coefficients"].is_array())
    throw ValidationError("coefficient file needs an array field \"coefficients\"");

  CoefficientMap coefficients;
  size_t position = 0;
  for (const json& entry : doc["coefficients"]) {
    ++position;
    if (!entry.is_object() || !entry.contains("sites") || !entry["sites"].is_array())
      throw ValidationError("coefficient entry #" + std::to_string(position) +
                            " needs an array field \"sites\"");
    SiteTuple tuple;
    for (const json& site : entry["sites"]) {
      if (!site.is_number_integer())
        throw ValidationError("coefficient entry #" + std::to_string(position) +
                              " has a non-integer site index");
      tuple.push_back(site.get<int>());
    }
    const Complex amplitude(requireNumber(entry, "re", position),
                            requireNumber(entry, "im", position));
    if (!coefficients.emplace(std::move(tuple), amplitude).second)
      throw ValidationError("coefficient entry #" + std::to_string(position) +
                            " repeats an earlier site tuple");
  }
  return BlockState::build(n, p, coefficients, ConstraintMode::Strict);
}

BlockState blockStateFromJsonFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open coefficient file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return blockStateFromJsonText(buffer.str());
}

std::string blockStateToJsonText(const BlockState& state) {
  json entries = json::array();
  for (const auto& [tuple, amplitude] : state.coefficients()) {
    entries.push_back(
        {{"sites", tuple}, {"re", amplitude.real()}, {"im", amplitude.imag()}});
  }
  json doc = {{"n", state.n()}, {"p", state.p()}, {"coefficients", std::move(entries)}};
  return doc.dump(2) + "\n";
}

}  // namespace entchain
