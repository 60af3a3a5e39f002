#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "entchain/coefficient_io.hpp"
#include "entchain/report.hpp"
#include "test_support.hpp"

using namespace entchain;

TEST_CASE("coefficient JSON round trip") {
  auto rng = test::makeRng(31);
  for (auto [n, p] : {std::pair{5, 2}, {8, 3}, {4, 0}}) {
    BlockState original = test::randomStrictBlockState(rng, n, p);
    BlockState reparsed = blockStateFromJsonText(blockStateToJsonText(original));
    CHECK(reparsed.n() == original.n());
    CHECK(reparsed.p() == original.p());
    REQUIRE(reparsed.coefficients().size() == original.coefficients().size());
    for (const auto& [tuple, a] : original.coefficients())
      CHECK(std::abs(reparsed.coefficients().at(tuple) - a) <= 1e-14);
  }
}

TEST_CASE("coefficient file parsing accepts the documented schema") {
  const char* text = R"({
    "n": 5,
    "p": 2,
    "coefficients": [
      {"sites": [1, 3], "re": 0.5, "im": 0.0},
      {"sites": [1, 4], "re": 0.7071067811865476, "im": 0.0},
      {"sites": [2, 4], "re": 0.5, "im": 0.0}
    ]
  })";
  BlockState state = blockStateFromJsonText(text);
  CHECK(state.n() == 5);
  CHECK(state.coefficients().size() == 3);
}

TEST_CASE("coefficient file parse errors") {
  SUBCASE("malformed JSON reports a position") {
    try {
      blockStateFromJsonText("{\n  \"n\": 5,\n  nonsense\n}");
      FAIL("expected a ValidationError");
    } catch (const ValidationError& e) {
      CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
  }
  SUBCASE("missing keys") {
    CHECK_THROWS_AS(blockStateFromJsonText(R"({"n": 5})"), ValidationError);
    CHECK_THROWS_AS(blockStateFromJsonText(R"({"n": 5, "p": 2})"), ValidationError);
  }
  SUBCASE("wrong types") {
    CHECK_THROWS_AS(
        blockStateFromJsonText(R"({"n": "five", "p": 2, "coefficients": []})"),
        ValidationError);
    CHECK_THROWS_AS(
        blockStateFromJsonText(
            R"({"n": 5, "p": 2, "coefficients": [{"sites": [1, 3], "re": "x", "im": 0}]})"),
        ValidationError);
  }
  SUBCASE("duplicate tuples") {
    const char* text = R"({
      "n": 5, "p": 2,
      "coefficients": [
        {"sites": [1, 3], "re": 0.8, "im": 0.0},
        {"sites": [1, 3], "re": 0.6, "im": 0.0}
      ]
    })";
    CHECK_THROWS_AS(blockStateFromJsonText(text), ValidationError);
  }
  SUBCASE("constraint violations surface with the tuple") {
    const char* text =
        R"({"n": 5, "p": 2, "coefficients": [{"sites": [1, 2], "re": 1.0, "im": 0.0}]})";
    try {
      blockStateFromJsonText(text);
      FAIL("expected a ConstraintViolation");
    } catch (const ConstraintViolation& e) {
      CHECK(std::string(e.what()).find("(1,2)") != std::string::npos);
    }
  }
  SUBCASE("unnormalized amplitudes") {
    const char* text =
        R"({"n": 5, "p": 2, "coefficients": [{"sites": [1, 3], "re": 0.5, "im": 0.0}]})";
    CHECK_THROWS_AS(blockStateFromJsonText(text), BadNormalization);
  }
}

TEST_CASE("blockStateFromJsonFile") {
  const char* path = "io_test_coefficients.json";
  {
    std::ofstream out(path);
    out << R"({"n": 3, "p": 1, "coefficients": [)"
        << R"({"sites": [1], "re": 0.6, "im": 0.0}, {"sites": [2], "re": 0.8, "im": 0.0}]})";
  }
  BlockState state = blockStateFromJsonFile(path);
  CHECK(state.n() == 3);
  CHECK(std::abs(state.coefficients().at({2}) - Complex(0.8)) <= 1e-14);
  std::remove(path);
  CHECK_THROWS_AS(blockStateFromJsonFile("does-not-exist.json"), ValidationError);
}

TEST_CASE("formatDouble and roundTripDouble") {
  CHECK(formatDouble(0.25) == "0.25");
  CHECK(formatDouble(1.0 / 3.0) == "0.333333333333333");
  auto rng = test::makeRng(37);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  for (int round = 0; round < 200; ++round) {
    double x = uniform(rng);
    double rt = roundTripDouble(x);
    // 15 significant digits survive the trip and re-printing is stable.
    CHECK(std::abs(rt - x) <= 1e-14 * std::max(1.0, std::abs(x)));
    CHECK(formatDouble(rt) == formatDouble(roundTripDouble(rt)));
  }
}

TEST_CASE("ReportEnvelope rendering") {
  ReportEnvelope env;
  env.command = "closed-form";
  env.inputs["n"] = 5;
  env.results["concurrence"] = 0.25;
  env.textLines = {"line one", "line two"};

  SUBCASE("json carries the fixed field order") {
    std::string out = env.render(OutputFormat::Json);
    CHECK(out.find("\"command\"") < out.find("\"tool_version\""));
    CHECK(out.find("\"tool_version\"") < out.find("\"inputs\""));
    CHECK(out.find("\"inputs\"") < out.find("\"results\""));
    CHECK(out.back() == '\n');
    nlohmann::json parsed = nlohmann::json::parse(out);
    CHECK(parsed["tool_version"] == kToolVersion);
    CHECK(parsed["results"]["concurrence"] == 0.25);
  }
  SUBCASE("text joins the lines") {
    CHECK(env.render(OutputFormat::Text) == "line one\nline two\n");
  }
  SUBCASE("csv requires tabular results") {
    CHECK_THROWS_AS(env.render(OutputFormat::Csv), ValidationError);
    ReportEnvelope table;
    table.command = "sweep";
    table.results["rows"] = nlohmann::ordered_json::array(
        {{{"n", 2}, {"p", 0}, {"concurrence", 0.0}, {"entanglement_of_formation", 0.0}}});
    std::string out = table.render(OutputFormat::Csv);
    CHECK(out == "n,p,concurrence,entanglement_of_formation\n2,0,0,0\n");
  }
}

TEST_CASE("exitCodeFor maps error families to exit codes") {
  CHECK(exitCodeFor(ValidationError("bad")) == 2);
  CHECK(exitCodeFor(InvalidTuple("bad")) == 2);
  CHECK(exitCodeFor(NoConvergence("slow")) == 3);
  CHECK(exitCodeFor(NoRoot("missing")) == 3);
  CHECK(exitCodeFor(std::runtime_error("other")) == 2);
}
