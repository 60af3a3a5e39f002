#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "entchain/commands.hpp"

namespace {

entchain::OutputFormat parseFormat(const std::string& name) {
  if (name == "json") return entchain::OutputFormat::Json;
  if (name == "csv") return entchain::OutputFormat::Csv;
  return entchain::OutputFormat::Text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"entangled-chain concurrence toolkit"};
  app.require_subcommand(1);

  // Global flags; subcommands fall through to them, so they may appear
  // anywhere on the command line.
  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  double tolerance = 1e-9;
  app.add_option("--tolerance", tolerance, "numeric cross-check tolerance")
      ->capture_default_str();

  CLI::App* bicycle =
      app.add_subcommand("bicycle", "two-site singlet demo needing the full Wootters formula");
  bicycle->fallthrough();

  CLI::App* block = app.add_subcommand("block", "pair density matrix and concurrence of a block chain");
  block->fallthrough();
  std::optional<int> blockN;
  std::optional<int> blockP;
  block->add_option("--n", blockN, "block size");
  block->add_option("--p", blockP, "occupied sites per block");
  std::optional<std::string> coefficientPath;
  CLI::Option* coeffsOpt =
      block->add_option("--coeffs", coefficientPath, "coefficient file (JSON)")
          ->check(CLI::ExistingFile);
  bool optimal = false;
  block->add_flag("--optimal", optimal, "use the concurrence-maximizing coefficients")
      ->excludes(coeffsOpt);
  bool check = false;
  block->add_flag("--check", check, "cross-check against the full Wootters concurrence");

  CLI::App* closedForm =
      app.add_subcommand("closed-form", "best chain concurrence for (n, p) in closed form");
  closedForm->fallthrough();
  int cfN = 0;
  int cfP = 0;
  closedForm->add_option("--n", cfN, "block size")->required();
  closedForm->add_option("--p", cfP, "occupied sites per block")->required();

  CLI::App* brute =
      app.add_subcommand("brute", "brute-force eigen-optimization, checked against the closed form");
  brute->fallthrough();
  int brN = 0;
  int brP = 0;
  brute->add_option("--n", brN, "block size")->required();
  brute->add_option("--p", brP, "occupied sites per block")->required();

  CLI::App* limit = app.add_subcommand("limit", "continuum (n -> infinity) concurrence limit");
  limit->fallthrough();
  std::optional<double> alpha;
  CLI::Option* alphaOpt = limit->add_option("--alpha", alpha, "occupation density p/n");
  bool optimizeAlpha = false;
  limit->add_flag("--optimize", optimizeAlpha, "solve for the optimal density")
      ->excludes(alphaOpt);

  CLI::App* sweepCmd =
      app.add_subcommand("sweep", "best (p, C, E_f) per block size; ties go to the smaller p");
  sweepCmd->fallthrough();
  int nMax = 0;
  sweepCmd->add_option("--n-max", nMax, "largest block size")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    entchain::ReportEnvelope env;
    if (bicycle->parsed()) {
      env = entchain::cmdBicycle();
    } else if (block->parsed()) {
      env = entchain::cmdBlock(blockN, blockP, coefficientPath, optimal, check, tolerance);
    } else if (closedForm->parsed()) {
      env = entchain::cmdClosedForm(cfN, cfP);
    } else if (brute->parsed()) {
      env = entchain::cmdBrute(brN, brP, tolerance);
    } else if (limit->parsed()) {
      env = entchain::cmdLimit(alpha, optimizeAlpha);
    } else {
      env = entchain::cmdSweep(nMax);
    }
    std::cout << env.render(parseFormat(format));
    return env.checksPassed ? 0 : 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return entchain::exitCodeFor(e);
  }
}
