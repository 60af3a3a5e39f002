#pragma once

#include <optional>
#include <string>

#include "entchain/report.hpp"

namespace entchain {

/// One function per CLI subcommand.  Each builds the full ReportEnvelope
/// (inputs echo, machine-readable results, human-readable text) so the
/// binary only parses flags and picks an output format.

/// Two-site singlet tiling mixed with its unit translation; reports the
/// averaged pair density matrix, its concurrence, and E_f.
ReportEnvelope cmdBicycle();

/// Chain built from an (n, p) block: either the optimal coefficients or
/// a coefficient file.  Reports rho, y, C, E_f, and optionally the full
/// concurrence cross-check.
ReportEnvelope cmdBlock(std::optional<int> n, std::optional<int> p,
                        const std::optional<std::string>& coefficientPath, bool optimal,
                        bool check, double tolerance);

ReportEnvelope cmdClosedForm(int n, int p);

/// Brute-force eigen-optimization plus its deviation from the closed form.
ReportEnvelope cmdBrute(int n, int p, double tolerance);

/// Continuum limit: evaluate at a given density, or optimize over it.
ReportEnvelope cmdLimit(std::optional<double> alpha, bool optimize);

ReportEnvelope cmdSweep(int nMax);

}  // namespace entchain
