#pragma once

#include "entchain/tightbinding.hpp"

namespace entchain {

/// Outcome of the brute-force maximization of the chain concurrence over
/// the constrained coefficient space for fixed (n, p).
struct OptimizationResult {
  double bestConcurrence = 0.0;
  /// Optimal amplitudes over block-site tuples, entrywise non-negative.
  CoefficientMap bestCoefficients;
  /// Top eigenvalue of the adjacency quadratic form (the normalization
  /// Lagrange multiplier of the stationarity equations).
  double lagrangeEigenvalue = 0.0;
  int iterations = 0;
};

/// Maximizes (2/n)|y| over normalized coefficients as the top eigenpair
/// of the adjacency matrix A = -H, computed by shifted power iteration
/// (A + 2I keeps the iteration converging on the Perron root).  This is
/// the independent numerical oracle for closedFormConcurrence.
OptimizationResult bruteForceOptimize(int n, int p);

/// Infinite-block concurrence at occupation density alpha = p/n:
/// (2/pi)(1 - alpha) sin(alpha*pi/(1 - alpha)), for alpha in [0, 1/2].
double cLim(double alpha);

struct ContinuumResult {
  double alpha = 0.0;
  double cLim = 0.0;
  /// |tan(alpha*pi/(1-alpha)) - pi/(1-alpha)| at the reported alpha.
  double stationarityResidual = 0.0;
};

/// Solves the stationarity condition tan(alpha*pi/(1-alpha)) = pi/(1-alpha)
/// by bisection on [0.2, 0.45] and reports the optimal density and its
/// concurrence.
ContinuumResult optimizeAlpha();

struct SweepRow {
  int n = 0;
  int p = 0;
  double concurrence = 0.0;
  double entanglementOfFormation = 0.0;
};

/// Best (p, C, E_f) per block size n = 2..nMax, p chosen by maximizing
/// the closed-form concurrence with ties broken toward smaller p.
std::vector<SweepRow> sweep(int nMax);

}  // namespace entchain
