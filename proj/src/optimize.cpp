#include "entchain/optimize.hpp"

#include <cmath>
#include <numbers>

#include "entchain/entanglement.hpp"

namespace entchain {

namespace {

constexpr double kRayleighTol = 1e-12;
constexpr double kVectorTol = 1e-10;
constexpr int kMaxPowerIterations = 100000;

// Stationarity condition of cLim with both sides multiplied by
// cos(alpha*pi/(1-alpha)): continuous on [0.2, 0.45], unlike the raw
// tan form, which has a pole at alpha = 1/3 inside the bracket.
double stationarityScaled(double alpha) {
  const double theta = alpha * std::numbers::pi / (1.0 - alpha);
  return (1.0 - alpha) * std::sin(theta) - std::numbers::pi * std::cos(theta);
}

double stationarityRaw(double alpha) {
  const double theta = alpha * std::numbers::pi / (1.0 - alpha);
  return std::tan(theta) - std::numbers::pi / (1.0 - alpha);
}

}  // namespace

OptimizationResult bruteForceOptimize(int n, int p) {
  const ReducedLattice lattice = ReducedLattice::fromBlockParameters(n, p);
  const RealMatrix adjacency = -hoppingMatrix(lattice);
  const Eigen::Index dim = adjacency.rows();

  // Shift by +2: the hopping band lies in [-2, 2], so the shifted matrix
  // is PSD and the iteration converges to the Perron eigenpair.  The
  // uniform start has nonzero overlap with it.
  Eigen::VectorXd v = Eigen::VectorXd::Constant(dim, 1.0 / std::sqrt(double(dim)));
  double rayleigh = v.dot(adjacency * v) + 2.0;
  int iterations = 0;
  bool converged = false;
  while (iterations < kMaxPowerIterations) {
    ++iterations;
    Eigen::VectorXd w = adjacency * v + 2.0 * v;
    w /= w.norm();
    const double next = w.dot(adjacency * w) + 2.0;
    const double vectorChange = (w - v).lpNorm<Eigen::Infinity>();
    const bool done = std::abs(next - rayleigh) <= kRayleighTol && vectorChange <= kVectorTol;
    v = std::move(w);
    rayleigh = next;
    if (done) {
      converged = true;
      break;
    }
  }
  if (!converged)
    throw NoConvergence("power iteration did not converge within " +
                        std::to_string(kMaxPowerIterations) + " iterations");

  Eigen::Index largest;
  v.cwiseAbs().maxCoeff(&largest);
  if (v[largest] < 0.0) v = -v;
  if (v.minCoeff() < -1e-12)
    throw Error("top eigenvector of the adjacency matrix has a negative component; "
                "Perron-Frobenius guarantees a non-negative one");

  const double gamma = rayleigh - 2.0;

  OptimizationResult result;
  result.lagrangeEigenvalue = gamma;
  // |y| at the optimum is gamma/2 (the quadratic form counts each
  // adjacent pair once), so C = (2/n)|y| = gamma/n.
  result.bestConcurrence = gamma / double(n);
  result.iterations = iterations;
  const std::vector<SiteTuple> basis = enumerateTuples(lattice.length, p);
  for (size_t i = 0; i < basis.size(); ++i)
    result.bestCoefficients[unmapIndices(basis[i])] = v[Eigen::Index(i)];
  return result;
}

double cLim(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 0.5))
    throw OutOfRange("occupation density " + std::to_string(alpha) + " is outside [0, 1/2]");
  return (2.0 / std::numbers::pi) * (1.0 - alpha) *
         std::sin(alpha * std::numbers::pi / (1.0 - alpha));
}

ContinuumResult optimizeAlpha() {
  double lo = 0.2;
  double hi = 0.45;
  double glo = stationarityScaled(lo);
  const double ghi = stationarityScaled(hi);
  if (glo == 0.0) hi = lo;
  if (ghi == 0.0) lo = hi;
  if (glo * ghi > 0.0)
    throw NoRoot("stationarity condition has the same sign at both bracket endpoints");

  while (hi - lo > 1e-14) {
    const double mid = (lo + hi) / 2.0;
    const double gmid = stationarityScaled(mid);
    if (gmid == 0.0) {
      lo = hi = mid;
      break;
    }
    if (glo * gmid < 0.0) {
      hi = mid;
    } else {
      lo = mid;
      glo = gmid;
    }
  }

  ContinuumResult result;
  result.alpha = (lo + hi) / 2.0;
  result.cLim = cLim(result.alpha);
  result.stationarityResidual = std::abs(stationarityRaw(result.alpha));
  if (result.stationarityResidual > 1e-9)
    throw NoConvergence("bisection terminated with stationarity residual " +
                        std::to_string(result.stationarityResidual));
  return result;
}

std::vector<SweepRow> sweep(int nMax) {
  if (nMax < 2) throw InvalidParameters("sweep requires n_max >= 2");
  // Values within 1e-12 count as ties, broken toward smaller p.
  constexpr double kTieTol = 1e-12;

  std::vector<SweepRow> rows;
  rows.reserve(size_t(nMax - 1));
  for (int n = 2; n <= nMax; ++n) {
    int bestP = 0;
    double bestC = closedFormConcurrence(n, 0);
    for (int p = 1; 2 * p <= n; ++p) {
      const double c = closedFormConcurrence(n, p);
      if (c > bestC + kTieTol) {
        bestC = c;
        bestP = p;
      }
    }
    rows.push_back(SweepRow{n, bestP, bestC, entanglementOfFormation(bestC)});
  }
  return rows;
}

}  // namespace entchain
