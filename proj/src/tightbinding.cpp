#include "entchain/tightbinding.hpp"

#include <cmath>
#include <numbers>

namespace entchain {

namespace {

constexpr double kBasisCap = 1e5;

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double result = 1.0;
  for (int i = 1; i <= k; ++i) result *= double(n - k + i) / double(i);
  return result;
}

void appendTuples(int sites, int p, int first, SiteTuple& current,
                  std::vector<SiteTuple>& out) {
  if (int(current.size()) == p) {
    out.push_back(current);
    return;
  }
  const int remaining = p - int(current.size());
  for (int k = first; k + remaining - 1 <= sites; ++k) {
    current.push_back(k);
    appendTuples(sites, p, k + 1, current, out);
    current.pop_back();
  }
}

}  // namespace

ReducedLattice ReducedLattice::fromBlockParameters(int n, int p) {
  if (n < 2 || p < 0 || 2 * p > n)
    throw InvalidParameters("invalid block parameters n = " + std::to_string(n) +
                            ", p = " + std::to_string(p) + " (need n >= 2 and 0 <= 2p <= n)");
  return ReducedLattice{n - p + 1, n - p, p};
}

SiteTuple remapIndices(const SiteTuple& jTuple) {
  SiteTuple k(jTuple.size());
  for (size_t r = 0; r < jTuple.size(); ++r) {
    k[r] = jTuple[r] - int(r);
    if (r > 0 && k[r] <= k[r - 1])
      throw ConstraintViolation("tuple has indices closer than two sites apart");
  }
  if (!k.empty() && k.front() < 1)
    throw ConstraintViolation("tuple index below the lattice range");
  return k;
}

SiteTuple unmapIndices(const SiteTuple& kTuple) {
  SiteTuple j(kTuple.size());
  for (size_t r = 0; r < kTuple.size(); ++r) j[r] = kTuple[r] + int(r);
  return j;
}

std::vector<SiteTuple> enumerateTuples(int sites, int p) {
  if (p < 0 || sites < 0 || p > sites)
    throw InvalidParameters("cannot place " + std::to_string(p) + " particles on " +
                            std::to_string(sites) + " sites");
  std::vector<SiteTuple> out;
  SiteTuple current;
  appendTuples(sites, p, 1, current, out);
  return out;
}

RealMatrix hoppingMatrix(const ReducedLattice& lattice) {
  const double dim = binomial(lattice.length, lattice.p);
  if (dim > kBasisCap)
    throw TooLarge("many-body basis dimension " + std::to_string(dim) + " exceeds 1e5");

  const std::vector<SiteTuple> basis = enumerateTuples(lattice.length, lattice.p);
  std::map<SiteTuple, int> index;
  for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = int(i);

  RealMatrix h = RealMatrix::Zero(Eigen::Index(basis.size()), Eigen::Index(basis.size()));
  for (size_t i = 0; i < basis.size(); ++i) {
    const SiteTuple& tuple = basis[i];
    for (size_t q = 0; q < tuple.size(); ++q) {
      SiteTuple bumped = tuple;
      bumped[q] += 1;
      if (bumped[q] > lattice.length) continue;
      if (q + 1 < bumped.size() && bumped[q] >= bumped[q + 1]) continue;
      const int j = index.at(bumped);
      h(Eigen::Index(i), Eigen::Index(j)) = -1.0;
      h(Eigen::Index(j), Eigen::Index(i)) = -1.0;
    }
  }
  return h;
}

SpectrumResult singleParticleEnergies(const ReducedLattice& lattice) {
  SpectrumResult result;
  result.energies.resize(lattice.nPrime - 1);
  for (int m = 1; m <= lattice.nPrime - 1; ++m)
    result.energies[m - 1] = -2.0 * std::cos(m * std::numbers::pi / lattice.nPrime);
  result.groundEnergy = result.energies.head(lattice.p).sum();
  return result;
}

CoefficientMap slaterGroundState(const ReducedLattice& lattice) {
  const int p = lattice.p;
  if (p < 1) throw InvalidParameters("the Slater ground state requires p >= 1");
  const double dim = binomial(lattice.length, p);
  if (dim > kBasisCap)
    throw TooLarge("many-body basis dimension " + std::to_string(dim) + " exceeds 1e5");

  const std::vector<SiteTuple> basis = enumerateTuples(lattice.length, p);
  Eigen::VectorXd values(Eigen::Index(basis.size()));
  RealMatrix orbitals(p, p);
  for (size_t i = 0; i < basis.size(); ++i) {
    // Row m: the m-th sine orbital sampled at the occupied positions.
    for (int m = 1; m <= p; ++m)
      for (int s = 0; s < p; ++s)
        orbitals(m - 1, s) = std::sin(m * std::numbers::pi * basis[i][size_t(s)] / lattice.nPrime);
    values[Eigen::Index(i)] = p == 1 ? orbitals(0, 0) : orbitals.determinant();
  }

  values /= values.norm();
  Eigen::Index largest;
  values.cwiseAbs().maxCoeff(&largest);
  if (values[largest] < 0.0) values = -values;
  if (values.minCoeff() < -1e-12)
    throw Error("Slater ground-state amplitude is negative after sign fixing; determinant "
                "evaluation is inconsistent");

  CoefficientMap coeffs;
  for (size_t i = 0; i < basis.size(); ++i) coeffs[basis[i]] = values[Eigen::Index(i)];
  return coeffs;
}

double closedFormConcurrence(int n, int p) {
  const ReducedLattice lattice = ReducedLattice::fromBlockParameters(n, p);
  if (p == 0) return 0.0;

  const int nPrime = lattice.nPrime;
  double cosineSum = 0.0;
  for (int m = 1; m <= p; ++m) cosineSum += std::cos(m * std::numbers::pi / nPrime);
  const double fromSum = 2.0 * cosineSum / n;

  const double step = std::numbers::pi / nPrime;
  const double ratio = (std::cos(p * step) - std::cos((p + 1) * step) + std::cos(step) - 1.0) /
                       (1.0 - std::cos(step));
  const double fromRatio = ratio / n;

  // The ratio form divides by 1 - cos(pi/nPrime) ~ pi^2/(2 nPrime^2), so
  // its round-off grows like nPrime^2; scale the agreement tolerance
  // accordingly beyond the nPrime ~ 200 range where 1e-12 holds.
  const double tol = 1e-12 * std::max(1.0, (double(nPrime) / 200.0) * (double(nPrime) / 200.0));
  if (std::abs(fromSum - fromRatio) > tol)
    throw Error("closed-form concurrence cross-check failed: " + std::to_string(fromSum) +
                " vs " + std::to_string(fromRatio));
  // The sum is non-negative for every valid (n, p) but rounds to ~-1e-17
  // when it is exactly zero (2p = n); a concurrence must not be negative.
  return std::max(fromSum, 0.0);
}

}  // namespace entchain
