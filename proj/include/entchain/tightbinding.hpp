#pragma once

#include "entchain/chain.hpp"

namespace entchain {

/// Deleting the site to the right of each occupied site turns the
/// no-adjacency constraint into free placement of p particles on a
/// lattice of nPrime - 1 sites, where nPrime = n - p + 1.
struct ReducedLattice {
  int nPrime;
  int length;  // nPrime - 1 sites, labeled 1..length
  int p;

  static ReducedLattice fromBlockParameters(int n, int p);
};

/// Open-boundary single-particle spectrum E_m = -2 cos(m*pi/nPrime),
/// m = 1..nPrime-1, ascending in m, and the filled-sea ground energy
/// sum of the first p levels.
struct SpectrumResult {
  Eigen::VectorXd energies;
  double groundEnergy = 0.0;
};

/// k_r = j_r - (r - 1): bijection from constrained block tuples onto
/// unconstrained increasing tuples with 0 < k_1 < ... < k_p < nPrime.
SiteTuple remapIndices(const SiteTuple& jTuple);

/// Inverse remap, j_r = k_r + (r - 1).
SiteTuple unmapIndices(const SiteTuple& kTuple);

/// All increasing p-tuples over 1..sites in lexicographic order; the
/// single empty tuple for p = 0.
std::vector<SiteTuple> enumerateTuples(int sites, int p);

/// Nearest-neighbor hopping Hamiltonian over the many-body tuple basis:
/// -1 between basis states that differ by one particle moved one site,
/// 0 elsewhere.  Basis dimension C(length, p) is capped at 1e5.
RealMatrix hoppingMatrix(const ReducedLattice& lattice);

SpectrumResult singleParticleEnergies(const ReducedLattice& lattice);

/// Ground-state amplitudes over k-tuples: the p x p determinant
/// det[sin(m*pi*k_s/nPrime)] per tuple, normalized, with the overall
/// sign fixed so the largest-magnitude component is positive.  All
/// components are then non-negative (checked, not assumed).
CoefficientMap slaterGroundState(const ReducedLattice& lattice);

/// Best chain concurrence for block parameters (n, p): the cosine sum
/// (2/n) sum_{m=1..p} cos(m*pi/nPrime), cross-checked against the
/// equivalent closed-form ratio expression before returning.
double closedFormConcurrence(int n, int p);

}  // namespace entchain
