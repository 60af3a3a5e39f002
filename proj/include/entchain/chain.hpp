#pragma once

#include <map>
#include <vector>

#include "entchain/entanglement.hpp"
#include "entchain/linalg.hpp"

namespace entchain {

/// Occupied-site tuple, strictly increasing, 1-based.  The empty tuple is
/// the p = 0 vacuum.
using SiteTuple = std::vector<int>;

/// Amplitudes keyed by occupied-site tuple; std::map iterates tuples in
/// lexicographic order, the project-wide basis order.
using CoefficientMap = std::map<SiteTuple, Complex>;

/// Strict mode enforces the occupancy constraints that force the averaged
/// pair density matrix into its zero-rho44 template: no two occupied
/// sites adjacent, and site n unoccupied.  Relaxed mode lifts both (the
/// two-site singlet-block demo needs this) while keeping the fixed
/// particle number.
enum class ConstraintMode { Strict, Relaxed };

/// An n-qubit block state with exactly p occupied sites,
/// sum_{j1<...<jp} a_{j1..jp} |j1..jp>, normalized.
class BlockState {
 public:
  /// Validates tuples and constraints and normalizes the amplitudes.
  /// Inputs whose squared norm is farther than 1e-6 from 1 are rejected
  /// with BadNormalization.
  static BlockState build(int n, int p, const CoefficientMap& coefficients,
                          ConstraintMode mode = ConstraintMode::Strict);

  int n() const { return n_; }
  int p() const { return p_; }
  ConstraintMode mode() const { return mode_; }
  const CoefficientMap& coefficients() const { return coefficients_; }

  /// Full 2^n amplitude vector (site 1 = most significant bit).  Guarded
  /// at n <= 20.
  StateVector expandToVector() const;

 private:
  BlockState(int n, int p, CoefficientMap coefficients, ConstraintMode mode)
      : n_(n), p_(p), coefficients_(std::move(coefficients)), mode_(mode) {}

  int n_;
  int p_;
  CoefficientMap coefficients_;
  ConstraintMode mode_;
};

/// Nearest-neighbor pair density matrix of the infinite chain built by
/// tiling the block and averaging its n translations.
struct PairDensityReport {
  TwoQubitState rho;
  /// n times the (|01><10|) entry of rho; in strict mode this equals the
  /// adjacent-coefficient sum computed by computeY.
  Complex y;
  /// One component per shift k = 0..n-1; the last one crosses the block
  /// boundary and is the product of the site-n and site-1 marginals.
  std::vector<TwoQubitState> shiftComponents;
};

/// Enumeration path: expands the block, partial-traces every in-block
/// adjacent pair, forms the boundary product term, and averages.
/// Guarded at n <= 12.
PairDensityReport pairDensityMatrix(const BlockState& xi);

/// Closed form for y: the sum over all pairs of coefficients whose tuples
/// differ in exactly one index by exactly one, the coefficient with the
/// smaller index conjugated.  The chain concurrence is (2/n)|y|.
/// Strict-mode states only.
Complex computeY(const BlockState& xi);

/// All site tuples admitted by the strict-mode constraints for (n, p),
/// in lexicographic order.
std::vector<SiteTuple> strictTuples(int n, int p);

}  // namespace entchain
