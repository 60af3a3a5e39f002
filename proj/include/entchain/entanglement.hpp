#pragma once

#include <array>

#include "entchain/linalg.hpp"

namespace entchain {

/// Validated two-qubit density matrix in the basis |00>,|01>,|10>,|11>.
/// Construction enforces Hermiticity and unit trace within 1e-10 and
/// eigenvalues >= -1e-10.
class TwoQubitState {
 public:
  static TwoQubitState fromDensityMatrix(const Eigen::Matrix4cd& rho);

  const Eigen::Matrix4cd& rho() const { return rho_; }

 private:
  explicit TwoQubitState(Eigen::Matrix4cd rho) : rho_(std::move(rho)) {}
  Eigen::Matrix4cd rho_;
};

/// Pure two-qubit state alpha|00> + beta|01> + gamma|10> + delta|11>.
struct PureTwoQubit {
  Complex alpha;
  Complex beta;
  Complex gamma;
  Complex delta;

  TwoQubitState projector() const;
};

struct ConcurrenceResult {
  double concurrence = 0.0;
  std::array<double, 4> lambdas{};  // descending, clamped to >= 0
};

/// C = 2|alpha*delta - beta*gamma| for a normalized pure state.
double pureConcurrence(const PureTwoQubit& psi);

/// Spin-flipped matrix (sigma_y (x) sigma_y) rho^* (sigma_y (x) sigma_y).
Eigen::Matrix4cd spinFlip(const TwoQubitState& state);

/// Mixed-state concurrence C = max(l1 - l2 - l3 - l4, 0), where the l_i
/// are the square roots of the eigenvalues of rho*rho~ in descending
/// order.  They are obtained as the eigenvalues of the Hermitian carrier
/// sqrt(sqrt(rho) rho~ sqrt(rho)), which has the same spectrum.
ConcurrenceResult concurrence(const TwoQubitState& state);

/// Shortcut C = 2|rho23| valid when rho has zeros at entries
/// (1,2),(1,3),(1,4),(2,4),(3,4),(4,4) (1-based).  Throws FormViolation
/// listing the offending entries otherwise.
double specialFormConcurrence(const TwoQubitState& state);

/// E_f(C) = h((1 + sqrt(1 - C^2))/2) in ebits, h the binary entropy with
/// the 0*log2(0) = 0 convention.
double entanglementOfFormation(double c);

/// Squared-concurrence budget C_left^2 + C_right^2 used by the sharing
/// bound: for any physically realized chain pair it must not exceed 1,
/// capping a uniform chain at C <= 1/sqrt(2).
double ckwBudget(double cLeft, double cRight);

}  // namespace entchain
