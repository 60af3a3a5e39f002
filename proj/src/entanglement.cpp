#include "entchain/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace entchain {

namespace {

constexpr double kStateTol = 1e-10;

// sigma_y (x) sigma_y is real in the standard basis.
Eigen::Matrix4cd spinFlipOperator() {
  Eigen::Matrix4cd f = Eigen::Matrix4cd::Zero();
  f(0, 3) = -1.0;
  f(1, 2) = 1.0;
  f(2, 1) = 1.0;
  f(3, 0) = -1.0;
  return f;
}

double binaryEntropy(double x) {
  auto term = [](double v) { return v <= 0.0 ? 0.0 : -v * std::log2(v); };
  return term(x) + term(1.0 - x);
}

void checkUnitInterval(double value, const char* name) {
  constexpr double slack = 1e-12;
  if (!(value >= -slack && value <= 1.0 + slack))
    throw OutOfRange(std::string(name) + " = " + std::to_string(value) + " is outside [0, 1]");
}

}  // namespace

TwoQubitState TwoQubitState::fromDensityMatrix(const Eigen::Matrix4cd& rho) {
  const double defect = linalg::hermiticityDefect(rho);
  if (defect > kStateTol)
    throw NonHermitianInput("density matrix Hermiticity defect " + std::to_string(defect));
  const double trace = rho.trace().real();
  if (std::abs(trace - 1.0) > kStateTol)
    throw UnnormalizedState("density matrix trace " + std::to_string(trace) + " is not 1");
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(rho, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw NoConvergence("eigenvalue check of density matrix failed");
  const double minEig = solver.eigenvalues().minCoeff();
  if (minEig < -kStateTol)
    throw NegativeEigenvalue("density matrix eigenvalue " + std::to_string(minEig) +
                             " is below -1e-10");
  return TwoQubitState(rho);
}

TwoQubitState PureTwoQubit::projector() const {
  Eigen::Vector4cd psi(alpha, beta, gamma, delta);
  const double norm = psi.norm();
  if (std::abs(norm - 1.0) > kStateTol)
    throw UnnormalizedState("pure state norm " + std::to_string(norm) + " is not 1");
  return TwoQubitState::fromDensityMatrix(psi * psi.adjoint());
}

double pureConcurrence(const PureTwoQubit& psi) {
  const double norm2 = std::norm(psi.alpha) + std::norm(psi.beta) + std::norm(psi.gamma) +
                       std::norm(psi.delta);
  if (std::abs(norm2 - 1.0) > kStateTol)
    throw UnnormalizedState("pure state squared norm " + std::to_string(norm2) + " is not 1");
  return 2.0 * std::abs(psi.alpha * psi.delta - psi.beta * psi.gamma);
}

Eigen::Matrix4cd spinFlip(const TwoQubitState& state) {
  static const Eigen::Matrix4cd f = spinFlipOperator();
  return f * state.rho().conjugate() * f;
}

ConcurrenceResult concurrence(const TwoQubitState& state) {
  // The Hermitian carrier factors as sqrt(rho) rho~ sqrt(rho) = B B^dagger
  // with B = sqrt(rho) (sigma_y x sigma_y) sqrt(rho)^*, so the lambda_i --
  // the eigenvalues of its square root -- are exactly the singular values
  // of B.  Computing them by SVD instead of eigendecomposing the formed
  // product avoids squaring the conditioning, which would wash out the
  // near-zero lambdas of pure states to ~1e-8.
  const ComplexMatrix sqrtRho = linalg::matrixSqrtPsd(state.rho());
  static const Eigen::Matrix4cd f = spinFlipOperator();
  const Eigen::Matrix4cd b = sqrtRho * f * sqrtRho.conjugate();

  Eigen::JacobiSVD<Eigen::Matrix4cd> svd(b);
  ConcurrenceResult result;
  for (int i = 0; i < 4; ++i) result.lambdas[size_t(i)] = svd.singularValues()[i];
  result.concurrence = std::max(
      result.lambdas[0] - result.lambdas[1] - result.lambdas[2] - result.lambdas[3], 0.0);
  return result;
}

double specialFormConcurrence(const TwoQubitState& state) {
  constexpr double kFormTol = 1e-10;
  const Eigen::Matrix4cd& rho = state.rho();
  static constexpr std::pair<int, int> forbidden[] = {{0, 1}, {0, 2}, {0, 3},
                                                      {1, 3}, {2, 3}, {3, 3}};
  std::ostringstream offenders;
  for (auto [i, j] : forbidden) {
    if (std::abs(rho(i, j)) > kFormTol) {
      if (offenders.tellp() > 0) offenders << ", ";
      offenders << "rho(" << i + 1 << "," << j + 1 << ")=" << std::abs(rho(i, j));
    }
  }
  if (offenders.tellp() > 0)
    throw FormViolation("density matrix is not of the required form; nonzero entries: " +
                        offenders.str());
  return 2.0 * std::abs(rho(1, 2));
}

double entanglementOfFormation(double c) {
  checkUnitInterval(c, "concurrence");
  const double clamped = std::clamp(c, 0.0, 1.0);
  return binaryEntropy((1.0 + std::sqrt(1.0 - clamped * clamped)) / 2.0);
}

double ckwBudget(double cLeft, double cRight) {
  checkUnitInterval(cLeft, "left concurrence");
  checkUnitInterval(cRight, "right concurrence");
  return cLeft * cLeft + cRight * cRight;
}

}  // namespace entchain
