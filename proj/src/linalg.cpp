#include "entchain/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace entchain::linalg {

namespace {

constexpr double kHermitianTol = 1e-10;
constexpr double kEigenvalueClampTol = 1e-10;
constexpr double kNormTol = 1e-10;

// Number of sites encoded by a state vector; rejects non-power-of-two sizes.
int siteCount(Eigen::Index size) {
  if (size < 2) throw ValidationError("state vector must have length 2^n with n >= 1");
  Eigen::Index s = size;
  int n = 0;
  while (s > 1) {
    if (s % 2 != 0) throw ValidationError("state vector length is not a power of two");
    s /= 2;
    ++n;
  }
  return n;
}

void checkUnitNorm(const Eigen::Ref<const StateVector>& state) {
  const double norm = state.norm();
  if (std::abs(norm - 1.0) > kNormTol)
    throw UnnormalizedState("state vector norm " + std::to_string(norm) + " is not 1");
}

}  // namespace

double hermiticityDefect(const Eigen::Ref<const ComplexMatrix>& a) {
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

HermitianEigenResult hermitianEigen(const Eigen::Ref<const ComplexMatrix>& a) {
  if (a.rows() != a.cols()) throw NonHermitianInput("matrix is not square");
  const double defect = hermiticityDefect(a);
  if (defect > kHermitianTol)
    throw NonHermitianInput("Hermiticity defect " + std::to_string(defect) + " exceeds 1e-10");

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(a);
  if (solver.info() != Eigen::Success)
    throw NoConvergence("Hermitian eigensolver did not converge");

  // Eigen sorts ascending; the library contract is descending.
  const Eigen::Index dim = a.rows();
  HermitianEigenResult result;
  result.eigenvalues = solver.eigenvalues().reverse();
  result.eigenvectors.resize(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j)
    result.eigenvectors.col(j) = solver.eigenvectors().col(dim - 1 - j);
  return result;
}

ComplexMatrix matrixSqrtPsd(const Eigen::Ref<const ComplexMatrix>& a) {
  HermitianEigenResult eig = hermitianEigen(a);
  Eigen::VectorXd roots(eig.eigenvalues.size());
  for (Eigen::Index i = 0; i < eig.eigenvalues.size(); ++i) {
    double lambda = eig.eigenvalues[i];
    if (lambda < -kEigenvalueClampTol)
      throw NegativeEigenvalue("eigenvalue " + std::to_string(lambda) +
                               " is below the -1e-10 clamping threshold");
    roots[i] = std::sqrt(std::max(lambda, 0.0));
  }
  ComplexMatrix s = eig.eigenvectors * roots.asDiagonal() * eig.eigenvectors.adjoint();
  // Round-off can leave a tiny anti-Hermitian part; remove it.
  return ((s + s.adjoint()) / 2.0).eval();
}

Eigen::Matrix4cd partialTracePair(const Eigen::Ref<const StateVector>& state, int site) {
  const int n = siteCount(state.size());
  if (site < 1 || site > n - 1)
    throw IndexOutOfRange("site " + std::to_string(site) + " is outside 1.." +
                          std::to_string(n - 1));
  checkUnitNorm(state);

  // Sites (site, site+1) occupy adjacent bit positions (n-site, n-site-1),
  // so every basis index splits as high | ab | low.
  const int low_bits = n - site - 1;
  const Eigen::Index low_count = Eigen::Index(1) << low_bits;
  const Eigen::Index high_count = Eigen::Index(1) << (n - 2 - low_bits);

  Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
  for (Eigen::Index high = 0; high < high_count; ++high) {
    const Eigen::Index base = high << (low_bits + 2);
    for (Eigen::Index low = 0; low < low_count; ++low) {
      Complex amp[4];
      for (int ab = 0; ab < 4; ++ab)
        amp[ab] = state[base | (Eigen::Index(ab) << low_bits) | low];
      for (int ab = 0; ab < 4; ++ab)
        for (int cd = 0; cd < 4; ++cd) rho(ab, cd) += amp[ab] * std::conj(amp[cd]);
    }
  }
  return rho;
}

Eigen::Matrix2cd singleSiteMarginal(const Eigen::Ref<const StateVector>& state, int site) {
  const int n = siteCount(state.size());
  if (site < 1 || site > n)
    throw IndexOutOfRange("site " + std::to_string(site) + " is outside 1.." + std::to_string(n));
  checkUnitNorm(state);

  const int low_bits = n - site;
  const Eigen::Index low_count = Eigen::Index(1) << low_bits;
  const Eigen::Index high_count = Eigen::Index(1) << (n - 1 - low_bits);

  Eigen::Matrix2cd rho = Eigen::Matrix2cd::Zero();
  for (Eigen::Index high = 0; high < high_count; ++high) {
    const Eigen::Index base = high << (low_bits + 1);
    for (Eigen::Index low = 0; low < low_count; ++low) {
      const Complex a0 = state[base | low];
      const Complex a1 = state[base | (Eigen::Index(1) << low_bits) | low];
      rho(0, 0) += a0 * std::conj(a0);
      rho(0, 1) += a0 * std::conj(a1);
      rho(1, 0) += a1 * std::conj(a0);
      rho(1, 1) += a1 * std::conj(a1);
    }
  }
  return rho;
}

}  // namespace entchain::linalg
