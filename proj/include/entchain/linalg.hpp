#pragma once

#include <Eigen/Dense>
#include <complex>
#include <type_traits>

#include "entchain/errors.hpp"

namespace entchain {

using Complex = std::complex<double>;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using ComplexMatrix = DenseMatrix<Complex>;
using RealMatrix = DenseMatrix<double>;
using StateVector = Eigen::VectorXcd;

/// Qubit ordering convention, fixed project-wide: site 1 is the most
/// significant bit of a basis index. For an n-site register the basis
/// state |b_1 b_2 ... b_n> lives at index sum_s b_s * 2^(n-s).

namespace linalg {

/// Eigendecomposition of a Hermitian matrix.  Eigenvalues are sorted in
/// descending order and `eigenvectors` holds the matching orthonormal
/// columns, so A = V diag(lambda) V^dagger.
struct HermitianEigenResult {
  Eigen::VectorXd eigenvalues;
  ComplexMatrix eigenvectors;
};

/// Throws NonHermitianInput unless ||A - A^dagger||_max <= 1e-10, and
/// NoConvergence if the underlying solver fails.
HermitianEigenResult hermitianEigen(const Eigen::Ref<const ComplexMatrix>& a);

/// Principal square root of a Hermitian PSD matrix.  Eigenvalues in
/// [-1e-10, 0) are treated as round-off and clamped to zero; anything
/// below that throws NegativeEigenvalue.
ComplexMatrix matrixSqrtPsd(const Eigen::Ref<const ComplexMatrix>& a);

/// Kronecker product with the left factor as the more significant index:
/// out((iA*rB + iB), (jA*cB + jB)) = a(iA,jA) * b(iB,jB).
template <typename DerivedA, typename DerivedB>
DenseMatrix<typename DerivedA::Scalar> tensorProduct(
    const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  static_assert(std::is_same_v<typename DerivedA::Scalar, typename DerivedB::Scalar>,
                "tensorProduct requires matching scalar types");
  const typename DerivedA::PlainObject ae = a.derived();
  const typename DerivedB::PlainObject be = b.derived();
  DenseMatrix<typename DerivedA::Scalar> out(ae.rows() * be.rows(), ae.cols() * be.cols());
  for (Eigen::Index i = 0; i < ae.rows(); ++i)
    for (Eigen::Index j = 0; j < ae.cols(); ++j)
      out.block(i * be.rows(), j * be.cols(), be.rows(), be.cols()) = ae(i, j) * be;
  return out;
}

/// Reduced density matrix of the adjacent pair (site, site+1) of an n-site
/// pure state, in the basis |00>,|01>,|10>,|11> with `site` the more
/// significant qubit.  `state` must have length 2^n and unit norm within
/// 1e-10; `site` is 1-based with 1 <= site <= n-1.
Eigen::Matrix4cd partialTracePair(const Eigen::Ref<const StateVector>& state, int site);

/// Reduced 2x2 density matrix of a single site (1-based).
Eigen::Matrix2cd singleSiteMarginal(const Eigen::Ref<const StateVector>& state, int site);

/// Max-norm Hermiticity defect ||A - A^dagger||_max.
double hermiticityDefect(const Eigen::Ref<const ComplexMatrix>& a);

}  // namespace linalg
}  // namespace entchain
