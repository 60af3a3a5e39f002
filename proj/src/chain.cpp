#include "entchain/chain.hpp"

#include <cmath>
#include <sstream>

#include "entchain/tightbinding.hpp"

namespace entchain {

namespace {

constexpr int kExpandSiteCap = 20;
constexpr int kEnumerationSiteCap = 12;
constexpr double kBuildNormTol = 1e-6;

std::string tupleToString(const SiteTuple& t) {
  std::ostringstream out;
  out << "(";
  for (size_t i = 0; i < t.size(); ++i) out << (i ? "," : "") << t[i];
  out << ")";
  return out.str();
}

void checkTupleShape(const SiteTuple& t, int n, int p) {
  if (int(t.size()) != p)
    throw InvalidTuple("tuple " + tupleToString(t) + " does not have " + std::to_string(p) +
                       " indices");
  for (size_t i = 0; i < t.size(); ++i) {
    if (t[i] < 1 || t[i] > n)
      throw InvalidTuple("tuple " + tupleToString(t) + " has index outside 1.." +
                         std::to_string(n));
    if (i > 0 && t[i] <= t[i - 1])
      throw InvalidTuple("tuple " + tupleToString(t) + " is not strictly increasing");
  }
}

void checkStrictConstraints(const SiteTuple& t, int n) {
  for (size_t i = 1; i < t.size(); ++i)
    if (t[i] - t[i - 1] == 1)
      throw ConstraintViolation("tuple " + tupleToString(t) +
                                " occupies two neighboring sites (no-adjacency condition)");
  if (!t.empty() && t.back() == n)
    throw ConstraintViolation("tuple " + tupleToString(t) + " occupies site " +
                              std::to_string(n) + " (last-site-unoccupied condition)");
}

Eigen::Index basisIndex(const SiteTuple& t, int n) {
  Eigen::Index idx = 0;
  for (int site : t) idx |= Eigen::Index(1) << (n - site);
  return idx;
}

}  // namespace

BlockState BlockState::build(int n, int p, const CoefficientMap& coefficients,
                             ConstraintMode mode) {
  if (n < 2) throw InvalidParameters("block size n must be at least 2");
  if (p < 0) throw InvalidParameters("particle count p must be non-negative");
  if (mode == ConstraintMode::Strict && 2 * p > n)
    throw ConstraintViolation("particle count p = " + std::to_string(p) +
                              " violates 2p <= n for n = " + std::to_string(n));
  if (coefficients.empty()) throw InvalidTuple("coefficient map is empty");

  double norm2 = 0.0;
  for (const auto& [tuple, amplitude] : coefficients) {
    checkTupleShape(tuple, n, p);
    if (mode == ConstraintMode::Strict) checkStrictConstraints(tuple, n);
    norm2 += std::norm(amplitude);
  }
  if (std::abs(norm2 - 1.0) > kBuildNormTol)
    throw BadNormalization("squared norm " + std::to_string(norm2) +
                           " deviates from 1 by more than 1e-6");

  CoefficientMap normalized = coefficients;
  const double scale = 1.0 / std::sqrt(norm2);
  for (auto& [tuple, amplitude] : normalized) amplitude *= scale;
  return BlockState(n, p, std::move(normalized), mode);
}

StateVector BlockState::expandToVector() const {
  if (n_ > kExpandSiteCap)
    throw TooLarge("block size " + std::to_string(n_) + " exceeds the 2^n expansion cap of " +
                   std::to_string(kExpandSiteCap));
  StateVector vec = StateVector::Zero(Eigen::Index(1) << n_);
  for (const auto& [tuple, amplitude] : coefficients_) vec[basisIndex(tuple, n_)] = amplitude;
  return vec;
}

PairDensityReport pairDensityMatrix(const BlockState& xi) {
  const int n = xi.n();
  if (n > kEnumerationSiteCap)
    throw TooLarge("block size " + std::to_string(n) + " exceeds the enumeration cap of " +
                   std::to_string(kEnumerationSiteCap));
  const StateVector vec = xi.expandToVector();

  std::vector<TwoQubitState> components;
  components.reserve(size_t(n));
  Eigen::Matrix4cd sum = Eigen::Matrix4cd::Zero();
  for (int site = 1; site <= n - 1; ++site) {
    Eigen::Matrix4cd comp = linalg::partialTracePair(vec, site);
    sum += comp;
    components.push_back(TwoQubitState::fromDensityMatrix(comp));
  }
  // Boundary shift: the pair straddles two independent blocks, so its
  // state is the product of the site-n and site-1 marginals.
  Eigen::Matrix4cd boundary = linalg::tensorProduct(linalg::singleSiteMarginal(vec, n),
                                                    linalg::singleSiteMarginal(vec, 1));
  sum += boundary;
  components.push_back(TwoQubitState::fromDensityMatrix(boundary));

  Eigen::Matrix4cd averaged = sum / double(n);
  PairDensityReport report{TwoQubitState::fromDensityMatrix(averaged),
                           double(n) * averaged(1, 2), std::move(components)};
  return report;
}

Complex computeY(const BlockState& xi) {
  if (xi.mode() != ConstraintMode::Strict)
    throw RelaxedModeUnsupported("the adjacent-coefficient sum is defined for strict mode only");

  const CoefficientMap& coeffs = xi.coefficients();
  Complex y = 0.0;
  for (const auto& [tuple, amplitude] : coeffs) {
    for (size_t q = 0; q < tuple.size(); ++q) {
      SiteTuple bumped = tuple;
      bumped[q] += 1;
      if (q + 1 < bumped.size() && bumped[q] >= bumped[q + 1]) continue;  // duplicate index
      auto it = coeffs.find(bumped);
      if (it != coeffs.end()) y += std::conj(amplitude) * it->second;
    }
  }
  return y;
}

std::vector<SiteTuple> strictTuples(int n, int p) {
  if (n < 2 || p < 0 || 2 * p > n)
    throw InvalidParameters("no strict tuples for n = " + std::to_string(n) +
                            ", p = " + std::to_string(p));
  // Constrained tuples are the image of the unconstrained reduced-lattice
  // tuples under the inverse index remap.
  std::vector<SiteTuple> result;
  for (const SiteTuple& k : enumerateTuples(n - p, p)) result.push_back(unmapIndices(k));
  return result;
}

}  // namespace entchain
