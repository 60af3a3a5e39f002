#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "entchain/chain.hpp"
#include "test_support.hpp"

using namespace entchain;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

/// The worked (5, 2) optimum: a_13 = 1/2, a_14 = 1/sqrt(2), a_24 = 1/2.
BlockState optimalFiveTwo() {
  return BlockState::build(5, 2,
                           {{{1, 3}, 0.5}, {{1, 4}, kInvSqrt2}, {{2, 4}, 0.5}});
}

}  // namespace

TEST_CASE("BlockState::build validation") {
  SUBCASE("accepts a valid strict state") {
    BlockState state = optimalFiveTwo();
    CHECK(state.n() == 5);
    CHECK(state.p() == 2);
    CHECK(state.coefficients().size() == 3);
  }
  SUBCASE("rejects adjacent occupied sites") {
    CHECK_THROWS_AS(BlockState::build(5, 2, {{{1, 2}, 1.0}}), ConstraintViolation);
  }
  SUBCASE("rejects occupation of the last site") {
    CHECK_THROWS_AS(BlockState::build(5, 2, {{{1, 5}, 1.0}}), ConstraintViolation);
  }
  SUBCASE("rejects overfilled blocks") {
    CHECK_THROWS_AS(BlockState::build(5, 3, {{{1, 3, 5}, 1.0}}), ValidationError);
  }
  SUBCASE("rejects malformed tuples") {
    CHECK_THROWS_AS(BlockState::build(5, 2, {{{1}, 1.0}}), InvalidTuple);
    CHECK_THROWS_AS(BlockState::build(5, 2, {{{3, 1}, 1.0}}), InvalidTuple);
    CHECK_THROWS_AS(BlockState::build(5, 2, {{{0, 3}, 1.0}}), InvalidTuple);
    CHECK_THROWS_AS(BlockState::build(5, 2, {{{1, 7}, 1.0}}), InvalidTuple);
  }
  SUBCASE("rejects badly normalized input, renormalizes slight offsets") {
    CHECK_THROWS_AS(BlockState::build(5, 2, {{{1, 3}, 0.5}}), BadNormalization);
    BlockState state = BlockState::build(5, 2, {{{1, 3}, 1.0 + 1e-8}});
    CHECK(std::abs(state.coefficients().at({1, 3})) == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("relaxed mode lifts the adjacency and last-site conditions") {
    BlockState singlet = BlockState::build(
        2, 1, {{{1}, kInvSqrt2}, {{2}, -kInvSqrt2}}, ConstraintMode::Relaxed);
    CHECK(singlet.mode() == ConstraintMode::Relaxed);
    CHECK_THROWS_AS(
        BlockState::build(2, 1, {{{1}, kInvSqrt2}, {{2}, -kInvSqrt2}}),
        ConstraintViolation);
  }
  SUBCASE("vacuum block") {
    BlockState vacuum = BlockState::build(3, 0, {{SiteTuple{}, 1.0}});
    CHECK(vacuum.coefficients().size() == 1);
  }
}

TEST_CASE("expandToVector places site 1 at the most significant bit") {
  BlockState state = BlockState::build(5, 2, {{{1, 3}, 1.0}});
  StateVector psi = state.expandToVector();
  REQUIRE(psi.size() == 32);
  // Sites {1,3} of five -> bits 10100 -> index 20.
  CHECK(std::abs(psi(20) - Complex(1.0)) <= 1e-15);
  CHECK(psi.norm() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("strictTuples") {
  SUBCASE("worked example (5, 2)") {
    std::vector<SiteTuple> tuples = strictTuples(5, 2);
    REQUIRE(tuples.size() == 3);
    CHECK(tuples[0] == SiteTuple{1, 3});
    CHECK(tuples[1] == SiteTuple{1, 4});
    CHECK(tuples[2] == SiteTuple{2, 4});
  }
  SUBCASE("counts match the reduced-lattice binomial") {
    // Placing p non-adjacent sites with site n free = C(n-p, p).
    auto binomial = [](int a, int b) {
      double out = 1.0;
      for (int i = 1; i <= b; ++i) out = out * double(a - b + i) / double(i);
      return int(out + 0.5);
    };
    for (int n = 2; n <= 10; ++n)
      for (int p = 0; 2 * p <= n; ++p)
        CHECK(strictTuples(n, p).size() == size_t(binomial(n - p, p)));
  }
  SUBCASE("all emitted tuples satisfy the constraints") {
    for (const SiteTuple& t : strictTuples(9, 3)) {
      for (size_t i = 1; i < t.size(); ++i) CHECK(t[i] - t[i - 1] >= 2);
      CHECK(t.back() <= 8);
    }
  }
}

TEST_CASE("pairDensityMatrix on the worked (5, 2) example") {
  PairDensityReport report = pairDensityMatrix(optimalFiveTwo());
  const Eigen::Matrix4cd& rho = report.rho.rho();
  // Template: diag((n-2p)/n, p/n, p/n, 0) with y/n on the off-diagonal.
  CHECK(rho(0, 0).real() == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(rho(1, 1).real() == doctest::Approx(0.4).epsilon(1e-12));
  CHECK(rho(2, 2).real() == doctest::Approx(0.4).epsilon(1e-12));
  CHECK(std::abs(rho(3, 3)) <= 1e-12);
  // y = (2 a13 a14 + 2 a14 a24 + a24^2-free cross terms)/... for these
  // amplitudes y = sqrt(2)/2, so rho23 = y/5 = sqrt(2)/10.
  CHECK(rho(1, 2).real() == doctest::Approx(std::sqrt(2.0) / 10.0).epsilon(1e-12));
  CHECK(std::abs(report.y - Complex(kInvSqrt2)) <= 1e-12);
  CHECK(report.shiftComponents.size() == 5);
  // The average of the shift components is the reported rho.
  Eigen::Matrix4cd mean = Eigen::Matrix4cd::Zero();
  for (const TwoQubitState& component : report.shiftComponents) mean += component.rho();
  CHECK(((mean / 5.0) - rho).cwiseAbs().maxCoeff() <= 1e-12);
  // Concurrence per the shortcut: (2/n)|y| = sqrt(2)/5.
  CHECK(specialFormConcurrence(report.rho) ==
        doctest::Approx(std::sqrt(2.0) / 5.0).epsilon(1e-12));
}

TEST_CASE("pairDensityMatrix matches the template for random strict states") {
  auto rng = test::makeRng(17);
  for (int n = 2; n <= 10; ++n) {
    for (int p = 0; 2 * p <= n; ++p) {
      BlockState state = test::randomStrictBlockState(rng, n, p);
      PairDensityReport report = pairDensityMatrix(state);
      const Eigen::Matrix4cd& rho = report.rho.rho();
      CHECK(std::abs(rho(0, 0).real() - double(n - 2 * p) / n) <= 1e-10);
      CHECK(std::abs(rho(1, 1).real() - double(p) / n) <= 1e-10);
      CHECK(std::abs(rho(2, 2).real() - double(p) / n) <= 1e-10);
      CHECK(std::abs(rho(3, 3)) <= 1e-10);  // conditions force rho44 = 0
      // Dual route: enumeration rho23 vs the closed-form adjacent sum.
      Complex y = computeY(state);
      CHECK(std::abs(report.y - y) <= 1e-10);
      CHECK(std::abs(rho(1, 2) - y / double(n)) <= 1e-10);
      // And the shortcut concurrence is (2/n)|y|.
      CHECK(std::abs(specialFormConcurrence(report.rho) - 2.0 * std::abs(y) / n) <= 1e-10);
    }
  }
}

TEST_CASE("pairDensityMatrix on the relaxed singlet block") {
  BlockState singlet = BlockState::build(
      2, 1, {{{1}, kInvSqrt2}, {{2}, -kInvSqrt2}}, ConstraintMode::Relaxed);
  PairDensityReport report = pairDensityMatrix(singlet);
  const Eigen::Matrix4cd& rho = report.rho.rho();
  CHECK(rho(0, 0).real() == doctest::Approx(0.125));
  CHECK(rho(1, 1).real() == doctest::Approx(0.375));
  CHECK(rho(2, 2).real() == doctest::Approx(0.375));
  CHECK(rho(3, 3).real() == doctest::Approx(0.125));
  CHECK(rho(1, 2).real() == doctest::Approx(-0.25));
  CHECK(concurrence(report.rho).concurrence == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("pairDensityMatrix enumeration cap") {
  CoefficientMap single{{{1, 3}, 1.0}};
  BlockState state = BlockState::build(13, 2, single);
  CHECK_THROWS_AS(pairDensityMatrix(state), TooLarge);
}

TEST_CASE("computeY") {
  SUBCASE("single-particle block, n = 4") {
    // Tuples (1), (2), (3); adjacent pairs (1)->(2) and (2)->(3), so
    // y = conj(a1) a2 + conj(a2) a3.
    Complex a1(0.5, 0.1), a2(0.3, -0.4), a3 = [&] {
      double rest = 1.0 - std::norm(Complex(0.5, 0.1)) - std::norm(Complex(0.3, -0.4));
      return Complex(std::sqrt(rest), 0.0);
    }();
    BlockState state = BlockState::build(4, 1, {{{1}, a1}, {{2}, a2}, {{3}, a3}});
    Complex expected = std::conj(a1) * a2 + std::conj(a2) * a3;
    CHECK(std::abs(computeY(state) - expected) <= 1e-12);
  }
  SUBCASE("worked (5, 2) example gives y = 1/sqrt(2)") {
    CHECK(std::abs(computeY(optimalFiveTwo()) - Complex(kInvSqrt2)) <= 1e-12);
  }
  SUBCASE("vacuum and lone-tuple blocks give y = 0") {
    CHECK(std::abs(computeY(BlockState::build(3, 0, {{SiteTuple{}, 1.0}}))) == 0.0);
    CHECK(std::abs(computeY(BlockState::build(4, 2, {{{1, 3}, 1.0}}))) == 0.0);
  }
  SUBCASE("rejects relaxed-mode states") {
    BlockState singlet = BlockState::build(
        2, 1, {{{1}, kInvSqrt2}, {{2}, -kInvSqrt2}}, ConstraintMode::Relaxed);
    CHECK_THROWS_AS(computeY(singlet), RelaxedModeUnsupported);
  }
}

TEST_CASE("non-negative coefficients maximize |y| over phases") {
  auto rng = test::makeRng(23);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  for (auto [n, p] : {std::pair{5, 2}, {7, 3}, {8, 2}, {9, 4}}) {
    // Fixed modulus pattern (from a random state), phases zeroed.
    BlockState base = test::randomStrictBlockState(rng, n, p);
    CoefficientMap flat;
    for (const auto& [tuple, a] : base.coefficients()) flat[tuple] = std::abs(a);
    double best = std::abs(computeY(BlockState::build(n, p, flat)));
    for (int round = 0; round < 25; ++round) {
      CoefficientMap perturbed;
      for (const auto& [tuple, a] : flat)
        perturbed[tuple] = a * std::polar(1.0, angle(rng));
      double value = std::abs(computeY(BlockState::build(n, p, perturbed)));
      CHECK(value <= best + 1e-12);
    }
  }
}
