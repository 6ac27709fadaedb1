#include "sfk/asdcalc.hpp"
#include "sfk/error.hpp"

#include <doctest.h>

#include <cmath>

using namespace sfk;
using namespace sfk::asdcalc;

TEST_CASE("component bookkeeping") {
  CHECK(componentCount(0) == 1);
  CHECK(componentCount(1) == 4);
  CHECK(componentCount(2) == 6);
  CHECK(componentCount(4) == 1);
  CHECK(componentMask(2, 0) == 0b0011u);
  CHECK(componentMask(2, 5) == 0b1100u);
  const FourierForm f(1, 2);
  CHECK(f.modeCount() == 625);
  CHECK(f.modeIndex(f.mode(17)) == 17);
  CHECK(f.modeIndex({3, 0, 0, 0}) == -1);
}

TEST_CASE("d squares to zero and star squares to the sign") {
  std::mt19937_64 rng(3);
  for (int p = 0; p <= 2; ++p) {
    const auto f = FourierForm::random(p, 2, rng);
    CHECK(exteriorD(exteriorD(f)).maxAbs() < 1e-12);
  }
  for (int p = 0; p <= 4; ++p) {
    const auto f = FourierForm::random(p, 1, rng);
    const double sign = (p * (4 - p)) % 2 == 0 ? 1.0 : -1.0;
    CHECK((hodgeStar(hodgeStar(f)) - f * sign).maxAbs() < 1e-14);
  }
  CHECK_THROWS_AS(exteriorD(FourierForm(4, 1)), Error);
  CHECK_THROWS_AS(codifferential(FourierForm(0, 1)), Error);
}

TEST_CASE("codifferential is the adjoint of d") {
  std::mt19937_64 rng(5);
  for (int p = 0; p <= 3; ++p) {
    const auto f = FourierForm::random(p, 2, rng), g = FourierForm::random(p + 1, 2, rng);
    const double scale = std::sqrt(std::abs(inner(exteriorD(f), exteriorD(f))) * std::abs(inner(g, g))) + 1e-300;
    CHECK(std::abs(inner(exteriorD(f), g) - inner(f, codifferential(g))) / scale < 1e-13);
  }
}

TEST_CASE("self-dual splitting") {
  std::mt19937_64 rng(6);
  const auto f = FourierForm::random(2, 1, rng, true);
  CHECK(f.isReal());
  const auto s = sdProject(f);
  CHECK((hodgeStar(s.plus) - s.plus).maxAbs() < 1e-14);
  CHECK((hodgeStar(s.minus) + s.minus).maxAbs() < 1e-14);
  CHECK((s.plus + s.minus - f).maxAbs() < 1e-14);
  CHECK(std::abs(inner(s.plus, s.minus)) < 1e-13);
  for (const auto& e : selfDualBasis()) {
    double n = 0;
    for (double x : e) n += x * x;
    CHECK(n == doctest::Approx(1.0));
  }
  CHECK_THROWS_AS(sdProject(FourierForm(1, 1)), Error);
}

TEST_CASE("index of S at small truncations") {
  for (int N = 1; N <= 3; ++N) {
    CAPTURE(N);
    const auto S = operatorS(N), Sa = operatorSAdjoint(N);
    CHECK(S.kernelDimension() == 3);
    CHECK(S.cokernelDimension() == 3);
    CHECK(S.kernelDimension() - S.cokernelDimension() == 0);
    CHECK(Sa.kernelDimension() == 3);
    CHECK(adjointResidual(S, Sa) < 1e-12);
  }
  CHECK_THROWS_AS(operatorS(0), Error);
  CHECK(globalVersusBlockSingularValues(operatorS(1)) < 1e-12);
}

TEST_CASE("curvature hooks move the spectrum") {
  CurvatureHooks hooks;
  hooks.phi = 1e-3 * Eigen::Matrix3d::Identity();  // lifts only the constant kernel
  const auto S = operatorS(1, hooks);
  CHECK(S.kernelDimension() == 0);
  CHECK(adjointResidual(S, operatorSAdjoint(1, hooks)) < 1e-12);
}

TEST_CASE("matrix and form versions of S agree") {
  std::mt19937_64 rng(8);
  const auto a = FourierForm::random(2, 2, rng);
  const auto Sa = applyS(a);
  CHECK((hodgeStar(Sa) - Sa).maxAbs() < 1e-12);
  const auto p = sdProject(FourierForm::random(2, 2, rng)).plus;
  const double lhs = std::abs(inner(Sa, p) - inner(sdProject(a).minus, applySAdjoint(p)));
  CHECK(lhs < 1e-10);
}

TEST_CASE("closed one-forms and the d+ kernel") {
  for (int N = 1; N <= 2; ++N) {
    const auto c = dPlusKernelEqualsClosed(N);
    CHECK(c.equal);
    CHECK(c.dimFirst == c.dimSecond);
  }
  CHECK(dPlusKernelEqualsClosed(1).dimFirst == 84);
}

TEST_CASE("kernel correspondence and bi-Laplacian kernel") {
  const auto k = kernelCorrespondence(2);
  CHECK(k.kernelSPrime == 3);
  CHECK(k.kernelS == 3);
  CHECK(k.injective);
  CHECK(lichnerowiczKernel(2) == 0);
  CHECK(lichnerowiczKernel(2, true) == 1);
}

TEST_CASE("full report") {
  const auto r = asdIndex(2, 4);
  CHECK(r.kernel == 3);
  CHECK(r.cokernel == 3);
  CHECK(r.index == 0);
  CHECK(r.adjointPairingResidual < 1e-12);
  CHECK(r.codifferentialPairingResidual < 1e-12);
  CHECK(r.smallestNonzeroSingularValue == doctest::Approx(0.5));
}
