#include "sfk/error.hpp"
#include "sfk/futaki.hpp"

#include <doctest.h>

#include <random>
#include <string>

using namespace sfk;
using namespace sfk::futaki;
using lattice::isAdmissible;

namespace {

Rational q(long n, long d = 1) { return makeRational(n, d); }

// rows k = -3..6, columns m = 0..8, from a witness search over exact classes
const char* const kExistenceTable[] = {
    "000000000", "000000000", "000000000", "100000000", "001111111",
    "000111111", "000011111", "000001111", "000000111", "000000011",
};

}  // namespace

TEST_CASE("reference Futaki values") {
  const RuledSurfaceModel m(2, 1, 2);
  const auto zero = KahlerClassParam::admissible(m, q(1), {q(1, 2), q(1, 2)});
  CHECK(futakiViaWeights(m, zero) == 0);
  CHECK(futakiViaBoundary(m, zero) == 0);
  const auto quarter = KahlerClassParam::admissible(m, q(1), {q(1, 4), q(1, 4)});
  CHECK(futakiViaWeights(m, quarter) == q(-1, 4));
  CHECK(futakiViaBoundary(m, quarter) == q(-1, 4));
  CHECK(integrate(quarter, lattice::HomologyClass::infinitySection(m), m) == q(3, 4));
  CHECK(integrate(quarter, lattice::HomologyClass::zeroSection(m), m) == q(5, 4));
  const auto r = evaluate(m, quarter);
  CHECK(r.value == q(-1, 4));
}

TEST_CASE("Futaki needs c1 orthogonality") {
  const RuledSurfaceModel m(2, 1, 2);
  const KahlerClassParam off(q(1), q(3), {q(1, 2), q(1, 2)});
  try {
    futakiViaWeights(m, off);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Precondition);
  }
  CHECK_THROWS_AS(futakiViaBoundary(m, off), Error);
}

TEST_CASE("existence truth table") {
  for (int k = -3; k <= 6; ++k)
    for (int mm = 0; mm <= 8; ++mm) {
      CAPTURE(k);
      CAPTURE(mm);
      const bool expected = kExistenceTable[k + 3][mm] == '1';
      CHECK((existenceClassification(RuledSurfaceModel(2, k, mm)) == Existence::AdmissibleFutakiZeroExists) ==
            expected);
    }
  CHECK(std::string(toString(Existence::NoneExists)) == "NoneExists");
}

TEST_CASE("restricted gradient") {
  const RuledSurfaceModel m(2, 1, 2);
  const auto cls = KahlerClassParam::admissible(m, q(1), {q(1, 2), q(1, 2)});
  CHECK(restrictedFutakiGradient(m, cls) == std::vector<Rational>{q(0), q(1, 2), q(1, 2)});
  const auto quarter = KahlerClassParam::admissible(m, q(1), {q(1, 4), q(1, 4)});
  CHECK_THROWS_AS(restrictedFutakiGradient(m, quarter), Error);
}

TEST_CASE("scalar-flat existence verdict") {
  const RuledSurfaceModel m(2, 1, 2);
  CHECK(matsushimaLichnerowiczVanishes(m));
  CHECK(scalarFlatExistence(m, KahlerClassParam::admissible(m, q(1), {q(1, 2), q(1, 2)})));
  CHECK_FALSE(scalarFlatExistence(m, KahlerClassParam::admissible(m, q(1), {q(1, 4), q(1, 4)})));
  CHECK_FALSE(scalarFlatExistence(m, KahlerClassParam(q(1), q(5), {q(1, 2), q(1, 2)})));
}

TEST_CASE("random admissible classes: both formulas agree and the zero locus is sum w = k") {
  std::mt19937 rng(11);
  auto frac = [&] { return makeRational(1 + static_cast<long>(rng() % 31), 32); };
  int admissibleCount = 0, zeros = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int g = 2 + static_cast<int>(rng() % 4), k = -3 + static_cast<int>(rng() % 10),
              mm = static_cast<int>(rng() % 9);
    const RuledSurfaceModel m(g, k, mm);
    std::vector<Rational> w;
    for (int j = 0; j < mm; ++j) w.push_back(frac());
    if (trial % 3 == 0 && mm > 0 && k > 0 && k < mm) {
      // force sum w = k by a uniform split
      w.assign(static_cast<size_t>(mm), makeRational(k, mm));
    }
    const auto cls = KahlerClassParam::admissible(m, makeRational(1 + static_cast<long>(rng() % 7), 3), w);
    if (isAdmissible(m, cls).admissible) ++admissibleCount;
    const Rational a = futakiViaWeights(m, cls), b = futakiViaBoundary(m, cls);
    CHECK(a == b);
    CHECK((a == 0) == (cls.weightSum() == k));
    if (a == 0) ++zeros;
  }
  CHECK(admissibleCount > 50);
  CHECK(zeros > 10);
}
