#include "sfk/error.hpp"
#include "sfk/parabolic.hpp"

#include <doctest.h>

#include <random>

using namespace sfk;
using namespace sfk::parabolic;

namespace {

Rational q(long n, long d = 1) { return makeRational(n, d); }

ParabolicBundle reference(Rational beta) {
  return ParabolicBundle(1, {{1, q(0), beta}, {2, q(0), beta}});
}

}  // namespace

TEST_CASE("parabolic degrees of candidate subbundles") {
  const auto V = reference(q(1, 2));
  CHECK(parabolicDegreeLine(V, LineSubbundle::summandL()) == 1);
  CHECK(parabolicDegreeLine(V, LineSubbundle::summandO(V)) == 1);
  const auto t = LineSubbundle::twistedO({0});
  CHECK(t.degree(V) == -1);
  CHECK(parabolicDegreeLine(V, t) == q(-1, 2));
  CHECK(parabolicDegreeTotal(V) == 2);
  CHECK(V.weightSum() == 1);
}

TEST_CASE("quasi-stability verdicts") {
  const auto stable = isQuasiStable(reference(q(1, 2)));
  CHECK(stable.quasiStable);
  CHECK(stable.halfTotal == 1);
  const auto unstable = isQuasiStable(reference(q(1, 4)));
  CHECK_FALSE(unstable.quasiStable);
  REQUIRE(unstable.witness);
  CHECK((unstable.witness->kind == LineSubbundle::Kind::SummandL));
  CHECK(unstable.witnessDegree == 1);
  CHECK(unstable.halfTotal == q(3, 4));
  // too much weight: the O summand destabilizes
  const auto heavy = isQuasiStable(ParabolicBundle::fromWeights(1, {q(3, 4), q(3, 4)}));
  CHECK_FALSE(heavy.quasiStable);
  REQUIRE(heavy.witness);
  CHECK((heavy.witness->kind == LineSubbundle::Kind::SummandO));
}

TEST_CASE("bundle validation") {
  CHECK_THROWS_AS(ParabolicBundle(1, {{1, q(1, 2), q(1, 4)}}), Error);
  CHECK_THROWS_AS(ParabolicBundle(1, {{1, q(0), q(1)}}), Error);
  CHECK_THROWS_AS(ParabolicBundle(1, {{1, q(0), q(1, 2)}, {1, q(0), q(1, 2)}}), Error);
  CHECK_THROWS_AS(ParabolicBundle::fromWeights(1, {q(1, 2)}, {q(0), q(0)}), Error);
  const auto V = reference(q(1, 2));
  CHECK_THROWS_AS(validate(V, LineSubbundle::twistedO({5})), Error);
  CHECK_THROWS_AS(validate(V, LineSubbundle::twistedO({0}, 1)), Error);
  CHECK_NOTHROW(validate(V, LineSubbundle::subsheafOfL(0)));
}

TEST_CASE("agreement with the Futaki criterion") {
  const lattice::RuledSurfaceModel m(2, 1, 2);
  const auto good = stabilityEqualsFutakiZero(m, lattice::KahlerClassParam::admissible(m, q(1), {q(1, 2), q(1, 2)}), {});
  CHECK(good.quasiStable);
  CHECK(good.futakiZero);
  const auto bad = stabilityEqualsFutakiZero(m, lattice::KahlerClassParam::admissible(m, q(1), {q(1, 4), q(1, 4)}), {});
  CHECK_FALSE(bad.quasiStable);
  CHECK_FALSE(bad.futakiZero);
}

TEST_CASE("candidate family matches exhaustive enumeration") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const int k = -2 + static_cast<int>(rng() % 8), mm = static_cast<int>(rng() % 9);
    std::vector<Rational> w, alpha;
    for (int j = 0; j < mm; ++j) w.push_back(makeRational(1 + static_cast<long>(rng() % 23), 24));
    if (trial % 2 == 0 && k > 0 && k < mm) w.assign(static_cast<size_t>(mm), makeRational(k, mm));
    for (const auto& x : w) alpha.push_back((1 - x) * makeRational(static_cast<long>(rng() % 8), 8));
    const auto V = ParabolicBundle::fromWeights(k, w, alpha);
    const auto fast = isQuasiStable(V), slow = isQuasiStableExhaustive(V);
    CAPTURE(trial);
    CHECK(fast.quasiStable == slow.quasiStable);
    CHECK(fast.quasiStable == (sum(w) == k));
  }
}

TEST_CASE("verdict does not depend on alpha") {
  std::mt19937 rng(9);
  const std::vector<Rational> w{q(1, 3), q(1, 3), q(1, 3), q(1, 2), q(1, 2)};
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Rational> alpha;
    for (size_t j = 0; j < w.size(); ++j) alpha.push_back(makeRational(static_cast<long>(rng() % 16), 32));
    CHECK(isQuasiStable(ParabolicBundle::fromWeights(2, w, alpha)).quasiStable);
    CHECK_FALSE(isQuasiStable(ParabolicBundle::fromWeights(3, w, alpha)).quasiStable);
  }
}
