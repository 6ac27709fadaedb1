#include "sfk/error.hpp"
#include "sfk/hyperbolic.hpp"

#include <doctest.h>

#include <array>
#include <cmath>
#include <fstream>

using namespace sfk;
using namespace sfk::hyperbolic;

namespace {

FuchsianGroup dataGroup() { return FuchsianGroup::load(std::string(SFK_DATA_DIR) + "/genus2_octagon.txt"); }

}  // namespace

TEST_CASE("chart map") {
  const auto p = h2ToH3(0.0, 1.0, 0.6);
  CHECK(p.x == doctest::Approx(0.0));
  CHECK(p.u == doctest::Approx(0.6).epsilon(1e-15));
  CHECK(p.z == doctest::Approx(0.8).epsilon(1e-15));
  CHECK_THROWS_AS(h2ToH3(0.0, -1.0, 0.0), Error);
  CHECK_THROWS_AS(h2ToH3(0.0, 1.0, 1.0), Error);
}

TEST_CASE("pulled back metric is conformal to the product metric") {
  // (dx^2 + dy^2 + y^2 dt^2 / (1 - t^2)) / (y^2 (1 - t^2))
  const double x = 0.2, y = 1.3, t = 0.35, h = 1e-6;
  auto col = [&](int j) {
    double a[3] = {x, y, t}, b[3] = {x, y, t};
    a[j] += h;
    b[j] -= h;
    const auto pa = h2ToH3(a[0], a[1], a[2]), pb = h2ToH3(b[0], b[1], b[2]);
    return std::array<double, 3>{(pa.x - pb.x) / (2 * h), (pa.u - pb.u) / (2 * h), (pa.z - pb.z) / (2 * h)};
  };
  const auto z = h2ToH3(x, y, t).z;
  const std::array<std::array<double, 3>, 3> J{col(0), col(1), col(2)};
  const double c = 1.0 / (y * y * (1 - t * t));
  const double expect[3] = {c, c, c * y * y / (1 - t * t)};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double g = 0;
      for (int r = 0; r < 3; ++r) g += J[static_cast<size_t>(i)][static_cast<size_t>(r)] * J[static_cast<size_t>(j)][static_cast<size_t>(r)];
      g /= z * z;
      CHECK(g == doctest::Approx(i == j ? expect[i] : 0.0).epsilon(1e-8).scale(1.0));
    }
}

TEST_CASE("distances and the Green function") {
  const HalfSpacePoint a{0, 0, 1}, b{0, 0, std::exp(1.0)};
  CHECK(h3Distance(a, b) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(h3CoshDistanceMinusOne(a, b) == doctest::Approx(std::cosh(1.0) - 1).epsilon(1e-14));
  CHECK(h3Green(1.0) == doctest::Approx(0.156517642749666).epsilon(1e-13));
  CHECK(greenFromCoshMinusOne(std::cosh(1.0) - 1) == doctest::Approx(h3Green(1.0)).epsilon(1e-14));
  // small distances: G ~ 1/(2r)
  CHECK(h3Green(1e-6) * 2e-6 == doctest::Approx(1.0).epsilon(1e-5));
  // derivative in cosh r against a difference quotient
  const double d = 0.7, e = 1e-6;
  CHECK(greenDerivativeInCosh(d) ==
        doctest::Approx((greenFromCoshMinusOne(d + e) - greenFromCoshMinusOne(d - e)) / (2 * e)).epsilon(1e-7));
  CHECK_THROWS_AS(h3Green(0.0), Error);
  CHECK(h2Distance({0, 1}, {0, std::exp(2.0)}) == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("Mobius extension preserves distances") {
  const Mobius g{2.0, 1.0, 3.0, 2.0};
  const HalfSpacePoint p{0.1, 0.2, 0.7}, q{-0.4, 0.5, 1.9};
  CHECK(h3Distance(g.apply(p), g.apply(q)) == doctest::Approx(h3Distance(p, q)).epsilon(1e-12));
  const Complex z{0.3, 0.8};
  const auto img = g.apply(HalfSpacePoint{z.real(), z.imag(), 0.0});
  CHECK(img.x == doctest::Approx(g.apply(z).real()));
  CHECK(img.u == doctest::Approx(g.apply(z).imag()));
}

TEST_CASE("genus two group") {
  const auto G = dataGroup();
  CHECK(G.genus() == 2);
  CHECK(G.relationResidual() < 1e-10);
  for (const auto& g : G.generators()) {
    CHECK(g.determinant() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(g.trace()) > 2.0);
  }
  const auto builtin = FuchsianGroup::regularOctagon();
  CHECK(builtin.relationResidual() < 1e-10);
  REQUIRE(builtin.generators().size() == G.generators().size());
  for (size_t i = 0; i < G.generators().size(); ++i)
    CHECK(builtin.generators()[i].projectiveDistance(G.generators()[i]) < 1e-9);
}

TEST_CASE("group ball sizes") {
  const auto G = FuchsianGroup::regularOctagon();
  const size_t expected[] = {1, 9, 65, 457, 3193};
  for (int L = 0; L <= 4; ++L) CHECK(groupBall(G, L).size() == expected[L]);
  const auto ball = groupBall(G, 2);
  CHECK(ball.wordLength[0] == 0);
  CHECK(ball.elements[0].projectiveDistance(Mobius::identity()) == 0.0);
}

TEST_CASE("invalid groups are rejected") {
  CHECK_THROWS_AS(FuchsianGroup({Mobius{2, 0, 0, 0.5}}), Error);
  CHECK_THROWS_AS(FuchsianGroup({Mobius{1, 1, 0, 1}, Mobius{1, 0, 1, 1}, Mobius{2, 0, 0, 0.5}, Mobius{2, 0, 0, 0.5}}),
                  Error);
  const std::string path = "bad_group.txt";
  {
    std::ofstream out(path);
    out << "# not a surface group\n2 0 0 0.5\n3 0 0 0.3333333333333333\n2 1 1 1\n1 1 1 2\n";
  }
  CHECK_THROWS_AS(FuchsianGroup::load(path), Error);
  CHECK_THROWS_AS(FuchsianGroup::load("missing_group_file.txt"), Error);
}

TEST_CASE("Dirichlet domain of the octagon group") {
  const DirichletDomain D(FuchsianGroup::regularOctagon());
  REQUIRE(D.vertexAngles().size() == 8);
  for (size_t i = 0; i < 8; ++i) {
    const double expected = M_PI / 4 * static_cast<double>(i);
    double diff = std::remainder(D.vertexAngles()[i] - expected, M_PI / 4);
    CHECK(std::abs(diff) < 1e-8);
  }
  CHECK(D.area() == doctest::Approx(4 * M_PI).epsilon(1e-12));
  CHECK(D.contains({0, 1}));
  CHECK_FALSE(D.contains(D.pointAt(D.boundaryRadius(0.3) + 0.05, 0.3)));
  CHECK(D.contains(D.pointAt(D.boundaryRadius(0.3) - 0.05, 0.3)));
  CHECK(h2Distance({0, 1}, D.pointAt(1.5, 2.0)) == doctest::Approx(1.5).epsilon(1e-12));
}

TEST_CASE("Gauss-Legendre") {
  std::vector<double> x, w;
  gaussLegendre(8, x, w);
  double s = 0, p = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    s += w[i];
    p += w[i] * std::pow(x[i], 14);
  }
  CHECK(s == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(p == doctest::Approx(2.0 / 15).epsilon(1e-13));
}
