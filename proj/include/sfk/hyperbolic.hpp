#pragma once

// Hyperbolic 3-space as the upper half-space {(X, U, Z) : Z > 0} with metric
// (dX^2 + dU^2 + dZ^2) / Z^2. The hyperbolic plane is the totally geodesic
// slice U = 0 with z = X + iZ, and a point at signed distance s from that
// slice has t = tanh(s).

#include <cmath>
#include <complex>
#include <string>
#include <vector>

namespace sfk::hyperbolic {

using Complex = std::complex<double>;

struct HalfSpacePoint {
  double x = 0.0;
  double u = 0.0;
  double z = 1.0;
};

/// Chart coordinates on H^2 x (-1, 1): z = x + iy in the upper half-plane.
struct ChartPoint {
  double x = 0.0;
  double y = 1.0;
  double t = 0.0;
};

/// Element of SL(2, R).
struct Mobius {
  double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

  static Mobius identity() { return {}; }

  Mobius operator*(const Mobius& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  Mobius inverse() const { return {d, -b, -c, a}; }
  double trace() const { return a + d; }
  double determinant() const { return a * d - b * c; }

  Complex apply(Complex z) const { return (a * z + b) / (c * z + d); }
  /// Poincare extension to the upper half-space.
  HalfSpacePoint apply(const HalfSpacePoint& p) const;

  /// Entrywise distance to o or -o, whichever is smaller.
  double projectiveDistance(const Mobius& o) const;
};

/// (x, y, t) -> (x, y t, y sqrt(1 - t^2)). Throws InvalidArgument unless y > 0 and |t| < 1.
HalfSpacePoint h2ToH3(double x, double y, double t);
inline HalfSpacePoint h2ToH3(const ChartPoint& p) { return h2ToH3(p.x, p.y, p.t); }

/// |p - q|^2 / (2 Z_p Z_q) = cosh d - 1, computed without cancellation.
double h3CoshDistanceMinusOne(const HalfSpacePoint& p, const HalfSpacePoint& q);
double h3Distance(const HalfSpacePoint& p, const HalfSpacePoint& q);

/// Radial solution of Delta G = 2 pi delta (positive Laplacian) decaying at
/// infinity: G(r) = (coth r - 1) / 2. Throws InvalidArgument for r <= 0.
double h3Green(double r);

/// h3Green as a function of delta = cosh r - 1, without transcendental calls.
inline double greenFromCoshMinusOne(double delta) {
  const double s = std::sqrt(delta * (delta + 2.0));  // sinh r
  return 0.5 / (s * (s + delta + 1.0));
}

/// dG/d(cosh r) = -(1/2) (cosh^2 r - 1)^(-3/2).
inline double greenDerivativeInCosh(double delta) {
  const double s2 = delta * (delta + 2.0);
  return -0.5 / (s2 * std::sqrt(s2));
}

/// Hyperbolic distance on the upper half-plane.
double h2Distance(Complex z, Complex w);

class FuchsianGroup {
 public:
  /// Throws InvalidArgument unless there are 2g >= 4 generators, each of
  /// determinant 1 and |trace| > 2.
  explicit FuchsianGroup(std::vector<Mobius> generators);

  /// One generator per line, four whitespace separated reals a b c d.
  /// Lines starting with '#' are comments. Validates the surface relation.
  static FuchsianGroup load(const std::string& path);
  /// Regular octagon side pairings computed in closed form.
  static FuchsianGroup regularOctagon();

  const std::vector<Mobius>& generators() const { return generators_; }
  int genus() const { return static_cast<int>(generators_.size()) / 2; }

  /// Entrywise distance of [a1,b1]...[ag,bg] to +-identity.
  double relationResidual() const;

 private:
  std::vector<Mobius> generators_;
};

struct GroupBall {
  std::vector<Mobius> elements;
  std::vector<int> wordLength;

  size_t size() const { return elements.size(); }
};

/// Reduced words of length <= maxWordLength, deduplicated up to sign within
/// 1e-9 (relative to the entry size). Element 0 is the identity.
GroupBall groupBall(const FuchsianGroup& group, int maxWordLength);

/// Dirichlet fundamental domain {z : d(z, c) <= d(z, g c)} for g in a finite
/// ball, described in geodesic polar coordinates about the center c.
class DirichletDomain {
 public:
  DirichletDomain(const FuchsianGroup& group, Complex center = {0.0, 1.0}, int constraintWordLength = 2);

  Complex center() const { return center_; }
  bool contains(Complex z, double slack = 1e-12) const;
  /// Hyperbolic distance from the center to the boundary along direction phi.
  double boundaryRadius(double phi) const;
  /// Angles in [0, 2 pi) where the active side changes (polygon vertices).
  const std::vector<double>& vertexAngles() const { return vertexAngles_; }
  double area() const;

  /// Point at hyperbolic distance rho in direction phi from the center.
  Complex pointAt(double rho, double phi) const;

 private:
  struct Side {
    double rhoQ;  // distance from center to g(center)
    double phiQ;  // direction of g(center)
  };
  int activeSide(double phi) const;
  double sideRadius(const Side& s, double phi) const;

  Complex center_;
  std::vector<Side> sides_;
  std::vector<Mobius> constraints_;
  std::vector<double> vertexAngles_;
};

/// Gauss-Legendre nodes and weights on [-1, 1].
void gaussLegendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace sfk::hyperbolic
