#pragma once

// Intersection theory of P(L + O) -> Sigma_g blown up at m distinct points
// of the zero section. Homology coordinates are always taken in the ordered
// basis (C_inf, F, E_1, ..., E_m).

#include "sfk/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sfk::lattice {

class RuledSurfaceModel {
 public:
  /// Throws Error(InvalidArgument) unless genus >= 2 and blowups >= 0.
  RuledSurfaceModel(int genus, int bundleDegree, int blowupCount);

  int genus() const { return genus_; }
  int bundleDegree() const { return degree_; }
  int blowupCount() const { return blowups_; }
  /// Length of a homology coordinate vector, m + 2.
  int rank() const { return blowups_ + 2; }

  int signature() const { return -blowups_; }
  int eulerChar() const { return 4 - 4 * genus_ + blowups_; }
  int c1Square() const { return 8 * (1 - genus_) - blowups_; }

  bool operator==(const RuledSurfaceModel&) const = default;

 private:
  int genus_;
  int degree_;
  int blowups_;
};

struct HomologyClass {
  std::vector<Rational> coords;

  static HomologyClass basis(const RuledSurfaceModel& model, int index);
  static HomologyClass infinitySection(const RuledSurfaceModel& model);
  static HomologyClass fiber(const RuledSurfaceModel& model);
  static HomologyClass exceptional(const RuledSurfaceModel& model, int j);
  /// Proper transform of the zero section: C_inf + k F - sum E_j.
  static HomologyClass zeroSection(const RuledSurfaceModel& model);

  HomologyClass operator+(const HomologyClass& other) const;
  HomologyClass operator-(const HomologyClass& other) const;
  HomologyClass operator*(const Rational& scale) const;
};

/// Kahler class (A, B, w): A = area of F, A*B = area of C_inf, w_j = area(E_j) / A.
class KahlerClassParam {
 public:
  /// Throws Error(InvalidArgument) unless A > 0 and every 0 < w_j < 1.
  KahlerClassParam(Rational fiberArea, Rational b, std::vector<Rational> weights);

  /// Class with B fixed by c1 . [omega] = 0.
  static KahlerClassParam admissible(const RuledSurfaceModel& model, Rational fiberArea,
                                     std::vector<Rational> weights);

  const Rational& fiberArea() const { return fiberArea_; }
  const Rational& b() const { return b_; }
  const std::vector<Rational>& weights() const { return weights_; }
  Rational weightSum() const { return sum(weights_); }

  /// A (1, B + k, -w_1, ..., -w_m). Throws DimensionMismatch if m != weights.size().
  HomologyClass poincareDual(const RuledSurfaceModel& model) const;

  KahlerClassParam scaled(const Rational& lambda) const;

 private:
  Rational fiberArea_;
  Rational b_;
  std::vector<Rational> weights_;
};

/// Q = diag([[-k, 1], [1, 0]], -1, ..., -1).
std::vector<std::vector<Rational>> intersectionMatrix(const RuledSurfaceModel& model);

/// u^T Q v. Throws DimensionMismatch naming the offending vector.
Rational intersectionPairing(const HomologyClass& u, const HomologyClass& v,
                             const RuledSurfaceModel& model);

/// Area of a curve class: [omega] . C.
Rational integrate(const KahlerClassParam& cls, const HomologyClass& curve,
                   const RuledSurfaceModel& model);

struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};

/// Sylvester inertia of a symmetric rational matrix by exact congruence.
Inertia inertia(std::vector<std::vector<Rational>> matrix);

/// Row vector of c1 in the basis (2(1-g) - k, 2, 1, ..., 1), so that
/// c1 . [omega] = c1Row . PD(omega).
HomologyClass c1Row(const RuledSurfaceModel& model);

Rational dot(const HomologyClass& a, const HomologyClass& b);

/// [-k + 2(g-1) + sum w] / 2. Throws DimensionMismatch on weight count.
Rational admissibleB(const RuledSurfaceModel& model, const std::vector<Rational>& weights);

struct CurvePairing {
  std::string curve;
  Rational area;
};

struct AdmissibilityReport {
  bool admissible = false;
  bool chernOrthogonal = false;    // (i)   c1 . [omega] = 0
  bool positiveFiberArea = false;  // (ii)  A > 0
  bool positiveSquare = false;     // (iii) [omega]^2 > 0
  bool positiveOnCurves = false;   // (iv)  [omega] . C > 0 on the test curves
  Rational c1DotOmega;
  Rational omegaSquared;
  std::vector<CurvePairing> pairings;
  /// "(i)", "(ii)", "(iii)" or "(iv) <curve>" for the first failed condition.
  std::optional<std::string> failedCondition;
};

AdmissibilityReport isAdmissible(const RuledSurfaceModel& model, const KahlerClassParam& cls);

/// coeff * pi^power.
struct PiMultiple {
  Rational coeff;
  int power = 1;
};

/// Integral of s dvol = 4 pi c1 . [omega].
PiMultiple totalScalarCurvature(const RuledSurfaceModel& model, const KahlerClassParam& cls);

struct CurvatureBounds {
  PiMultiple riemannBound;  // -8 pi^2 (3 tau + chi)
  PiMultiple weylBound;     // -12 pi^2 tau
};

CurvatureBounds curvatureFunctionalBounds(const RuledSurfaceModel& model);

/// A point of Sigma x CP1: base point label plus homogeneous fiber coordinate.
struct FiberPoint {
  std::string basePoint;
  Rational zeta1;
  Rational zeta2;
};

/// Limit t -> 0 of [zeta1 : zeta2] -> [t zeta1 : zeta2]. Points over [1:0] stay,
/// all others go to [0:1]. Throws Precondition if the fiber coordinates do not
/// contain [1:0] or take only one value.
std::vector<FiberPoint> degenerateConfiguration(const std::vector<FiberPoint>& points);

}  // namespace sfk::lattice
