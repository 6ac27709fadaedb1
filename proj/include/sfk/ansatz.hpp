#pragma once

// Scalar-flat Kahler ansatz on Sigma x (-1, 1) built from a Green's function
// sum V = 1 + sum_j G_j on the hyperbolic 3-manifold, with
// v = (1 - t^2) / y^2 and w = V / (1 - t^2).

#include "sfk/hyperbolic.hpp"
#include "sfk/lattice.hpp"
#include "sfk/rational.hpp"

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace sfk::ansatz {

using hyperbolic::Complex;
using hyperbolic::FuchsianGroup;
using hyperbolic::HalfSpacePoint;

struct ChargePoint {
  Complex z{0.0, 1.0};
  Rational t;  // exact, so weights and quantization are exact

  double tValue() const { return t.get_d(); }
  Rational weight() const { return (1 + t) / 2; }
  HalfSpacePoint image() const { return hyperbolic::h2ToH3(z.real(), z.imag(), tValue()); }
};

class MonopoleConfig {
 public:
  /// Throws InvalidArgument unless every z is in the upper half-plane,
  /// |t| < 1, and no two charges are related by a group element.
  MonopoleConfig(FuchsianGroup group, std::vector<ChargePoint> points);

  const FuchsianGroup& group() const { return group_; }
  const std::vector<ChargePoint>& points() const { return points_; }
  std::vector<Rational> weights() const;
  Rational weightSum() const;
  bool quantized() const;
  /// Throws Precondition when the weight sum is not an integer.
  void requireQuantized() const;

 private:
  FuchsianGroup group_;
  std::vector<ChargePoint> points_;
};

/// Orbit sum of the Green's function over a word-length ball.
class Potential {
 public:
  Potential(const MonopoleConfig& config, int maxWordLength);

  struct Eval {
    double value = 1.0;
    double tail = 0.0;        // contribution of the outermost shell
    double nearestDelta = 0;  // min over images of cosh(d) - 1
  };
  Eval evaluate(const HalfSpacePoint& p) const;
  double value(const HalfSpacePoint& p) const { return evaluate(p).value; }
  /// V at a chart point; the limit 1 at |t| = 1.
  double valueAt(double x, double y, double t) const;
  /// Euclidean gradient dV/d(X, U, Z).
  std::array<double, 3> gradient(const HalfSpacePoint& p) const;
  /// dV/dt at a chart point with |t| < 1, in Eval::value.
  Eval dVdt(double x, double y, double t) const;

  int maxWordLength() const { return maxWordLength_; }
  size_t imageCount() const { return images_.size(); }

 private:
  int maxWordLength_;
  std::vector<HalfSpacePoint> images_;
  std::vector<unsigned char> outerShell_;
};

enum class ExclusionPolicy { Mask, Reject };

struct GridSpec {
  std::array<double, 2> x{-0.5, 0.5};
  std::array<double, 2> y{0.6065306597126334, 1.6487212707001282};  // e^-1/2 .. e^1/2, log-uniform
  std::array<double, 2> t{-0.6, 0.6};
  int nx = 25, ny = 25, nt = 25;
  /// Hyperbolic radius of the exclusion balls; default 3h at each charge.
  std::optional<double> exclusionRadius;
  ExclusionPolicy policy = ExclusionPolicy::Mask;
};

/// Samples on x uniform, log y uniform, t uniform. Excluded points hold NaN.
struct GridSample {
  int nx = 0, ny = 0, nt = 0;
  std::vector<double> xs, ys, ts;
  double hx = 0, hs = 0, ht = 0;  // spacing in x, log y, t
  std::vector<double> V, v, w, vw;
  double tail = 0.0;
  double exclusionRadius = 0.0;
  size_t excludedCount = 0;

  size_t index(int i, int j, int k) const {
    return (static_cast<size_t>(i) * static_cast<size_t>(ny) + static_cast<size_t>(j)) * static_cast<size_t>(nt) +
           static_cast<size_t>(k);
  }
  size_t size() const { return V.size(); }
};

/// Evaluates V on the grid. With ExclusionPolicy::Reject a grid point inside
/// an exclusion ball raises InvalidArgument naming the point.
GridSample potential(const MonopoleConfig& config, const GridSpec& grid, int maxWordLength);
GridSample potential(const Potential& field, const MonopoleConfig& config, const GridSpec& grid);

/// Same grid and V with v replaced by v * (1 + amplitude * x^2).
GridSample withPerturbedV(const GridSample& sample, double amplitude);
/// Same grid with v replaced pointwise.
GridSample withV(const GridSample& sample, const std::function<double(double, double, double)>& v);

struct Residual {
  double value = 0.0;          // sup |combination| / scale, 0 when scale is 0
  double supCombination = 0.0;
  double scale = 0.0;          // max over terms of the sup of that term
  size_t points = 0;
};

/// w_xx + w_yy + (vw)_tt by centered differences with step `stride` grid
/// cells, at points whose stencil is valid for `stride` and `supportStride`.
/// Throws InvalidArgument with fewer than 5 points on an axis.
Residual harmonicityResidual(const GridSample& sample, int stride = 1, int supportStride = 0);

struct ScalarCurvature {
  std::vector<double> s;  // [(log v)_xx + (log v)_yy + v_tt] / (vw); NaN off the stencil
  Residual residual;       // on the numerator, scaled by its three terms
};
ScalarCurvature scalarCurvature(const GridSample& sample, int stride = 1, int supportStride = 0);

struct RicciCheck {
  Residual omegaPairing;  // (rho, omega)
  Residual selfDualPart;  // largest component of rho + *rho
  Residual maxwellClosure;  // d(rho + omega / 4)
  double supRho = 0.0;
};
RicciCheck ricciAsdCheck(const GridSample& sample);

struct ConvergenceStudy {
  double coarse = 0.0;  // stride 2
  double fine = 0.0;    // stride 1
  double ratio = 0.0;
  double floor = 0.0;      // roundoffFloor of the sample
  bool converging = false;  // ratio >= minRatio, or fine at the roundoff floor
};
inline constexpr double kRoundoffFloor = 1e-12;
/// Level below which a second-difference residual is roundoff: the larger of
/// kRoundoffFloor and 16 eps / h^2 for the smallest grid step.
double roundoffFloor(const GridSample& sample);
ConvergenceStudy harmonicityConvergence(const GridSample& sample, double minRatio = 3.0);
ConvergenceStudy scalarCurvatureConvergence(const GridSample& sample, double minRatio = 3.0);

struct QuadratureOptions {
  int wordLength = 4;
  int constraintWordLength = 2;
  int piecesPerSide = 4;
  int phiOrder = 16;
  int rhoOrder = 32;
};

struct BoundaryFlux {
  double value = 0.0;
  Rational expected;       // -sum w_j
  double tail = 0.0;       // outermost-shell contribution
  double quadratureError = 0.0;
  double tolerance() const { return 2.0 * (tail + quadratureError); }
};

/// (1/2 pi) times the flux of dV through Sigma x {1 - eps}, integrated over a
/// Dirichlet domain about i. Throws InvalidArgument unless 0 < eps and
/// 1 - eps > max t_j.
BoundaryFlux boundaryFlux(const MonopoleConfig& config, double epsilon, const QuadratureOptions& options = {});

/// (1/2 pi) times the flux of dV through a geodesic sphere of radius r about
/// charge `charge`, with the gradient taken by central differences.
double smallSphereFlux(const MonopoleConfig& config, int maxWordLength, size_t charge, double radius,
                       int order = 24);

struct GeometricAreas {
  lattice::PiMultiple fiberArea;
  std::vector<lattice::PiMultiple> exceptionalAreas;
};
GeometricAreas geometricAreas(const MonopoleConfig& config);

struct BoundaryBehavior {
  double slopeAtMinus1 = 0.0;  // worst column, expected +2
  double slopeAtPlus1 = 0.0;   // worst column, expected -2
  double maxEllAtEnds = 0.0;
  double tMin = 0.0, tMax = 0.0;
};
/// Second-order one-sided slopes of l = (1 - t^2) / V at the ends of the t
/// axis. Throws InvalidArgument unless the axis reaches |t| >= 0.99 on both
/// sides with at least 3 points.
BoundaryBehavior boundaryBehavior(const GridSample& sample);

struct Equivariance {
  double maxDefect = 0.0;
  double maxTail = 0.0;
};
/// |V(g p) - V(p)| over generators and their inverses.
Equivariance equivarianceDefect(const Potential& field, const FuchsianGroup& group,
                                const std::vector<hyperbolic::ChartPoint>& points);

void writeCsv(const GridSample& sample, const std::string& path);
/// Contour plot of V on the y-t slice nearest to x.
void writeSliceSvg(const GridSample& sample, double x, const std::string& path, int levels = 12);

}  // namespace sfk::ansatz
