#include "sfk/lattice.hpp"

#include "sfk/error.hpp"

#include <algorithm>

namespace sfk::lattice {

RuledSurfaceModel::RuledSurfaceModel(int genus, int bundleDegree, int blowupCount)
    : genus_(genus), degree_(bundleDegree), blowups_(blowupCount) {
  if (genus < 2) fail(ErrorCode::InvalidArgument, "genus must be >= 2, got " + std::to_string(genus));
  if (blowupCount < 0)
    fail(ErrorCode::InvalidArgument, "blow-up count must be >= 0, got " + std::to_string(blowupCount));
}

HomologyClass HomologyClass::basis(const RuledSurfaceModel& model, int index) {
  if (index < 0 || index >= model.rank())
    fail(ErrorCode::DimensionMismatch, "basis index " + std::to_string(index) + " out of range");
  HomologyClass c{std::vector<Rational>(static_cast<size_t>(model.rank()), Rational(0))};
  c.coords[static_cast<size_t>(index)] = 1;
  return c;
}

HomologyClass HomologyClass::infinitySection(const RuledSurfaceModel& model) { return basis(model, 0); }
HomologyClass HomologyClass::fiber(const RuledSurfaceModel& model) { return basis(model, 1); }

HomologyClass HomologyClass::exceptional(const RuledSurfaceModel& model, int j) {
  if (j < 1 || j > model.blowupCount())
    fail(ErrorCode::DimensionMismatch, "exceptional curve E_" + std::to_string(j) + " does not exist");
  return basis(model, j + 1);
}

HomologyClass HomologyClass::zeroSection(const RuledSurfaceModel& model) {
  HomologyClass c = infinitySection(model) + fiber(model) * Rational(model.bundleDegree());
  for (int j = 1; j <= model.blowupCount(); ++j) c = c - exceptional(model, j);
  return c;
}

HomologyClass HomologyClass::operator+(const HomologyClass& other) const {
  if (coords.size() != other.coords.size()) fail(ErrorCode::DimensionMismatch, "class length mismatch in sum");
  HomologyClass out = *this;
  for (size_t i = 0; i < coords.size(); ++i) out.coords[i] += other.coords[i];
  return out;
}

HomologyClass HomologyClass::operator-(const HomologyClass& other) const { return *this + other * Rational(-1); }

HomologyClass HomologyClass::operator*(const Rational& scale) const {
  HomologyClass out = *this;
  for (auto& c : out.coords) c *= scale;
  return out;
}

KahlerClassParam::KahlerClassParam(Rational fiberArea, Rational b, std::vector<Rational> weights)
    : fiberArea_(std::move(fiberArea)), b_(std::move(b)), weights_(std::move(weights)) {
  fiberArea_.canonicalize();
  b_.canonicalize();
  for (auto& w : weights_) w.canonicalize();
  if (fiberArea_ <= 0) fail(ErrorCode::InvalidArgument, "fiber area A must be positive, got " + formatRational(fiberArea_));
  for (size_t j = 0; j < weights_.size(); ++j) {
    if (weights_[j] <= 0 || weights_[j] >= 1)
      fail(ErrorCode::InvalidArgument, "weight w_" + std::to_string(j + 1) + " = " + formatRational(weights_[j]) +
                                           " is outside (0,1)");
  }
}

KahlerClassParam KahlerClassParam::admissible(const RuledSurfaceModel& model, Rational fiberArea,
                                              std::vector<Rational> weights) {
  Rational b = admissibleB(model, weights);
  return KahlerClassParam(std::move(fiberArea), std::move(b), std::move(weights));
}

HomologyClass KahlerClassParam::poincareDual(const RuledSurfaceModel& model) const {
  if (static_cast<int>(weights_.size()) != model.blowupCount())
    fail(ErrorCode::DimensionMismatch, "class has " + std::to_string(weights_.size()) + " weights but model has " +
                                           std::to_string(model.blowupCount()) + " blow-ups");
  HomologyClass pd;
  pd.coords.reserve(weights_.size() + 2);
  pd.coords.push_back(fiberArea_);
  pd.coords.push_back(fiberArea_ * (b_ + model.bundleDegree()));
  for (const auto& w : weights_) pd.coords.push_back(-fiberArea_ * w);
  return pd;
}

KahlerClassParam KahlerClassParam::scaled(const Rational& lambda) const {
  return KahlerClassParam(fiberArea_ * lambda, b_, weights_);
}

std::vector<std::vector<Rational>> intersectionMatrix(const RuledSurfaceModel& model) {
  const auto n = static_cast<size_t>(model.rank());
  std::vector<std::vector<Rational>> q(n, std::vector<Rational>(n, Rational(0)));
  q[0][0] = -model.bundleDegree();
  q[0][1] = 1;
  q[1][0] = 1;
  for (size_t i = 2; i < n; ++i) q[i][i] = -1;
  return q;
}

Rational intersectionPairing(const HomologyClass& u, const HomologyClass& v, const RuledSurfaceModel& model) {
  const auto n = static_cast<size_t>(model.rank());
  if (u.coords.size() != n)
    fail(ErrorCode::DimensionMismatch, "first vector has length " + std::to_string(u.coords.size()) +
                                           ", model expects " + std::to_string(n));
  if (v.coords.size() != n)
    fail(ErrorCode::DimensionMismatch, "second vector has length " + std::to_string(v.coords.size()) +
                                           ", model expects " + std::to_string(n));
  // Block structure makes the full matrix product unnecessary.
  Rational r = -Rational(model.bundleDegree()) * u.coords[0] * v.coords[0] + u.coords[0] * v.coords[1] +
               u.coords[1] * v.coords[0];
  for (size_t i = 2; i < n; ++i) r -= u.coords[i] * v.coords[i];
  return r;
}

Rational integrate(const KahlerClassParam& cls, const HomologyClass& curve, const RuledSurfaceModel& model) {
  return intersectionPairing(cls.poincareDual(model), curve, model);
}

Inertia inertia(std::vector<std::vector<Rational>> a) {
  const size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) fail(ErrorCode::DimensionMismatch, "inertia needs a square matrix");
  Inertia result;
  for (size_t k = 0; k < n; ++k) {
    // Bring a nonzero pivot to (k,k) by a congruence.
    if (a[k][k] == 0) {
      size_t swapWith = n;
      for (size_t i = k + 1; i < n; ++i)
        if (a[i][i] != 0) { swapWith = i; break; }
      if (swapWith != n) {
        std::swap(a[k], a[swapWith]);
        for (auto& row : a) std::swap(row[k], row[swapWith]);
      } else {
        size_t partner = n;
        for (size_t i = k + 1; i < n; ++i)
          if (a[k][i] != 0) { partner = i; break; }
        if (partner == n) {
          ++result.zero;
          continue;
        }
        // Row/column k += row/column partner gives a[k][k] = 2 a[k][partner].
        for (size_t j = 0; j < n; ++j) a[k][j] += a[partner][j];
        for (size_t i = 0; i < n; ++i) a[i][k] += a[i][partner];
      }
    }
    const Rational pivot = a[k][k];
    if (pivot > 0) ++result.positive; else ++result.negative;
    for (size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      const Rational f = a[i][k] / pivot;
      for (size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
    for (size_t j = k + 1; j < n; ++j) a[k][j] = 0;
    for (size_t i = k + 1; i < n; ++i) a[i][k] = 0;
  }
  return result;
}

HomologyClass c1Row(const RuledSurfaceModel& model) {
  HomologyClass row;
  row.coords.reserve(static_cast<size_t>(model.rank()));
  row.coords.emplace_back(2 * (1 - model.genus()) - model.bundleDegree());
  row.coords.emplace_back(2);
  for (int j = 0; j < model.blowupCount(); ++j) row.coords.emplace_back(1);
  return row;
}

Rational dot(const HomologyClass& a, const HomologyClass& b) {
  if (a.coords.size() != b.coords.size()) fail(ErrorCode::DimensionMismatch, "dot product of unequal lengths");
  Rational r = 0;
  for (size_t i = 0; i < a.coords.size(); ++i) r += a.coords[i] * b.coords[i];
  return r;
}

Rational admissibleB(const RuledSurfaceModel& model, const std::vector<Rational>& weights) {
  if (static_cast<int>(weights.size()) != model.blowupCount())
    fail(ErrorCode::DimensionMismatch, "expected " + std::to_string(model.blowupCount()) + " weights, got " +
                                           std::to_string(weights.size()));
  return (Rational(-model.bundleDegree() + 2 * (model.genus() - 1)) + sum(weights)) / 2;
}

AdmissibilityReport isAdmissible(const RuledSurfaceModel& model, const KahlerClassParam& cls) {
  AdmissibilityReport rep;
  const HomologyClass pd = cls.poincareDual(model);
  rep.c1DotOmega = dot(c1Row(model), pd);
  rep.omegaSquared = intersectionPairing(pd, pd, model);
  rep.chernOrthogonal = rep.c1DotOmega == 0;
  rep.positiveFiberArea = cls.fiberArea() > 0;
  rep.positiveSquare = rep.omegaSquared > 0;

  auto add = [&](std::string name, const HomologyClass& c) {
    rep.pairings.push_back({std::move(name), intersectionPairing(pd, c, model)});
  };
  add("C0", HomologyClass::zeroSection(model));
  add("Cinf", HomologyClass::infinitySection(model));
  add("F", HomologyClass::fiber(model));
  for (int j = 1; j <= model.blowupCount(); ++j) add("E" + std::to_string(j), HomologyClass::exceptional(model, j));
  for (int j = 1; j <= model.blowupCount(); ++j)
    add("F-E" + std::to_string(j), HomologyClass::fiber(model) - HomologyClass::exceptional(model, j));

  std::optional<std::string> firstBadCurve;
  for (const auto& p : rep.pairings)
    if (p.area <= 0) { firstBadCurve = p.curve; break; }
  rep.positiveOnCurves = !firstBadCurve;

  if (!rep.chernOrthogonal) rep.failedCondition = "(i)";
  else if (!rep.positiveFiberArea) rep.failedCondition = "(ii)";
  else if (!rep.positiveSquare) rep.failedCondition = "(iii)";
  else if (firstBadCurve) rep.failedCondition = "(iv) " + *firstBadCurve;
  rep.admissible = !rep.failedCondition;
  return rep;
}

PiMultiple totalScalarCurvature(const RuledSurfaceModel& model, const KahlerClassParam& cls) {
  return {4 * dot(c1Row(model), cls.poincareDual(model)), 1};
}

CurvatureBounds curvatureFunctionalBounds(const RuledSurfaceModel& model) {
  const int tau = model.signature();
  const int chi = model.eulerChar();
  return {{Rational(-8 * (3 * tau + chi)), 2}, {Rational(-12 * tau), 2}};
}

namespace {

bool sameFiberPoint(const FiberPoint& a, const FiberPoint& b) {
  return a.zeta1 * b.zeta2 == a.zeta2 * b.zeta1;
}

}  // namespace

std::vector<FiberPoint> degenerateConfiguration(const std::vector<FiberPoint>& points) {
  if (points.empty()) fail(ErrorCode::Precondition, "degeneration needs at least one point");
  for (const auto& p : points)
    if (p.zeta1 == 0 && p.zeta2 == 0)
      fail(ErrorCode::InvalidArgument, "point over '" + p.basePoint + "' has fiber coordinate [0:0]");

  bool hasInfinity = false;
  bool multipleValues = false;
  for (const auto& p : points) {
    hasInfinity = hasInfinity || p.zeta2 == 0;
    multipleValues = multipleValues || !sameFiberPoint(p, points.front());
  }
  if (!multipleValues)
    fail(ErrorCode::Precondition,
         "all points lie over a single point of CP1; blow up an extra point elsewhere on the fiber");
  if (!hasInfinity)
    fail(ErrorCode::Precondition, "no point lies over [1:0]; change fiber coordinates so [1:0] is in the image");

  std::vector<FiberPoint> out;
  out.reserve(points.size());
  for (const auto& p : points) {
    if (p.zeta2 == 0) out.push_back({p.basePoint, Rational(1), Rational(0)});
    else out.push_back({p.basePoint, Rational(0), Rational(1)});
  }
  return out;
}

}  // namespace sfk::lattice
