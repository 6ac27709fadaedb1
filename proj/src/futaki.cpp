#include "sfk/futaki.hpp"

#include "sfk/error.hpp"

namespace sfk::futaki {
namespace {

void requireChernOrthogonal(const RuledSurfaceModel& model, const KahlerClassParam& cls) {
  const Rational c1w = lattice::dot(lattice::c1Row(model), cls.poincareDual(model));
  if (c1w != 0)
    fail(ErrorCode::Precondition, "class is not admissible: c1.[omega] = " + formatRational(c1w) +
                                      " (the Futaki formulas assume total scalar curvature zero)");
}

}  // namespace

Rational futakiViaWeights(const RuledSurfaceModel& model, const KahlerClassParam& cls) {
  requireChernOrthogonal(model, cls);
  const Rational& a = cls.fiberArea();
  return -(a * a / 2) * (Rational(model.bundleDegree()) - cls.weightSum());
}

Rational futakiViaBoundary(const RuledSurfaceModel& model, const KahlerClassParam& cls) {
  requireChernOrthogonal(model, cls);
  const Rational& a = cls.fiberArea();
  const Rational k(model.bundleDegree());
  const Rational twoGminus2(2 * (model.genus() - 1));
  const Rational w = cls.weightSum();
  // Section areas in closed form; C0 is the mirror image of C_inf under
  // k -> m - k, w_j -> 1 - w_j.
  const Rational atInfinity = a / 2 * (-k + twoGminus2 + w);
  const Rational atZero = a / 2 * (k + twoGminus2 - w);
  const Rational& fiber = a;
  return (atInfinity - atZero) * fiber / 2;
}

FutakiResult evaluate(const RuledSurfaceModel& model, const KahlerClassParam& cls) {
  FutakiResult r;
  r.viaWeights = futakiViaWeights(model, cls);
  r.viaBoundary = futakiViaBoundary(model, cls);
  if (r.viaWeights != r.viaBoundary)
    fail(ErrorCode::Internal, "Futaki formulas disagree: " + formatRational(r.viaWeights) + " vs " +
                                  formatRational(r.viaBoundary));
  r.value = r.viaWeights;
  return r;
}

Existence existenceClassification(const RuledSurfaceModel& model) {
  const int k = model.bundleDegree();
  const int m = model.blowupCount();
  if ((k == 0 && m == 0) || (0 < k && k < m)) return Existence::AdmissibleFutakiZeroExists;
  return Existence::NoneExists;
}

const char* toString(Existence e) {
  return e == Existence::AdmissibleFutakiZeroExists ? "AdmissibleFutakiZeroExists" : "NoneExists";
}

std::vector<Rational> restrictedFutakiGradient(const RuledSurfaceModel& model, const KahlerClassParam& cls) {
  if (!lattice::isAdmissible(model, cls).admissible)
    fail(ErrorCode::Precondition, "restricted Futaki gradient needs an admissible class");
  if (futakiViaWeights(model, cls) != 0)
    fail(ErrorCode::Precondition, "restricted Futaki gradient is only defined at a Futaki-zero class");
  const Rational& a = cls.fiberArea();
  std::vector<Rational> grad;
  grad.reserve(cls.weights().size() + 1);
  grad.push_back(-a * (Rational(model.bundleDegree()) - cls.weightSum()));
  for (size_t j = 0; j < cls.weights().size(); ++j) grad.push_back(a * a / 2);
  return grad;
}

bool matsushimaLichnerowiczVanishes(const RuledSurfaceModel& model) {
  // m > 0: Gamma(L*) = 0 and a(M) is spanned by the Euler field.
  // m = 0: either M is the product or Gamma(L) = Gamma(L*) = 0.
  (void)model;
  return true;
}

bool scalarFlatExistence(const RuledSurfaceModel& model, const KahlerClassParam& cls) {
  if (!lattice::isAdmissible(model, cls).admissible) return false;
  return futakiViaWeights(model, cls) == 0 && matsushimaLichnerowiczVanishes(model);
}

}  // namespace sfk::futaki
