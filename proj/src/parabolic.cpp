#include "sfk/parabolic.hpp"

#include "sfk/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace sfk::parabolic {

ParabolicBundle::ParabolicBundle(int bundleDegree, std::vector<Flag> flags)
    : degree_(bundleDegree), flags_(std::move(flags)) {
  for (auto& f : flags_) {
    f.alpha.canonicalize();
    f.beta.canonicalize();
  }
  std::set<int> ids;
  for (const auto& f : flags_) {
    const std::string where = "flag at point " + std::to_string(f.pointId);
    if (f.alpha < 0 || f.beta > 1) fail(ErrorCode::InvalidArgument, where + ": alpha, beta must lie in [0,1]");
    if (!(f.alpha < f.beta)) fail(ErrorCode::InvalidArgument, where + ": need alpha < beta");
    if (f.weight() >= 1) fail(ErrorCode::InvalidArgument, where + ": weight beta - alpha must be < 1");
    if (!ids.insert(f.pointId).second) fail(ErrorCode::InvalidArgument, where + ": duplicate point");
  }
}

ParabolicBundle ParabolicBundle::fromWeights(int bundleDegree, const std::vector<Rational>& weights,
                                             const std::vector<Rational>& alpha) {
  if (!alpha.empty() && alpha.size() != weights.size())
    fail(ErrorCode::InvalidArgument, "alpha list has " + std::to_string(alpha.size()) + " entries but there are " +
                                         std::to_string(weights.size()) + " weights");
  std::vector<Flag> flags;
  flags.reserve(weights.size());
  for (size_t j = 0; j < weights.size(); ++j) {
    Rational a = alpha.empty() ? Rational(0) : alpha[j], w = weights[j];
    a.canonicalize();
    w.canonicalize();
    flags.push_back({static_cast<int>(j + 1), a, a + w});
  }
  return ParabolicBundle(bundleDegree, std::move(flags));
}

Rational ParabolicBundle::weightSum() const {
  Rational s = 0;
  for (const auto& f : flags_) s += f.weight();
  return s;
}

LineSubbundle LineSubbundle::summandL() { return {Kind::SummandL, 0, {}}; }

LineSubbundle LineSubbundle::summandO(const ParabolicBundle& bundle) {
  std::vector<int> all(bundle.flags().size());
  std::iota(all.begin(), all.end(), 0);
  return {Kind::SummandO, 0, std::move(all)};
}

LineSubbundle LineSubbundle::twistedO(std::vector<int> flags, int extraDegree) {
  std::sort(flags.begin(), flags.end());
  return {Kind::TwistedO, extraDegree, std::move(flags)};
}

LineSubbundle LineSubbundle::subsheafOfL(int degree) { return {Kind::SubsheafOfL, degree, {}}; }

int LineSubbundle::degree(const ParabolicBundle& bundle) const {
  switch (kind) {
    case Kind::SummandL: return bundle.bundleDegree();
    case Kind::SummandO: return 0;
    case Kind::TwistedO: return -static_cast<int>(containedFlags.size()) + degreeParameter;
    case Kind::SubsheafOfL: return degreeParameter;
  }
  return 0;
}

const char* toString(LineSubbundle::Kind kind) {
  switch (kind) {
    case LineSubbundle::Kind::SummandL: return "SummandL";
    case LineSubbundle::Kind::SummandO: return "SummandO";
    case LineSubbundle::Kind::TwistedO: return "TwistedO";
    case LineSubbundle::Kind::SubsheafOfL: return "SubsheafOfL";
  }
  return "?";
}

std::string LineSubbundle::describe() const {
  std::string s = toString(kind);
  if (kind == Kind::TwistedO) {
    s += "({";
    for (size_t i = 0; i < containedFlags.size(); ++i) s += (i ? "," : "") + std::to_string(containedFlags[i] + 1);
    s += "}, " + std::to_string(degreeParameter) + ")";
  } else if (kind == Kind::SubsheafOfL) {
    s += "(" + std::to_string(degreeParameter) + ")";
  }
  return s;
}

void validate(const ParabolicBundle& bundle, const LineSubbundle& sub) {
  const int m = static_cast<int>(bundle.flags().size());
  std::set<int> seen;
  for (int j : sub.containedFlags) {
    if (j < 0 || j >= m) fail(ErrorCode::InvalidArgument, sub.describe() + " refers to a missing flag");
    if (!seen.insert(j).second) fail(ErrorCode::InvalidArgument, sub.describe() + " lists a flag twice");
  }
  switch (sub.kind) {
    case LineSubbundle::Kind::SummandL:
      if (!sub.containedFlags.empty()) fail(ErrorCode::InvalidArgument, "SummandL contains no flags");
      break;
    case LineSubbundle::Kind::SummandO:
      if (static_cast<int>(sub.containedFlags.size()) != m)
        fail(ErrorCode::InvalidArgument, "SummandO contains every flag");
      break;
    case LineSubbundle::Kind::TwistedO:
      if (sub.degreeParameter > 0) fail(ErrorCode::InvalidArgument, "TwistedO extra degree must be <= 0");
      break;
    case LineSubbundle::Kind::SubsheafOfL:
      if (sub.degreeParameter >= bundle.bundleDegree())
        fail(ErrorCode::InvalidArgument, "a proper subsheaf of L has degree < deg L");
      if (!sub.containedFlags.empty()) fail(ErrorCode::InvalidArgument, "subsheaves of L contain no flags");
      break;
  }
}

Rational parabolicDegreeLine(const ParabolicBundle& bundle, const LineSubbundle& sub) {
  validate(bundle, sub);
  const auto& flags = bundle.flags();
  std::vector<bool> contained(flags.size(), false);
  for (int j : sub.containedFlags) contained[static_cast<size_t>(j)] = true;
  Rational p = sub.degree(bundle);
  for (size_t j = 0; j < flags.size(); ++j) p += contained[j] ? flags[j].beta : flags[j].alpha;
  return p;
}

Rational parabolicDegreeTotal(const ParabolicBundle& bundle) {
  Rational p = bundle.bundleDegree();
  for (const auto& f : bundle.flags()) p += f.alpha + f.beta;
  return p;
}

namespace {

bool isSummand(const ParabolicBundle& bundle, const LineSubbundle& sub) {
  if (sub.kind == LineSubbundle::Kind::SummandL || sub.kind == LineSubbundle::Kind::SummandO) return true;
  // With deg L = 0 a flag-free degree-0 subbundle is the graph of O -> L and
  // complements L.
  return sub.kind == LineSubbundle::Kind::TwistedO && sub.containedFlags.empty() && sub.degreeParameter == 0 &&
         bundle.bundleDegree() == 0;
}

// Returns true (and fills the verdict) if `sub` destabilizes.
bool violates(const ParabolicBundle& bundle, const LineSubbundle& sub, const Rational& half, StabilityVerdict& v) {
  const Rational p = parabolicDegreeLine(bundle, sub);
  const bool bad = isSummand(bundle, sub) ? p > half : p >= half;
  if (bad) {
    v.quasiStable = false;
    v.witness = sub;
    v.witnessDegree = p;
  }
  return bad;
}

template <class TwistedCandidates>
StabilityVerdict checkFamily(const ParabolicBundle& bundle, TwistedCandidates&& forEachTwisted) {
  StabilityVerdict v;
  v.halfTotal = parabolicDegreeTotal(bundle) / 2;
  if (violates(bundle, LineSubbundle::summandL(), v.halfTotal, v)) return v;
  if (violates(bundle, LineSubbundle::summandO(bundle), v.halfTotal, v)) return v;
  if (forEachTwisted([&](const LineSubbundle& s) { return violates(bundle, s, v.halfTotal, v); })) return v;
  if (violates(bundle, LineSubbundle::subsheafOfL(bundle.bundleDegree() - 1), v.halfTotal, v)) return v;
  return v;
}

}  // namespace

StabilityVerdict isQuasiStable(const ParabolicBundle& bundle) {
  // pardeg(TwistedO(S,0)) = -|S| + sum alpha + sum_{j in S} w_j, so for each
  // size |S| the flags with the largest weights are the only candidate that
  // can violate first.
  const auto& flags = bundle.flags();
  std::vector<int> order(flags.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return flags[static_cast<size_t>(a)].weight() > flags[static_cast<size_t>(b)].weight(); });
  return checkFamily(bundle, [&](auto&& test) {
    for (size_t size = 0; size <= order.size(); ++size) {
      std::vector<int> s(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(size));
      if (test(LineSubbundle::twistedO(std::move(s), 0))) return true;
    }
    return false;
  });
}

StabilityVerdict isQuasiStableExhaustive(const ParabolicBundle& bundle) {
  const size_t m = bundle.flags().size();
  if (m > 20) fail(ErrorCode::InvalidArgument, "exhaustive subset enumeration is limited to 20 flags");
  return checkFamily(bundle, [&](auto&& test) {
    for (unsigned long mask = 0; mask < (1UL << m); ++mask) {
      std::vector<int> s;
      for (size_t j = 0; j < m; ++j)
        if (mask & (1UL << j)) s.push_back(static_cast<int>(j));
      if (test(LineSubbundle::twistedO(std::move(s), 0))) return true;
    }
    return false;
  });
}

StabilityFutakiAgreement stabilityEqualsFutakiZero(const lattice::RuledSurfaceModel& model,
                                                   const lattice::KahlerClassParam& cls,
                                                   const std::vector<Rational>& alphaChoice) {
  if (static_cast<int>(cls.weights().size()) != model.blowupCount())
    fail(ErrorCode::InvalidArgument, "class weights do not match the blow-up count");
  const ParabolicBundle bundle = ParabolicBundle::fromWeights(model.bundleDegree(), cls.weights(), alphaChoice);
  StabilityFutakiAgreement out;
  out.verdict = isQuasiStable(bundle);
  out.quasiStable = out.verdict.quasiStable;
  out.futakiZero = futaki::futakiViaWeights(model, cls) == 0;
  if (out.quasiStable != out.futakiZero)
    fail(ErrorCode::Internal, "parabolic quasi-stability disagrees with Futaki vanishing");
  return out;
}

}  // namespace sfk::parabolic
