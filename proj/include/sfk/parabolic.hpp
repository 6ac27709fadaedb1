#pragma once

// Parabolic structures on V = L + O with one flag per blown-up point, each
// flag line sitting in the O summand.

#include "sfk/futaki.hpp"
#include "sfk/lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sfk::parabolic {

struct Flag {
  int pointId = 0;
  Rational alpha;
  Rational beta;

  Rational weight() const { return beta - alpha; }
};

class ParabolicBundle {
 public:
  /// Throws InvalidArgument unless 0 <= alpha < beta <= 1, beta - alpha < 1,
  /// and point ids are distinct.
  ParabolicBundle(int bundleDegree, std::vector<Flag> flags);

  /// beta_j = alpha_j + w_j; alpha defaults to all zeros when empty.
  static ParabolicBundle fromWeights(int bundleDegree, const std::vector<Rational>& weights,
                                     const std::vector<Rational>& alpha = {});

  int bundleDegree() const { return degree_; }
  const std::vector<Flag>& flags() const { return flags_; }
  Rational weightSum() const;

 private:
  int degree_;
  std::vector<Flag> flags_;
};

/// Candidate line subbundles. Flag references are indices into
/// ParabolicBundle::flags().
struct LineSubbundle {
  enum class Kind { SummandL, SummandO, TwistedO, SubsheafOfL };

  Kind kind = Kind::SummandL;
  /// TwistedO: extra degree d <= 0. SubsheafOfL: the degree itself (< k).
  int degreeParameter = 0;
  std::vector<int> containedFlags;

  static LineSubbundle summandL();
  static LineSubbundle summandO(const ParabolicBundle& bundle);
  /// Degree -|S| + d, containing exactly the flags in S.
  static LineSubbundle twistedO(std::vector<int> flags, int extraDegree = 0);
  static LineSubbundle subsheafOfL(int degree);

  int degree(const ParabolicBundle& bundle) const;
  std::string describe() const;

  bool operator==(const LineSubbundle&) const = default;
};

const char* toString(LineSubbundle::Kind kind);

/// Throws InvalidArgument if the descriptor is inconsistent with the bundle.
void validate(const ParabolicBundle& bundle, const LineSubbundle& sub);

/// deg + sum of alpha over flags not in the subbundle + sum of beta over flags in it.
Rational parabolicDegreeLine(const ParabolicBundle& bundle, const LineSubbundle& sub);

/// k + sum alpha + sum beta.
Rational parabolicDegreeTotal(const ParabolicBundle& bundle);

struct StabilityVerdict {
  bool quasiStable = true;
  std::optional<LineSubbundle> witness;
  Rational witnessDegree;
  Rational halfTotal;
};

/// Checks pardeg(sub) <= pardeg(V)/2 over the candidate family
/// {L, O} + {TwistedO(S, 0)} + {SubsheafOfL(k - 1)}, equality only for the
/// summands. Reports the first violating candidate.
StabilityVerdict isQuasiStable(const ParabolicBundle& bundle);

/// Same verdict by explicit enumeration of all 2^m flag subsets; exponential,
/// intended for cross-checks on small m.
StabilityVerdict isQuasiStableExhaustive(const ParabolicBundle& bundle);

struct StabilityFutakiAgreement {
  bool quasiStable = false;
  bool futakiZero = false;
  StabilityVerdict verdict;
};

/// Builds the bundle with beta = alpha + w from the class weights. Throws
/// InvalidArgument on inconsistent weights and Internal if the two verdicts
/// disagree.
StabilityFutakiAgreement stabilityEqualsFutakiZero(const lattice::RuledSurfaceModel& model,
                                                   const lattice::KahlerClassParam& cls,
                                                   const std::vector<Rational>& alphaChoice);

}  // namespace sfk::parabolic
