#pragma once

// Futaki invariant of the Euler field on a blown-up ruled surface, with the
// normalization in which the Euler field acts with weight 1 on L.

#include "sfk/lattice.hpp"

#include <vector>

namespace sfk::futaki {

using lattice::KahlerClassParam;
using lattice::RuledSurfaceModel;

struct FutakiResult {
  Rational value;
  Rational viaWeights;
  Rational viaBoundary;
};

/// -(A^2 / 2) (k - sum w). Throws Precondition unless c1 . [omega] = 0.
Rational futakiViaWeights(const RuledSurfaceModel& model, const KahlerClassParam& cls);

/// (1/2) (area(C_inf) - area(C0)) area(F), with the section areas
/// (A/2)[-k + 2(g-1) + sum w] and (A/2)[k + 2(g-1) - sum w].
/// Same precondition as futakiViaWeights.
Rational futakiViaBoundary(const RuledSurfaceModel& model, const KahlerClassParam& cls);

/// Both routes; throws Internal if they disagree.
FutakiResult evaluate(const RuledSurfaceModel& model, const KahlerClassParam& cls);

enum class Existence { AdmissibleFutakiZeroExists, NoneExists };

/// (k = 0 and m = 0) or 0 < k < m.
Existence existenceClassification(const RuledSurfaceModel& model);

const char* toString(Existence e);

/// Gradient of F over the chart (A, w_1, ..., w_m) with B slaved to the
/// admissible value. Throws Precondition away from a Futaki-zero admissible class.
std::vector<Rational> restrictedFutakiGradient(const RuledSurfaceModel& model, const KahlerClassParam& cls);

/// In the normal form used here a(M) is generated by the Euler field (or M is
/// a product), so the obstruction always vanishes.
bool matsushimaLichnerowiczVanishes(const RuledSurfaceModel& model);

/// Admissible, Futaki zero, and vanishing Matsushima-Lichnerowicz obstruction.
bool scalarFlatExistence(const RuledSurfaceModel& model, const KahlerClassParam& cls);

}  // namespace sfk::futaki
