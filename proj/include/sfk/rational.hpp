#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace sfk {

/// Exact rational number. All lattice, Futaki and parabolic arithmetic uses
/// this type; doubles never enter those modules.
using Rational = mpq_class;

/// Parses "p/q", an integer, or a finite decimal such as "-0.25" or "1e-3".
/// A zero denominator or trailing garbage throws sfk::Error(Parse).
Rational parseRational(std::string_view text);

/// Comma separated list of rationals; an empty or blank string yields {}.
std::vector<Rational> parseRationalList(std::string_view text);

/// Canonical "p/q" form with q >= 1, e.g. "5/2", "-1/4", "3/1", "0/1".
std::string formatRational(const Rational& value);

Rational sum(const std::vector<Rational>& values);

bool isInteger(const Rational& value);

/// num/den in lowest terms. mpq_class(num, den) alone does not reduce, and
/// GMP arithmetic and comparison expect reduced operands.
inline Rational makeRational(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace sfk
