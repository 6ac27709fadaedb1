#include "sfk/rational.hpp"

#include "sfk/error.hpp"

#include <cctype>

namespace sfk {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool allDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

mpz_class parseInteger(std::string_view s, std::string_view whole) {
  std::string_view body = s;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (!allDigits(body)) fail(ErrorCode::Parse, "malformed rational '" + std::string(whole) + "'");
  mpz_class z(std::string(body), 10);
  return negative ? mpz_class(-z) : z;
}

Rational parseDecimal(std::string_view s, std::string_view whole) {
  std::string_view mantissa = s;
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = s.substr(0, e);
    mpz_class ez = parseInteger(s.substr(e + 1), whole);
    if (!ez.fits_slong_p() || abs(ez) > 4096) fail(ErrorCode::Parse, "exponent out of range in '" + std::string(whole) + "'");
    exponent = ez.get_si();
  }
  bool negative = false;
  if (!mantissa.empty() && (mantissa.front() == '+' || mantissa.front() == '-')) {
    negative = mantissa.front() == '-';
    mantissa.remove_prefix(1);
  }
  std::string digits;
  long fractionDigits = 0;
  auto dot = mantissa.find('.');
  if (dot == std::string_view::npos) {
    digits = std::string(mantissa);
  } else {
    auto intPart = mantissa.substr(0, dot);
    auto fracPart = mantissa.substr(dot + 1);
    if ((!intPart.empty() && !allDigits(intPart)) || (!fracPart.empty() && !allDigits(fracPart)) ||
        (intPart.empty() && fracPart.empty()))
      fail(ErrorCode::Parse, "malformed rational '" + std::string(whole) + "'");
    digits = std::string(intPart) + std::string(fracPart);
    fractionDigits = static_cast<long>(fracPart.size());
  }
  if (!allDigits(digits)) fail(ErrorCode::Parse, "malformed rational '" + std::string(whole) + "'");
  mpz_class num(digits, 10);
  if (negative) num = -num;
  long scale = exponent - fractionDigits;
  mpz_class pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
  Rational r = scale >= 0 ? Rational(num * pow10) : Rational(num, pow10);
  r.canonicalize();
  return r;
}

}  // namespace

Rational parseRational(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) fail(ErrorCode::Parse, "empty rational");
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    mpz_class num = parseInteger(trim(s.substr(0, slash)), s);
    mpz_class den = parseInteger(trim(s.substr(slash + 1)), s);
    if (den == 0) fail(ErrorCode::Parse, "zero denominator in '" + std::string(s) + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  return parseDecimal(s, s);
}

std::vector<Rational> parseRationalList(std::string_view text) {
  std::vector<Rational> out;
  std::string_view s = trim(text);
  if (s.empty()) return out;
  while (true) {
    auto comma = s.find(',');
    out.push_back(parseRational(s.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

std::string formatRational(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

Rational sum(const std::vector<Rational>& values) {
  Rational total = 0;
  for (const auto& v : values) total += v;
  return total;
}

bool isInteger(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  return v.get_den() == 1;
}

}  // namespace sfk
