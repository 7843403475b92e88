#include "planevar/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstring>

namespace planevar {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) {
    throw DomainError("not a rational number: '" + std::string(whole) + "'");
  }
  mpz_class v(std::string(s), 10);
  return negative ? mpz_class(-v) : v;
}

Rational parse_decimal(std::string_view s, std::string_view whole) {
  auto fail = [&] {
    throw DomainError("not a rational number: '" + std::string(whole) + "'");
  };
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = s.substr(e + 1);
    s = s.substr(0, e);
    mpz_class ex = parse_integer(exp_text, whole);
    if (!ex.fits_slong_p() || abs(ex) > 4096) fail();
    exponent = ex.get_si();
  }
  std::string digits;
  std::size_t dot = s.find('.');
  if (dot == std::string_view::npos) {
    digits = std::string(s);
  } else {
    digits = std::string(s.substr(0, dot)) + std::string(s.substr(dot + 1));
    exponent -= static_cast<long>(s.size() - dot - 1);
  }
  if (!all_digits(digits)) fail();
  Rational value{mpz_class(digits, 10)};
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
  if (exponent >= 0) {
    value *= scale;
  } else {
    value /= scale;
  }
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_integer(trim(s.substr(0, slash)), text);
    mpz_class den = parse_integer(trim(s.substr(slash + 1)), text);
    if (den == 0) {
      throw DomainError("zero denominator: '" + std::string(text) + "'");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  return parse_decimal(s, text);
}

std::string to_string(const Rational& value) { return value.get_str(); }

double to_double(const Rational& value) {
  double d = value.get_d();
  if (!std::isfinite(d) || sgn(value) == 0) return d;
  double away = std::nextafter(d, sgn(value) > 0 ? HUGE_VAL : -HUGE_VAL);
  if (!std::isfinite(away)) return d;
  Rational lo_gap = abs(value - Rational(d));
  Rational hi_gap = abs(Rational(away) - value);
  if (hi_gap < lo_gap) return away;
  if (hi_gap == lo_gap) {
    // Tie: keep the one with an even last bit.
    std::int64_t bits;
    std::memcpy(&bits, &d, sizeof bits);
    return (bits & 1) ? away : d;
  }
  return d;
}

}  // namespace planevar
