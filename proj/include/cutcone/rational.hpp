#pragma once

#include <gmpxx.h>

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cutcone {

/// Exact arbitrary-precision rational. Every membership decision in this
/// library is made over this type; nothing is ever routed through a double.
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

inline std::string_view strip_sign(std::string_view s, bool& negative) {
  negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  return s;
}

inline mpz_class pow10(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

// Parses [+-]digits[.digits][(e|E)[+-]digits] into an exact rational.
inline Rational parse_decimal(std::string_view text) {
  bool negative = false;
  std::string_view s = strip_sign(text, negative);
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    bool exp_negative = false;
    std::string_view exp_digits = strip_sign(s.substr(e + 1), exp_negative);
    if (!all_digits(exp_digits) || exp_digits.size() > 6)
      throw ParseError("malformed exponent in number '" + std::string(text) + "'");
    exponent = std::stol(std::string(exp_digits));
    if (exp_negative) exponent = -exponent;
    s = s.substr(0, e);
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
        (whole.empty() && frac.empty()))
      throw ParseError("malformed decimal '" + std::string(text) + "'");
    digits = std::string(whole) + std::string(frac);
    exponent -= static_cast<long>(frac.size());
  } else {
    if (!all_digits(s)) throw ParseError("malformed number '" + std::string(text) + "'");
    digits = std::string(s);
  }
  mpz_class mantissa(digits, 10);
  Rational value;
  if (exponent >= 0) {
    value = Rational(mantissa * pow10(static_cast<unsigned long>(exponent)));
  } else {
    value = Rational(mantissa, pow10(static_cast<unsigned long>(-exponent)));
    value.canonicalize();
  }
  return negative ? Rational(-value) : value;
}

}  // namespace detail

/// Parses "p/q", an integer, or an exact decimal literal.
inline Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty rational");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    bool num_neg = false, den_neg = false;
    std::string_view num = detail::strip_sign(text.substr(0, slash), num_neg);
    std::string_view den = detail::strip_sign(text.substr(slash + 1), den_neg);
    if (!detail::all_digits(num) || !detail::all_digits(den) || den_neg)
      throw ParseError("malformed rational '" + std::string(text) + "'");
    mpz_class p(std::string(num), 10), q(std::string(den), 10);
    if (q == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    if (num_neg) p = -p;
    Rational r(p, q);
    r.canonicalize();
    return r;
  }
  return detail::parse_decimal(text);
}

/// Canonical text form: "p/q" in lowest terms, or "p" when q == 1.
/// Lowest terms, "p" when the denominator is 1.
inline std::string to_string(const Rational& r) {
  Rational c(r);
  c.canonicalize();
  return c.get_str();
}

inline double to_double(const Rational& r) { return r.get_d(); }

}  // namespace cutcone
