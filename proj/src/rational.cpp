#include "edcrg/rational.hpp"

#include <cctype>
#include <cstdio>
#include <stdexcept>

namespace edcrg {

double to_double(const Rational& r) { return r.convert_to<double>(); }

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

[[noreturn]] void bad(const std::string& text) {
  throw std::invalid_argument("not a rational number: '" + text + "'");
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s = text;
  bool negative = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    negative = s[0] == '-';
    s = s.substr(1);
  }
  if (s.empty()) bad(text);

  Rational value;
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad(text);
    BigInt d(den);
    if (d == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    value = Rational(BigInt(num), d);
  } else {
    long long exponent = 0;
    auto e = s.find_first_of("eE");
    if (e != std::string::npos) {
      std::string exp = s.substr(e + 1);
      s = s.substr(0, e);
      try {
        exponent = std::stoll(exp);
      } catch (const std::exception&) {
        bad(text);
      }
    }
    auto dot = s.find('.');
    std::string digits = s;
    if (dot != std::string::npos) {
      digits = s.substr(0, dot) + s.substr(dot + 1);
      exponent -= static_cast<long long>(s.size() - dot - 1);
    }
    if (!all_digits(digits)) bad(text);
    value = Rational(BigInt(digits));
    BigInt scale = boost::multiprecision::pow(BigInt(10),
                                              static_cast<unsigned>(exponent < 0 ? -exponent : exponent));
    if (exponent < 0)
      value /= Rational(scale);
    else
      value *= Rational(scale);
  }
  return negative ? -value : value;
}

Rational parse_probability(const std::string& text) {
  Rational p = parse_rational(text);
  if (p < 0 || p > 1) throw std::invalid_argument("probability out of [0,1]: '" + text + "'");
  return p;
}

std::optional<Rational> rational_sqrt(const Rational& r) {
  if (r < 0) return std::nullopt;
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  BigInt sn = boost::multiprecision::sqrt(num);
  BigInt sd = boost::multiprecision::sqrt(den);
  if (sn * sn != num || sd * sd != den) return std::nullopt;
  return Rational(sn, sd);
}

std::string to_decimal_string(const Rational& r) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", to_double(r));
  return buf;
}

std::string to_fraction_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace edcrg
