#include "crashlab/rational.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "crashlab/errors.hpp"

namespace crashlab {
namespace {

using boost::multiprecision::cpp_int;

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

[[noreturn]] void fail(std::string_view text) {
  throw Error(ErrorCode::kParseError, "not a rational number: '" + std::string(text) + "'");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);

  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  Rational result;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) fail(text);
    cpp_int d{std::string(den)};
    if (d == 0) fail(text);
    result = Rational(cpp_int(std::string(num)), d);
  } else {
    auto dot = s.find('.');
    auto whole = s.substr(0, dot);
    std::string_view frac = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
    if (whole.empty() && frac.empty()) fail(text);
    if (!whole.empty() && !all_digits(whole)) fail(text);
    if (dot != std::string_view::npos && !frac.empty() && !all_digits(frac)) fail(text);
    if (dot != std::string_view::npos && frac.empty() && whole.empty()) fail(text);
    cpp_int scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    cpp_int digits(std::string(whole.empty() ? "0" : whole) + std::string(frac));
    result = Rational(digits, scale);
  }
  return negative ? Rational(-result) : result;
}

std::string format_fraction(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

std::string format_rational(const Rational& value) {
  cpp_int den = denominator(value);
  if (den == 1) return numerator(value).str();

  // Terminating decimal iff the reduced denominator is 2^a 5^b.
  cpp_int rest = den;
  int twos = 0;
  int fives = 0;
  while (rest % 2 == 0) {
    rest /= 2;
    ++twos;
  }
  while (rest % 5 == 0) {
    rest /= 5;
    ++fives;
  }
  if (rest != 1) return format_fraction(value);

  int places = std::max(twos, fives);
  cpp_int scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  cpp_int num = numerator(value);
  bool negative = num < 0;
  if (negative) num = -num;
  cpp_int scaled = num * (scale / den);
  std::string digits = scaled.str();
  if (static_cast<int>(digits.size()) <= places) {
    digits.insert(0, static_cast<std::size_t>(places) - digits.size() + 1, '0');
  }
  digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
  return negative ? "-" + digits : digits;
}

std::string format_decimal(const Rational& value, int digits) {
  cpp_int scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  cpp_int num = numerator(value);
  cpp_int den = denominator(value);
  bool negative = num < 0;
  if (negative) num = -num;
  // Round half up on the magnitude.
  cpp_int scaled = (num * scale * 2 + den) / (den * 2);
  std::string text = scaled.str();
  if (digits > 0) {
    if (static_cast<int>(text.size()) <= digits) {
      text.insert(0, static_cast<std::size_t>(digits) - text.size() + 1, '0');
    }
    text.insert(text.size() - static_cast<std::size_t>(digits), ".");
  }
  return (negative && scaled != 0) ? "-" + text : text;
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

Rational harmonic(int k) {
  Rational sum = 0;
  for (int i = 1; i <= k; ++i) sum += Rational(1, i);
  return sum;
}

Rational klis_ratio_bound(int k) {
  if (k <= 0) return Rational(0);
  Rational base(k - 1, k);
  Rational power = 1;
  for (int i = 0; i < k; ++i) power *= base;
  return Rational(1) - power;
}

}  // namespace crashlab
