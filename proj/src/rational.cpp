#include "coa/rational.hpp"

#include <cctype>

namespace coa {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

std::optional<Rational> Rational::from_integer_text(std::string_view digits) {
  bool neg = false;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    neg = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (!all_digits(digits)) return std::nullopt;
  Int n(std::string(digits));
  if (neg) n = -n;
  return Rational(n, 1);
}

std::optional<Rational> Rational::parse(std::string_view text) {
  std::string cleaned;
  cleaned.reserve(text.size());
  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    // Commas are digit-group separators only when flanked by digits.
    if (c == ',' && i > 0 && i + 1 < text.size() &&
        std::isdigit(static_cast<unsigned char>(text[i - 1])) &&
        std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
      continue;
    }
    cleaned.push_back(c);
  }

  std::string_view s(cleaned);
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  auto dot = s.find('.');
  std::string_view whole = dot == std::string_view::npos ? s : s.substr(0, dot);
  std::string_view frac = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
  if (whole.empty() && frac.empty()) return std::nullopt;
  if (!whole.empty() && !all_digits(whole)) return std::nullopt;
  if (!frac.empty() && !all_digits(frac)) return std::nullopt;
  if (dot != std::string_view::npos && frac.empty()) return std::nullopt;

  Int num = whole.empty() ? Int(0) : Int(std::string(whole));
  Int den = 1;
  for (char c : frac) {
    num *= 10;
    num += c - '0';
    den *= 10;
  }
  if (neg) num = -num;
  return Rational(num, den);
}

std::string Rational::to_string() const {
  Int num = numerator();
  Int den = denominator();
  if (den == 1) return num.str();

  // Powers of 2 and 5 in the reduced denominator decide whether a terminating
  // decimal exists; max(a, b) digits are needed and by reducedness none of
  // them is a trailing zero.
  Int d = den;
  int twos = 0, fives = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++twos;
  }
  while (d % 5 == 0) {
    d /= 5;
    ++fives;
  }
  if (d != 1) return num.str() + "/" + den.str();

  int digits = twos > fives ? twos : fives;
  Int scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  Int scaled = num * scale / den;
  bool neg = scaled < 0;
  std::string body = (neg ? Int(-scaled) : scaled).str();
  if (static_cast<int>(body.size()) <= digits) {
    body.insert(body.begin(), digits + 1 - body.size(), '0');
  }
  body.insert(body.size() - digits, ".");
  return (neg ? "-" : "") + body;
}

}  // namespace coa
