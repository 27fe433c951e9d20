#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace coa {

/// Exact arbitrary-precision rational. Always kept in canonical reduced form
/// with a positive denominator (the backing boost type guarantees both).
class Rational {
 public:
  using Backend = boost::multiprecision::cpp_rational;
  using Int = boost::multiprecision::cpp_int;

  Rational() : v_(0) {}
  Rational(long long n) : v_(n) {}
  Rational(const Int& num, const Int& den) : v_(num, den) {}
  explicit Rational(Backend v) : v_(std::move(v)) {}

  static std::optional<Rational> from_integer_text(std::string_view digits);
  /// Parses "123", "-4", "1.5", ".5", "1,234.50" (commas between digit groups
  /// are stripped). Decimals become exact ratios: 1.5 -> 3/2.
  static std::optional<Rational> parse(std::string_view text);

  Rational operator+(const Rational& o) const { return Rational(Backend(v_ + o.v_)); }
  Rational operator-(const Rational& o) const { return Rational(Backend(v_ - o.v_)); }
  Rational operator*(const Rational& o) const { return Rational(Backend(v_ * o.v_)); }
  Rational operator-() const { return Rational(Backend(-v_)); }
  /// Division by zero is the caller's problem; check is_zero first.
  Rational operator/(const Rational& o) const { return Rational(Backend(v_ / o.v_)); }

  bool operator==(const Rational& o) const { return v_ == o.v_; }
  bool operator!=(const Rational& o) const { return v_ != o.v_; }
  bool operator<(const Rational& o) const { return v_ < o.v_; }

  bool is_zero() const { return v_.is_zero(); }
  bool is_integer() const { return boost::multiprecision::denominator(v_) == 1; }

  Int numerator() const { return boost::multiprecision::numerator(v_); }
  Int denominator() const { return boost::multiprecision::denominator(v_); }

  /// Canonical rendering: integer when the denominator is 1, the shortest
  /// terminating decimal when the reduced denominator is 2^a * 5^b, and
  /// "p/q" otherwise. 55 -> "55", 2469/2 -> "1234.5", 1/3 -> "1/3".
  std::string to_string() const;

 private:
  Backend v_;
};

}  // namespace coa
