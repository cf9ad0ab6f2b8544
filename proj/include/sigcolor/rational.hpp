#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace sigcolor {

/// Exact rational number with unbounded numerator and denominator, always in
/// canonical form (reduced, denominator > 0).
class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T value) : value_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)

  Rational(long num, long den);

  /// Parses "a/b" or "a" (optional leading '-'). Throws InvalidArgument.
  static Rational parse(std::string_view text);

  /// Always "num/den", e.g. "3/1".
  std::string str() const;

  std::string numerator_str() const { return value_.get_num().get_str(); }
  std::string denominator_str() const { return value_.get_den().get_str(); }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// Largest integer not above this value. Throws InvalidArgument if it does
  /// not fit into a long.
  long floor_long() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return value_; }

  friend Rational floor(const Rational& x);

 private:
  explicit Rational(mpq_class v);

  mpq_class value_;
};

Rational abs(const Rational& x);
Rational floor(const Rational& x);
const Rational& min(const Rational& a, const Rational& b);
const Rational& max(const Rational& a, const Rational& b);

/// x reduced into [0, m). Requires m > 0.
Rational mod(const Rational& x, const Rational& m);

std::ostream& operator<<(std::ostream& os, const Rational& x);

}  // namespace sigcolor
