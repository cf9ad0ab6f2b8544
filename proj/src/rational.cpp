#include "sigcolor/rational.hpp"

#include <cctype>
#include <ostream>
#include <utility>

#include "sigcolor/errors.hpp"

namespace sigcolor {
namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

Rational::Rational(long num, long den) {
  if (den == 0) throw InvalidArgument("zero denominator");
  value_ = mpq_class(num, 1) / mpq_class(den, 1);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-') {
    throw InvalidArgument("not a rational literal: '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
  return Rational(mpq_class(n, d));
}

std::string Rational::str() const { return numerator_str() + "/" + denominator_str(); }

long Rational::floor_long() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  if (!q.fits_slong_p()) throw InvalidArgument("value does not fit into a machine integer");
  return q.get_si();
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.value_ == 0) throw InvalidArgument("division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

Rational floor(const Rational& x) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), x.raw().get_num_mpz_t(), x.raw().get_den_mpz_t());
  return Rational(mpq_class(q));
}

const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

Rational mod(const Rational& x, const Rational& m) {
  if (m.sign() <= 0) throw InvalidArgument("modulus must be positive");
  if (x.sign() >= 0 && x < m) return x;
  return x - floor(x / m) * m;
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

}  // namespace sigcolor
