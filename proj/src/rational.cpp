#include "entroscope/rational.hpp"

#include <cmath>
#include <ostream>

#include "entroscope/error.hpp"

namespace entroscope {

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

bool is_signed_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return is_digits(s);
}

mpz_class parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) fail(ErrorCode::InvalidArgument, "zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::from_strings(std::string_view num, std::string_view den) {
  if (!is_signed_integer(num) || !is_digits(den))
    fail(ErrorCode::FormatError, "malformed rational '" + std::string(num) + "/" + std::string(den) + "'");
  mpz_class d = parse_integer(den);
  if (d == 0) fail(ErrorCode::FormatError, "zero denominator");
  return Rational(mpq_class(parse_integer(num), d));
}

Rational Rational::parse(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos)
    return from_strings(text.substr(0, slash), text.substr(slash + 1));
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool negative = !whole.empty() && whole.front() == '-';
    if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) whole.remove_prefix(1);
    if ((!whole.empty() && !is_digits(whole)) || !is_digits(frac))
      fail(ErrorCode::FormatError, "malformed decimal '" + std::string(text) + "'");
    std::string digits = std::string(whole) + std::string(frac);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    mpq_class q(mpz_class(digits, 10), den);
    if (negative) q = -q;
    return Rational(q);
  }
  if (!is_signed_integer(text))
    fail(ErrorCode::FormatError, "malformed rational '" + std::string(text) + "'");
  return Rational(mpq_class(parse_integer(text)));
}

Rational Rational::from_double(double value) {
  if (!std::isfinite(value))
    fail(ErrorCode::IrrationalCoefficients, "coefficient is not a finite number");
  mpq_class q;
  mpq_set_d(q.get_mpq_t(), value);
  return Rational(q);
}

std::string Rational::numerator_string() const { return value_.get_num().get_str(); }
std::string Rational::denominator_string() const { return value_.get_den().get_str(); }

std::string Rational::to_string() const {
  if (is_integer()) return numerator_string();
  return numerator_string() + "/" + denominator_string();
}

bool Rational::fits_uint64() const {
  static const mpz_class kMax("18446744073709551615", 10);
  return sgn(value_) >= 0 && value_.get_num() <= kMax && value_.get_den() <= kMax;
}

namespace {
std::uint64_t to_u64(const mpz_class& z) {
  std::uint64_t out = 0;
  std::size_t count = 0;
  mpz_export(&out, &count, -1, sizeof(out), 0, 0, z.get_mpz_t());
  return count == 0 ? 0 : out;
}
}  // namespace

std::uint64_t Rational::numerator_u64() const { return to_u64(value_.get_num()); }
std::uint64_t Rational::denominator_u64() const { return to_u64(value_.get_den()); }

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) fail(ErrorCode::InvalidArgument, "division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace entroscope
