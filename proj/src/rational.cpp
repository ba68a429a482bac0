#include "w22/rational.hpp"

#include <cctype>
#include <functional>

#include "w22/errors.hpp"

namespace w22 {

Rational::Rational(long num, long den) : value_(num, den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  value_.canonicalize();
}

Rational::Rational(const BigInt& num, const BigInt& den) : value_(num, den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

namespace {

bool parse_integer(std::string_view text, BigInt& out) {
  if (text.empty()) return false;
  std::size_t i = 0;
  if (text[0] == '-' || text[0] == '+') i = 1;
  if (i == text.size()) return false;
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) return false;
  }
  std::string digits(text.substr(i));
  out.set_str(digits, 10);
  if (text[0] == '-') out = -out;
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  BigInt num, den = 1;
  bool ok = false;
  if (slash == std::string_view::npos) {
    ok = parse_integer(text, num);
  } else {
    std::string_view d = text.substr(slash + 1);
    ok = parse_integer(text.substr(0, slash), num) && !d.empty() && d[0] != '-' && d[0] != '+' &&
         parse_integer(d, den);
  }
  if (!ok) throw ParseError("not a rational \"p/q\": '" + std::string(text) + "'");
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string Rational::str() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::optional<Rational> Rational::sqrt_exact() const {
  if (sign() < 0) return std::nullopt;
  BigInt n = num(), d = den();
  if (!is_perfect_square(n) || !is_perfect_square(d)) return std::nullopt;
  BigInt rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return Rational(rn, rd);
}

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
  if (o.is_zero()) throw DomainError("division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::size_t Rational::hash() const {
  std::hash<std::string> h;
  // Small values dominate in practice; fall back to the text form for big ones.
  if (value_.get_num().fits_slong_p() && value_.get_den().fits_slong_p()) {
    std::size_t a = static_cast<std::size_t>(value_.get_num().get_si());
    std::size_t b = static_cast<std::size_t>(value_.get_den().get_si());
    return a * 0x9E3779B97F4A7C15ULL ^ (b + (a << 6) + (a >> 2));
  }
  return h(str());
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

bool is_perfect_square(const BigInt& n) {
  if (sgn(n) < 0) return false;
  return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

}  // namespace w22
