#include "ackdec/rational.hpp"

#include <stdexcept>

namespace ackdec {

Int int_pow(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Int falling_factorial(long n, long k) {
  Int r = 1;
  for (long i = 0; i < k; ++i) r *= Int(n - i);
  return r;
}

Rational::Rational(long num, long den) : Rational(Int(num), Int(den)) {}

Rational::Rational(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.v_ == 0) throw std::invalid_argument("rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

std::optional<Rational> Rational::parse(std::string_view s) {
  auto valid = [](std::string_view t) {
    if (t.empty()) return false;
    size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  std::string num, den = "1";
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = std::string(s.substr(0, slash));
    den = std::string(s.substr(slash + 1));
  } else {
    num = std::string(s);
  }
  if (!valid(num) || !valid(den)) return std::nullopt;
  Int d(den);
  if (d == 0) return std::nullopt;
  return Rational(Int(num), d);
}

std::string Rational::str() const {
  return is_integer() ? v_.get_num().get_str() : v_.get_str();
}

std::string Rational::fraction_str() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

} // namespace ackdec
