#pragma once

#include <gmpxx.h>
#include <optional>
#include <string>
#include <string_view>

namespace ackdec {

using Int = mpz_class;

Int int_pow(const Int& base, unsigned long exp);
Int falling_factorial(long n, long k); // n (n-1) ... (n-k+1)

/// Exact rational scalar. Always reduced, denominator > 0.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}
  Rational(const Int& n) : v_(n) {}
  Rational(long num, long den);
  Rational(const Int& num, const Int& den);

  static std::optional<Rational> parse(std::string_view s); // "5/8", "-3", "12"

  Int num() const { return v_.get_num(); }
  Int den() const { return v_.get_den(); }
  bool is_integer() const { return v_.get_den() == 1; }
  double to_double() const { return v_.get_d(); }

  std::string str() const;          // "5/8", integers without denominator
  std::string fraction_str() const; // always "num/den"

  Rational operator-() const;
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  int cmp(const Rational& o) const { return ::cmp(v_, o.v_); }

private:
  mpq_class v_;
};

inline const Rational& max2(const Rational& a, const Rational& b) { return a < b ? b : a; }

} // namespace ackdec
