#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "ackdec/lattice.hpp"
#include "ackdec/rational.hpp"

namespace ackdec {

enum class MonomialOrder { lex, grlex };

int cmp_by_order(const MultiIndex& a, const MultiIndex& b, MonomialOrder order);

/// Sparse multivariate polynomial with integer coefficients. Zero coefficients
/// are never stored.
class Polynomial {
public:
  explicit Polynomial(int dim) : dim_(dim) {}
  Polynomial(int dim, const MultiIndex& exp, Int coeff);

  int dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  int total_degree() const; // -1 for the zero polynomial
  const std::map<MultiIndex, Int, GrlexLess>& terms() const { return terms_; }

  void add_term(const MultiIndex& exp, const Int& coeff);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

  /// Formal derivative d^j (with the falling-factorial multipliers).
  Polynomial derivative(const MultiIndex& j) const;

  Rational eval(std::span<const Rational> point) const;

  std::pair<MultiIndex, Int> leading(MonomialOrder order) const; // throws on zero

  /// Exact quotient f/g; throws std::logic_error when g does not divide f.
  static Polynomial divexact(const Polynomial& f, const Polynomial& g);

  std::string str() const; // "2*t1^2*t2 - t2" (variable t for d = 1)

private:
  int dim_;
  std::map<MultiIndex, Int, GrlexLess> terms_;
};

struct PolyMatrix {
  int rows = 0, cols = 0, dim = 0;
  std::vector<Polynomial> a;

  PolyMatrix() = default;
  PolyMatrix(int r, int c, int d) : rows(r), cols(c), dim(d), a(static_cast<size_t>(r) * c, Polynomial(d)) {}
  Polynomial& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const Polynomial& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

} // namespace ackdec
