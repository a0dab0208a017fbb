#include "ackdec/polynomial.hpp"

#include <stdexcept>

namespace ackdec {

int cmp_by_order(const MultiIndex& a, const MultiIndex& b, MonomialOrder order) {
  return order == MonomialOrder::lex ? cmp_lex(a, b) : cmp_grlex(a, b);
}

Polynomial::Polynomial(int dim, const MultiIndex& exp, Int coeff) : dim_(dim) {
  add_term(exp, coeff);
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.total());
  return d;
}

void Polynomial::add_term(const MultiIndex& exp, const Int& coeff) {
  if (exp.dim() != dim_) throw std::invalid_argument("polynomial: exponent dimension mismatch");
  if (coeff == 0) return;
  auto it = terms_.find(exp);
  if (it == terms_.end()) {
    terms_.emplace(exp, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r(dim_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (dim_ != o.dim_) throw std::invalid_argument("polynomial: dimension mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (dim_ != o.dim_) throw std::invalid_argument("polynomial: dimension mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("polynomial: dimension mismatch");
  Polynomial r(a.dim_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      std::vector<int> e(static_cast<size_t>(a.dim_));
      for (int i = 0; i < a.dim_; ++i) e[static_cast<size_t>(i)] = ea[i] + eb[i];
      r.add_term(MultiIndex(e), ca * cb);
    }
  return r;
}

Polynomial Polynomial::derivative(const MultiIndex& j) const {
  if (j.dim() != dim_) throw std::invalid_argument("polynomial: derivative index dimension mismatch");
  Polynomial r(dim_);
  for (const auto& [e, c] : terms_) {
    Int mult = 1;
    bool vanish = false;
    std::vector<int> out(static_cast<size_t>(dim_));
    for (int m = 0; m < dim_; ++m) {
      if (e[m] < j[m]) {
        vanish = true;
        break;
      }
      mult *= falling_factorial(e[m], j[m]);
      out[static_cast<size_t>(m)] = e[m] - j[m];
    }
    if (!vanish) r.add_term(MultiIndex(out), c * mult);
  }
  return r;
}

Rational Polynomial::eval(std::span<const Rational> point) const {
  if (static_cast<int>(point.size()) != dim_)
    throw std::invalid_argument("polynomial: evaluation point dimension mismatch");
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational term{c};
    for (int m = 0; m < dim_; ++m)
      for (int rep = 0; rep < e[m]; ++rep) term *= point[static_cast<size_t>(m)];
    acc += term;
  }
  return acc;
}

std::pair<MultiIndex, Int> Polynomial::leading(MonomialOrder order) const {
  if (terms_.empty()) throw std::logic_error("polynomial: leading term of zero");
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
    if (cmp_by_order(it->first, best->first, order) > 0) best = it;
  return {best->first, best->second};
}

Polynomial Polynomial::divexact(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw std::logic_error("polynomial: division by zero");
  Polynomial rem = f;
  Polynomial quot(f.dim());
  auto [ge, gc] = g.leading(MonomialOrder::grlex);
  while (!rem.is_zero()) {
    auto [re, rc] = rem.leading(MonomialOrder::grlex);
    std::vector<int> diff(static_cast<size_t>(f.dim()));
    for (int m = 0; m < f.dim(); ++m) {
      diff[static_cast<size_t>(m)] = re[m] - ge[m];
      if (diff[static_cast<size_t>(m)] < 0) throw std::logic_error("polynomial: inexact division");
    }
    Int q;
    Int r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rc.get_mpz_t(), gc.get_mpz_t());
    if (r != 0) throw std::logic_error("polynomial: inexact coefficient division");
    Polynomial t(f.dim(), MultiIndex(diff), q);
    quot += t;
    rem -= t * g;
  }
  return quot;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  // Descending graded-lex reads most significant term first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Int abs_c = abs(c);
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    std::string mono;
    for (int m = 0; m < dim_; ++m) {
      if (e[m] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += dim_ == 1 ? "t" : "t" + std::to_string(m + 1);
      if (e[m] > 1) mono += "^" + std::to_string(e[m]);
    }
    if (mono.empty()) {
      s += abs_c.get_str();
    } else {
      if (abs_c != 1) s += abs_c.get_str() + "*";
      s += mono;
    }
  }
  return s;
}

} // namespace ackdec
