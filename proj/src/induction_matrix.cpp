#include "ackdec/induction_matrix.hpp"

#include <stdexcept>

namespace ackdec {

static LevelProfile checked_profile(const ExponentSet& set) {
  if (set.degree() < 2)
    throw std::invalid_argument("induction matrix: set degree must be >= 2");
  return profile(set);
}

ScaleParameters scale_parameters(const ExponentSet& set, const Rational& p) {
  if (p < Rational(2)) throw std::invalid_argument("scale_parameters: requires p >= 2");
  LevelProfile pr = checked_profile(set);
  const int k = set.degree();
  auto n = [&](int l) { return Rational(pr.n[static_cast<size_t>(l)]); };
  auto K = [&](int l) { return Rational(pr.K[static_cast<size_t>(l)]); };

  ScaleParameters sp;
  sp.k = k;
  sp.q.assign(static_cast<size_t>(k) + 1, Rational(0));
  sp.t.assign(static_cast<size_t>(k) + 1, Rational(0));
  sp.alpha.assign(static_cast<size_t>(k), Rational(0));
  sp.beta.assign(static_cast<size_t>(k) + 1, Rational(0));

  for (int l = 1; l <= k; ++l) {
    sp.q[static_cast<size_t>(l)] = max2(Rational(2), p * K(l) / K(k));
    sp.t[static_cast<size_t>(l)] = max2(Rational(2), p * n(l) / n(k));
  }
  // alpha_l = (n_k/n_l - K_k/K_l) / (n_k/n_{l+1} - K_k/K_l); the denominator is
  // strictly negative since K_k/K_l >= n_k/n_l > n_k/n_{l+1}.
  sp.alpha[0] = Rational(0);
  for (int l = 1; l < k; ++l)
    sp.alpha[static_cast<size_t>(l)] =
        (n(k) / n(l) - K(k) / K(l)) / (n(k) / n(l + 1) - K(k) / K(l));
  sp.beta[1] = Rational(1);
  for (int l = 2; l < k; ++l)
    sp.beta[static_cast<size_t>(l)] =
        (K(k) / K(l) - K(k) / K(l - 1)) / (n(k) / n(l) - K(k) / K(l - 1));
  sp.beta[static_cast<size_t>(k)] = Rational(1);
  return sp;
}

std::string InductionMatrix::label(int idx) const {
  int half = k - 1;
  if (idx < half) return "q(" + std::to_string(idx + 1) + ")";
  return "t(" + std::to_string(idx - half + 1) + ")";
}

InductionMatrix build_matrix(const ExponentSet& set, const Rational& p) {
  ScaleParameters sp = scale_parameters(set, p);
  const int k = sp.k;
  InductionMatrix M;
  M.k = k;
  M.m.assign(static_cast<size_t>(M.size()), std::vector<Rational>(static_cast<size_t>(M.size()), Rational(0)));

  for (int l = 1; l <= k - 1; ++l) {
    auto& qrow = M.m[static_cast<size_t>(M.q_index(l))];
    qrow[static_cast<size_t>(M.t_index(l))] = Rational(1) - sp.alpha[static_cast<size_t>(l)];
    if (l <= k - 2)
      qrow[static_cast<size_t>(M.q_index(l + 1))] =
          Rational(l + 2, l + 1) * (Rational(1) - sp.beta[static_cast<size_t>(l) + 1]);

    auto& trow = M.m[static_cast<size_t>(M.t_index(l))];
    trow[static_cast<size_t>(M.q_index(l))] = Rational(l + 1, l) * sp.beta[static_cast<size_t>(l)];
    if (l >= 2)
      trow[static_cast<size_t>(M.t_index(l - 1))] = sp.alpha[static_cast<size_t>(l) - 1];
  }
  return M;
}

std::vector<Rational> pf_vector(const ExponentSet& set) {
  LevelProfile pr = checked_profile(set);
  const int k = set.degree();
  std::vector<Rational> v(static_cast<size_t>(2 * (k - 1)), Rational(0));
  for (int l = 1; l <= k - 1; ++l) {
    v[static_cast<size_t>(l - 1)] = Rational(pr.K[static_cast<size_t>(l)]) / Rational(l + 1);
    v[static_cast<size_t>(k - 1 + l - 1)] = Rational(pr.n[static_cast<size_t>(l)]);
  }
  return v;
}

IdentityReport verify_identities(const ExponentSet& set, const Rational& p) {
  InductionMatrix M = build_matrix(set, p);
  ScaleParameters sp = scale_parameters(set, p);
  std::vector<Rational> v = pf_vector(set);
  LevelProfile pr = profile(set);
  const int k = M.k;

  IdentityReport rep;
  rep.fixed_point_residual.assign(static_cast<size_t>(M.size()), Rational(0));
  for (int r = 0; r < M.size(); ++r) {
    Rational acc(0);
    for (int c = 0; c < M.size(); ++c) acc += M.m[static_cast<size_t>(r)][static_cast<size_t>(c)] * v[static_cast<size_t>(c)];
    rep.fixed_point_residual[static_cast<size_t>(r)] = acc - v[static_cast<size_t>(r)];
  }

  rep.total_loss_lhs = Rational(0);
  for (int l = 1; l <= k - 1; ++l)
    rep.total_loss_lhs += v[static_cast<size_t>(M.q_index(l))] / Rational(l);
  rep.total_loss_rhs = v[static_cast<size_t>(M.t_index(k - 1))] * sp.alpha[static_cast<size_t>(k) - 1];
  rep.total_loss_residual = rep.total_loss_lhs - rep.total_loss_rhs;
  rep.total_loss_expected =
      Rational(pr.n[static_cast<size_t>(k) - 1]) - Rational(pr.K[static_cast<size_t>(k) - 1]) / Rational(k);
  return rep;
}

bool IdentityReport::all_zero() const {
  for (const auto& r : fixed_point_residual)
    if (r != Rational(0)) return false;
  return total_loss_residual == Rational(0) && total_loss_lhs == total_loss_expected &&
         total_loss_rhs == total_loss_expected;
}

bool figure_pattern_ok(const InductionMatrix& M) {
  const int k = M.k;
  auto allowed = [&](int r, int c) {
    for (int l = 1; l <= k - 1; ++l) {
      if (r == M.q_index(l) && c == M.t_index(l)) return true;                  // t(l) -> q(l)
      if (l <= k - 2 && r == M.q_index(l) && c == M.q_index(l + 1)) return true; // q(l+1) -> q(l)
      if (r == M.t_index(l) && c == M.q_index(l)) return true;                  // q(l) -> t(l)
      if (l >= 2 && r == M.t_index(l) && c == M.t_index(l - 1)) return true;    // t(l-1) -> t(l)
    }
    return false;
  };
  // Level parity 2-colors the graph: q(l) gets l, t(l) gets l+1.
  auto color = [&](int idx) {
    int half = k - 1;
    return idx < half ? (idx + 1) % 2 : (idx - half + 2) % 2;
  };
  for (int r = 0; r < M.size(); ++r)
    for (int c = 0; c < M.size(); ++c) {
      const Rational& x = M.m[static_cast<size_t>(r)][static_cast<size_t>(c)];
      if (x < Rational(0)) return false;
      if (x != Rational(0)) {
        if (!allowed(r, c)) return false;
        if (color(r) == color(c)) return false;
      }
    }
  return true;
}

} // namespace ackdec
