#pragma once

#include <string>
#include <vector>

#include "ackdec/lattice.hpp"
#include "ackdec/rational.hpp"

namespace ackdec {

/// Interpolation weights of the induction-on-scales step for a down-set of
/// degree k >= 2. Indexing follows the subscripts: q, t valid for 1..k,
/// alpha for 0..k-1 (alpha[0] = 0), beta for 1..k (beta[1] = beta[k] = 1).
struct ScaleParameters {
  int k = 0;
  std::vector<Rational> q, t, alpha, beta;
};

/// q_l = max(2, p K_l/K_k), t_l = max(2, p n_l/n_k); alpha_l and beta_l solve
///   n_k/n_l = alpha_l n_k/n_{l+1} + (1 - alpha_l) K_k/K_l,
///   K_k/K_l = (1 - beta_l) K_k/K_{l-1} + beta_l n_k/n_l.
/// Rejects degree < 2 and p < 2.
ScaleParameters scale_parameters(const ExponentSet& set, const Rational& p);

/// The 2(k-1) x 2(k-1) inequality-system matrix. Rows/columns are labeled
/// q(1)..q(k-1), t(1)..t(k-1) in that order.
struct InductionMatrix {
  int k = 0;
  std::vector<std::vector<Rational>> m;

  int size() const { return 2 * (k - 1); }
  int q_index(int l) const { return l - 1; }
  int t_index(int l) const { return (k - 1) + l - 1; }
  std::string label(int idx) const;
};

/// Entries are determined by the profile alone; p is accepted for interface
/// symmetry and does not influence the result.
InductionMatrix build_matrix(const ExponentSet& set, const Rational& p);

/// The explicit positive fixed vector: v_{q(l)} = K_l/(l+1), v_{t(l)} = n_l.
std::vector<Rational> pf_vector(const ExponentSet& set);

struct IdentityReport {
  std::vector<Rational> fixed_point_residual; // Mv - v, coordinate order as labels
  Rational total_loss_residual;               // sum v_{q(l)}/l - v_{t(k-1)} alpha_{k-1}
  Rational total_loss_lhs;
  Rational total_loss_rhs;
  Rational total_loss_expected; // n_{k-1} - K_{k-1}/k
  bool all_zero() const;
};

IdentityReport verify_identities(const ExponentSet& set, const Rational& p);

/// Checks the sparsity pattern against the inequality graph: the only edges are
/// t(l)->q(l), q(l+1)->q(l), q(l)->t(l), t(l-1)->t(l), and the graph is
/// 2-colorable by level parity (period two).
bool figure_pattern_ok(const InductionMatrix& m);

} // namespace ackdec
