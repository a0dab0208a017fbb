#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ackdec/lattice.hpp"
#include "ackdec/polynomial.hpp"
#include "ackdec/rational.hpp"

namespace ackdec {

/// Subspace of R^(D_k) given by an integer basis over the canonical coordinate
/// labels of an exponent set. Construction rejects dependent basis rows.
class Subspace {
public:
  Subspace(const ExponentSet& ambient, std::vector<std::vector<Int>> basis);

  /// Span of unit vectors at the given coordinate labels.
  static Subspace coordinate(const ExponentSet& ambient, std::span<const MultiIndex> labels);

  const ExponentSet& ambient() const { return ambient_; }
  const std::vector<std::vector<Int>>& basis() const { return basis_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  int ambient_dim() const { return ambient_.rank(); }

  /// True when the subspace equals the span of unit vectors at exactly `labels`.
  bool is_coordinate_span(std::span<const MultiIndex> labels) const;

private:
  ExponentSet ambient_;
  std::vector<std::vector<Int>> basis_;
};

/// Rank over the rationals; destructive Gaussian elimination.
int rational_rank(std::vector<std::vector<Rational>> m);

struct EliminationStep {
  int row = 0, col = 0; // positions in the original matrix
};

/// Dual certificate for the generic rank of a polynomial matrix: a pivot
/// transcript of the fraction-free elimination (upper bound) and a rational
/// point with a nonsingular r x r minor (lower bound).
struct RankCertificate {
  int rank = 0;
  std::vector<EliminationStep> pivots;
  std::string transcript_digest;
  std::vector<Rational> witness_point;
  std::vector<int> witness_rows, witness_cols;
  Rational witness_det;
};

/// Columns d^j Phi for j in D cap S_l; rows follow the canonical order of D.
PolyMatrix tangent_columns(const ExponentSet& set, int l);

/// Entry (h, j) = d^j of sum_i v_{h,i} t^i. Rows follow the subspace basis.
PolyMatrix mv_matrix(const Subspace& V, const ExponentSet& set, int l);

/// Generic rank over the rational function field, fully certified. The witness
/// point is drawn from a deterministic sequence of increasing height.
RankCertificate generic_rank(const PolyMatrix& M);

/// Re-runs the elimination along the recorded pivots and re-evaluates the
/// witness minor; true when both certify the claimed rank.
bool replay_certificate(const PolyMatrix& M, const RankCertificate& cert);

/// Deterministic witness candidates: first the points (1,2,...,d)/(P+1) over
/// increasing primes P, then full grids (a_1,...,a_d)/(m+1) of growing height
/// (the grids make the search total: no nonzero polynomial kills a whole grid).
std::vector<Rational> witness_point(int d, int attempt);

enum class EqualityCase { none, full_or_empty, d2_second_axis, d2_first_axis };
std::string equality_case_name(EqualityCase c);

struct BlRankAudit {
  int rank = 0;
  Rational bound;        // |D_l| dim V / |D_k|
  bool strict = false;   // rank > bound
  bool equality = false; // rank == bound
  EqualityCase eq_case = EqualityCase::none;
  bool classified = true; // false flags an equality outside the known cases
  RankCertificate certificate;
};

/// Rank lower bound with equality classification for box sets, 1 <= l < k <= sum caps.
BlRankAudit bl_rank_audit(const Subspace& V, const ExponentSet& set, int l);

struct ProjectionDims {
  std::vector<int> dims; // rank of the matrix specialized at each point
  Rational rhs;          // (n_k / (n_l M)) sum_j dims[j]
  bool verdict = false;  // dim V <= rhs
};

/// Exact projection dimensions at rational points strictly inside the unit cube.
ProjectionDims projection_dims(std::span<const std::vector<Rational>> points, const Subspace& V,
                               const ExponentSet& set, int l);

struct LeadingPowers {
  std::vector<MultiIndex> powers;
  std::vector<std::vector<Int>> reduced_basis; // integer-cleared echelon rows
};

/// Basis with pairwise distinct leading powers under the chosen monomial order.
LeadingPowers leading_powers(const Subspace& V, MonomialOrder order);

struct VandermondeRank {
  int rank = 0;
  Rational bound; // |S_l| |A| / |S_l'|
  bool equality = false;
  EqualityCase eq_case = EqualityCase::none;
  bool classified = true;
};

/// Rank of (a^i) for a in A, i in S^caps_l, with A inside S^caps_{l_prime}.
VandermondeRank vandermonde_rank(std::span<const MultiIndex> A, const KBox& caps, int l,
                                 int l_prime);

/// Residue-set family R_{l; n_{l+1},...,n_d; b}. The tail lists the already
/// fixed coordinates (n_{l+1},...,n_d) in that order.
using ResidueFamily =
    std::function<std::vector<int>(int level, std::span<const int> tail, const MultiIndex& b)>;

struct SzReport {
  bool hypotheses_ok = false;
  std::string hypothesis_failure;
  bool conclusion_ok = false;
  long long A_size = 0;
  long long complement_size = 0; // |D minus upset(B)|
};

/// Verifies both hypotheses of the counting lemma by exhaustive scan over
/// [0, scan_max]^d and then checks |A| <= |D minus upset B|.
SzReport sz_check(std::span<const MultiIndex> D, std::span<const MultiIndex> A,
                  std::span<const MultiIndex> B, const ResidueFamily& R, int scan_max);

/// The extremal instance A = D minus upset(B) with R_{i;*;b} = {0,...,b_i - 1};
/// conclusion holds with equality.
SzReport sz_sharpness(std::span<const MultiIndex> D, std::span<const MultiIndex> B, int scan_max);

struct UpsetLevelReport {
  long long lhs = 0, rhs = 0; // |V_{m+1}| |T| and |V_m| |T+|
  bool ok = false;
  std::vector<MultiIndex> T_plus;
  int j_min = 0, j_max = -1;
  std::vector<Rational> A, B; // witnesses indexed j_min..j_max
  bool witnesses_ok = false;
  std::vector<std::string> witness_failures;
};

/// Level-density step |V_{m+1}||T| <= |V_m||T+| together with the witness
/// decomposition replay (split and recombination equations, both boundary
/// conditions, and nonnegativity).
UpsetLevelReport upset_level_check(const KBox& caps, int m, std::span<const MultiIndex> T);

struct SublevelDensityReport {
  long long lhs = 0, rhs = 0; // |S_l'| |B cap S_l| and |S_l| |B cap S_l'|
  bool ok = false;
  bool equality = false;
  EqualityCase eq_case = EqualityCase::none;
  bool classified = true;
  std::vector<MultiIndex> min_generators;
};

/// Up-set density across sublevel sets; B is given by generators, closed
/// within the box.
SublevelDensityReport sublevel_density_check(const KBox& caps, int l, int l_prime,
                                             std::span<const MultiIndex> B_generators);

struct DegreeBound {
  Int generic;                  // k^(k^d)
  std::optional<Int> from_rank; // k^(n_k) when a set is supplied
};

DegreeBound degree_bound(int d, int k);
DegreeBound degree_bound(const ExponentSet& set);

} // namespace ackdec
