#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "ackdec/lattice.hpp"
#include "ackdec/rational.hpp"

namespace ackdec {

/// K(D(caps, <= deg)) and |D(caps, <= deg)| without materializing the set.
long long box_homdim(const KBox& caps, int deg);
long long box_rank(const KBox& caps, int deg);

struct ClosedForm {
  Rational value;
  int argmax_j = 0; // 0 means the d/2 branch
};

/// Memoizing evaluator for the exponent recursions. One instance per evaluation
/// context; results are independent of sharing, so a fresh instance per query
/// is always valid.
class ExponentEvaluator {
public:
  /// Recursive exponent of the scale-by-scale upper bound. Rejects p < 2 and
  /// non-down-sets. Box sets take a compact recursion over (caps, degree).
  Rational gamma_tilde(const ExponentSet& set, const Rational& p);
  /// Same recursion with +1/2 in place of +1/p on the projection branch.
  Rational gamma_tilde_l2(const ExponentSet& set, const Rational& p);

  Rational gamma_tilde_box(const KBox& caps, int deg_cap, const Rational& p);
  Rational gamma_tilde_l2_box(const KBox& caps, int deg_cap, const Rational& p);

  /// Lower-bound recursion from the solution-counting side. Rejects p < 2.
  Rational gamma_lower(const KBox& caps, int deg_cap, const Rational& p);

  /// Closed form over j with the achieving branch. Caps must be sorted ascending.
  ClosedForm gamma_closed(const KBox& caps, int deg_cap, const Rational& p);

  /// Predicted solution-count exponent 2s * gamma_tilde(p = 2s).
  Rational js_exponent(const KBox& caps, int deg_cap, long s);

  /// Memo contents in canonical key order (for the report trace).
  std::vector<std::pair<std::string, Rational>> trace() const;

private:
  Rational tilde_general(const ExponentSet& set, const Rational& p, bool l2);
  Rational tilde_box(KBox caps, int deg_cap, const Rational& p, bool l2);

  struct RKey {
    std::string set;
    Rational p;
    bool l2;
    bool operator<(const RKey& o) const {
      if (set != o.set) return set < o.set;
      if (int c = p.cmp(o.p); c != 0) return c < 0;
      return l2 < o.l2;
    }
  };
  std::map<RKey, Rational> memo_;
  std::map<RKey, Rational> lower_memo_;
};

Rational gamma_tilde(const ExponentSet& set, const Rational& p);
Rational gamma_tilde_l2(const ExponentSet& set, const Rational& p);
Rational gamma_lower(const KBox& caps, int deg_cap, const Rational& p);
ClosedForm gamma_closed(const KBox& caps, int deg_cap, const Rational& p);
Rational js_exponent(const KBox& caps, int deg_cap, long s);

struct ExponentReport {
  std::string set_literal;
  Rational p;
  Rational gamma_tilde;
  Rational gamma_l2;
  bool is_box = false;
  Rational gamma_lower;  // box sets only
  Rational gamma_closed; // box sets only
  int argmax_j = 0;
  bool nonbox_degree_one = false; // degree-1 query that is not a full unit-vector set
  std::vector<std::pair<std::string, Rational>> trace;
};

ExponentReport exponent_report(const ExponentSet& set, const Rational& p, bool with_trace = false);

struct AuditFinding {
  std::string check;
  std::string detail;
};

struct AuditResult {
  long long checks = 0;
  std::vector<AuditFinding> failures;
  bool pass() const { return failures.empty(); }
};

/// Per-configuration equality and consistency audit:
///   (a) gamma_tilde = gamma_lower = gamma_closed on the box set,
///   (b) gamma_lower is componentwise antitone in caps,
///   (c) gamma(caps, k-1, p) <= gamma(caps, k, p K_k / K_{k-1}),
///   (d) gamma_tilde >= gamma_lower.
AuditResult audit_config(ExponentEvaluator& ev, const KBox& sorted_caps, int deg_cap,
                         std::span<const Rational> p_grid);

/// Runs audit_config over every sorted caps with d <= max_d, entries <= max_cap,
/// and 1 <= deg_cap <= min(max_deg, sum caps).
AuditResult audit_corpus(int max_d, int max_cap, int max_deg, std::span<const Rational> p_grid);

struct PaperExampleRow {
  std::string id;
  std::string params;
  std::string computed;
  std::string expected;
  bool pass = false;
};

/// Regression table for the worked closed-form families (classical one-dimensional
/// systems, equal-cap boxes, d=2 with k1=1, full boxes, binary systems, the cube
/// argmax case).
std::vector<PaperExampleRow> paper_examples();

} // namespace ackdec
