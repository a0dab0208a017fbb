#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ackdec/rational.hpp"

namespace ackdec {

/// Multi-index in N^d. Entries are nonnegative exponents.
struct MultiIndex {
  std::vector<int> e;

  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> entries);
  MultiIndex(std::initializer_list<int> entries) : MultiIndex(std::vector<int>(entries)) {}

  int dim() const { return static_cast<int>(e.size()); }
  int total() const; // |i| = sum of entries
  bool is_zero() const;
  int operator[](int i) const { return e[static_cast<size_t>(i)]; }

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.e == b.e; }
  friend bool operator!=(const MultiIndex& a, const MultiIndex& b) { return a.e != b.e; }

  std::string str() const; // "(1,0)"; one-dimensional indices print bare: "2"
};

/// Componentwise (product) order a <= b.
bool dominated_by(const MultiIndex& a, const MultiIndex& b);

int cmp_lex(const MultiIndex& a, const MultiIndex& b);
int cmp_grlex(const MultiIndex& a, const MultiIndex& b); // by |i|, then lex

struct GrlexLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const { return cmp_grlex(a, b) < 0; }
};

/// Cap box k = (k_1,...,k_d), all caps >= 1. d = 0 (empty) is allowed.
struct KBox {
  std::vector<int> caps;

  KBox() = default;
  explicit KBox(std::vector<int> c);
  KBox(std::initializer_list<int> c) : KBox(std::vector<int>(c)) {}

  int dim() const { return static_cast<int>(caps.size()); }
  long long cap_sum() const;
  bool sorted_ascending() const;
  KBox sorted() const;
  KBox erase(int j) const; // deletes the j-th cap, 1-based
  std::string str() const; // "[1,3]"
};

/// Finite set of nonzero multi-indices in canonical (graded lexicographic) order.
class ExponentSet {
public:
  ExponentSet() = default;

  /// Sorts, deduplicates; rejects the zero index and dimension mismatches.
  static ExponentSet from_elements(int dim, std::vector<MultiIndex> elems);

  /// D(caps, <= deg_cap) = { i : 0 < i <= caps, 1 <= |i| <= deg_cap }.
  static ExponentSet box(const KBox& caps, int deg_cap);

  int dim() const { return dim_; }
  int degree() const { return degree_; } // max |i|, 0 if empty
  int rank() const { return static_cast<int>(elems_.size()); }
  bool empty() const { return elems_.empty(); }
  const std::vector<MultiIndex>& elements() const { return elems_; }
  bool contains(const MultiIndex& i) const;

  /// First pair (j, i) with i in the set, 0 != j <= i, j missing; nullopt if down-set.
  std::optional<std::pair<MultiIndex, MultiIndex>> down_set_violation() const;
  bool is_down_set() const { return !down_set_violation().has_value(); }

  /// Recovers (caps, deg_cap) when the set is exactly a box set.
  std::optional<std::pair<KBox, int>> as_box() const;

  std::vector<MultiIndex> sublevel(int l) const; // D cap S_l
  std::vector<MultiIndex> level(int l) const;    // D cap V_l
  long long homogeneous_dimension() const;       // K(D) = sum |i|
  int essential_dim() const;                     // coordinates used by some element

  friend bool operator==(const ExponentSet& a, const ExponentSet& b) {
    return a.dim_ == b.dim_ && a.elems_ == b.elems_;
  }

private:
  int dim_ = 0;
  int degree_ = 0;
  std::vector<MultiIndex> elems_;
};

/// n[l] = |D cap S_l|, K[l] = K(D cap S_l), lambda[l] = |D cap V_l|, l = 0..deg D.
struct LevelProfile {
  std::vector<long long> n, K, lambda;
  int degree() const { return static_cast<int>(n.size()) - 1; }
};

/// Rejects non-down-sets.
LevelProfile profile(const ExponentSet& set);

/// Level cardinalities Lambda^k_0..Lambda^k_{l_max} of the full box (level 0 counts
/// the zero index). Computed by the cap-by-cap recursion; negative subscripts read 0.
std::vector<long long> level_counts(const KBox& caps, int l_max);

/// P_j deletes the j-th coordinate (1-based); the zero image is dropped.
ExponentSet project(const ExponentSet& set, int j);

/// { p in ambient : exists b in B with b <= p }.
std::vector<MultiIndex> upset_closure(std::span<const MultiIndex> B,
                                      std::span<const MultiIndex> ambient);

/// { a' : (a', j_value) in set }, slicing at the last coordinate.
std::vector<MultiIndex> slice(std::span<const MultiIndex> set, int j_value);

/// V^caps_l and S^caps_l as element lists (V^caps_0 = {0}).
std::vector<MultiIndex> box_level(const KBox& caps, int l);
std::vector<MultiIndex> box_sublevel(const KBox& caps, int l);

/// Down-set predicate for plain index lists (the zero index is permitted here).
bool plain_is_down_set(std::span<const MultiIndex> elems);

std::string elements_str(std::span<const MultiIndex> elems); // "{(1,0),(0,1)}"

} // namespace ackdec
