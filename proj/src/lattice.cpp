#include "ackdec/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ackdec {

MultiIndex::MultiIndex(std::vector<int> entries) : e(std::move(entries)) {
  for (int v : e)
    if (v < 0) throw std::invalid_argument("multi-index: negative entry");
}

int MultiIndex::total() const {
  return std::accumulate(e.begin(), e.end(), 0);
}

bool MultiIndex::is_zero() const {
  return std::all_of(e.begin(), e.end(), [](int v) { return v == 0; });
}

std::string MultiIndex::str() const {
  if (e.size() == 1) return std::to_string(e[0]);
  std::string s = "(";
  for (size_t i = 0; i < e.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(e[i]);
  }
  return s + ")";
}

bool dominated_by(const MultiIndex& a, const MultiIndex& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("product order: dimension mismatch");
  for (int i = 0; i < a.dim(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

int cmp_lex(const MultiIndex& a, const MultiIndex& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("lex: dimension mismatch");
  for (int i = 0; i < a.dim(); ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

int cmp_grlex(const MultiIndex& a, const MultiIndex& b) {
  int ta = a.total(), tb = b.total();
  if (ta != tb) return ta < tb ? -1 : 1;
  return cmp_lex(a, b);
}

KBox::KBox(std::vector<int> c) : caps(std::move(c)) {
  for (int v : caps)
    if (v < 1) throw std::invalid_argument("box: caps must be >= 1");
}

long long KBox::cap_sum() const {
  return std::accumulate(caps.begin(), caps.end(), 0LL);
}

bool KBox::sorted_ascending() const {
  return std::is_sorted(caps.begin(), caps.end());
}

KBox KBox::sorted() const {
  KBox b = *this;
  std::sort(b.caps.begin(), b.caps.end());
  return b;
}

KBox KBox::erase(int j) const {
  if (j < 1 || j > dim()) throw std::invalid_argument("box: cap index out of range");
  KBox b = *this;
  b.caps.erase(b.caps.begin() + (j - 1));
  return b;
}

std::string KBox::str() const {
  std::string s = "[";
  for (size_t i = 0; i < caps.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(caps[i]);
  }
  return s + "]";
}

ExponentSet ExponentSet::from_elements(int dim, std::vector<MultiIndex> elems) {
  if (dim < 0) throw std::invalid_argument("exponent set: negative dimension");
  for (const auto& i : elems) {
    if (i.dim() != dim) throw std::invalid_argument("exponent set: element dimension mismatch");
    if (i.is_zero()) throw std::invalid_argument("exponent set: zero index not allowed");
  }
  std::sort(elems.begin(), elems.end(), GrlexLess{});
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  ExponentSet s;
  s.dim_ = dim;
  s.degree_ = elems.empty() ? 0 : elems.back().total();
  s.elems_ = std::move(elems);
  return s;
}

// Enumerates { a : a <= caps } and applies f to each.
template <typename F>
static void for_each_in_box(const KBox& caps, F&& f) {
  std::vector<int> cur(static_cast<size_t>(caps.dim()), 0);
  while (true) {
    f(cur);
    int i = caps.dim() - 1;
    while (i >= 0 && cur[static_cast<size_t>(i)] == caps.caps[static_cast<size_t>(i)]) {
      cur[static_cast<size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++cur[static_cast<size_t>(i)];
  }
}

ExponentSet ExponentSet::box(const KBox& caps, int deg_cap) {
  if (deg_cap < 1) throw std::invalid_argument("box set: deg_cap must be >= 1");
  std::vector<MultiIndex> elems;
  for_each_in_box(caps, [&](const std::vector<int>& a) {
    MultiIndex i(a);
    int t = i.total();
    if (t >= 1 && t <= deg_cap) elems.push_back(std::move(i));
  });
  return from_elements(caps.dim(), std::move(elems));
}

bool ExponentSet::contains(const MultiIndex& i) const {
  return std::binary_search(elems_.begin(), elems_.end(), i, GrlexLess{});
}

std::optional<std::pair<MultiIndex, MultiIndex>> ExponentSet::down_set_violation() const {
  for (const auto& i : elems_) {
    // Walk all nonzero j <= i componentwise.
    std::vector<int> j(i.e.size(), 0);
    while (true) {
      int c = i.dim() - 1;
      while (c >= 0 && j[static_cast<size_t>(c)] == i[c]) {
        j[static_cast<size_t>(c)] = 0;
        --c;
      }
      if (c < 0) break;
      ++j[static_cast<size_t>(c)];
      MultiIndex cand(j);
      if (!cand.is_zero() && cand != i && !contains(cand)) return std::make_pair(cand, i);
    }
  }
  return std::nullopt;
}

std::optional<std::pair<KBox, int>> ExponentSet::as_box() const {
  if (elems_.empty() || dim_ == 0) return std::nullopt;
  std::vector<int> caps(static_cast<size_t>(dim_), 0);
  for (const auto& i : elems_)
    for (int c = 0; c < dim_; ++c) caps[static_cast<size_t>(c)] = std::max(caps[static_cast<size_t>(c)], i[c]);
  for (int c : caps)
    if (c == 0) return std::nullopt;
  KBox box(caps);
  ExponentSet b = ExponentSet::box(box, degree_);
  if (b == *this) return std::make_pair(box, degree_);
  return std::nullopt;
}

std::vector<MultiIndex> ExponentSet::sublevel(int l) const {
  std::vector<MultiIndex> r;
  for (const auto& i : elems_)
    if (i.total() <= l) r.push_back(i);
  return r;
}

std::vector<MultiIndex> ExponentSet::level(int l) const {
  std::vector<MultiIndex> r;
  for (const auto& i : elems_)
    if (i.total() == l) r.push_back(i);
  return r;
}

long long ExponentSet::homogeneous_dimension() const {
  long long k = 0;
  for (const auto& i : elems_) k += i.total();
  return k;
}

int ExponentSet::essential_dim() const {
  int n = 0;
  for (int c = 0; c < dim_; ++c)
    for (const auto& i : elems_)
      if (i[c] > 0) {
        ++n;
        break;
      }
  return n;
}

LevelProfile profile(const ExponentSet& set) {
  if (auto v = set.down_set_violation())
    throw std::invalid_argument("profile: not a down-set, missing " + v->first.str() +
                                " below " + v->second.str());
  int deg = set.degree();
  LevelProfile p;
  p.n.assign(static_cast<size_t>(deg) + 1, 0);
  p.K.assign(static_cast<size_t>(deg) + 1, 0);
  p.lambda.assign(static_cast<size_t>(deg) + 1, 0);
  for (const auto& i : set.elements()) p.lambda[static_cast<size_t>(i.total())]++;
  for (int l = 1; l <= deg; ++l) {
    p.n[static_cast<size_t>(l)] = p.n[static_cast<size_t>(l) - 1] + p.lambda[static_cast<size_t>(l)];
    p.K[static_cast<size_t>(l)] = p.K[static_cast<size_t>(l) - 1] + static_cast<long long>(l) * p.lambda[static_cast<size_t>(l)];
  }
  return p;
}

std::vector<long long> level_counts(const KBox& caps, int l_max) {
  if (l_max < 0) throw std::invalid_argument("level_counts: l_max must be >= 0");
  // Lambda^() is 1 at level 0; extend one cap at a time.
  std::vector<long long> lam(static_cast<size_t>(l_max) + 1, 0);
  lam[0] = 1;
  for (int cap : caps.caps) {
    std::vector<long long> next(static_cast<size_t>(l_max) + 1, 0);
    for (int l = 0; l <= l_max; ++l) {
      long long s = 0;
      for (int j = 0; j <= cap; ++j)
        if (l - j >= 0) s += lam[static_cast<size_t>(l - j)];
      next[static_cast<size_t>(l)] = s;
    }
    lam = std::move(next);
  }
  return lam;
}

ExponentSet project(const ExponentSet& set, int j) {
  if (j < 1 || j > set.dim()) throw std::invalid_argument("project: coordinate out of range");
  std::vector<MultiIndex> imgs;
  for (const auto& i : set.elements()) {
    std::vector<int> v = i.e;
    v.erase(v.begin() + (j - 1));
    MultiIndex img(v);
    if (!img.is_zero()) imgs.push_back(std::move(img));
  }
  return ExponentSet::from_elements(set.dim() - 1, std::move(imgs));
}

std::vector<MultiIndex> upset_closure(std::span<const MultiIndex> B,
                                      std::span<const MultiIndex> ambient) {
  std::vector<MultiIndex> r;
  for (const auto& p : ambient)
    for (const auto& b : B)
      if (dominated_by(b, p)) {
        r.push_back(p);
        break;
      }
  return r;
}

std::vector<MultiIndex> slice(std::span<const MultiIndex> set, int j_value) {
  std::vector<MultiIndex> r;
  for (const auto& a : set) {
    if (a.dim() < 1) throw std::invalid_argument("slice: needs dimension >= 1");
    if (a.e.back() == j_value)
      r.emplace_back(std::vector<int>(a.e.begin(), a.e.end() - 1));
  }
  std::sort(r.begin(), r.end(), GrlexLess{});
  r.erase(std::unique(r.begin(), r.end()), r.end());
  return r;
}

std::vector<MultiIndex> box_level(const KBox& caps, int l) {
  std::vector<MultiIndex> r;
  for_each_in_box(caps, [&](const std::vector<int>& a) {
    MultiIndex i(a);
    if (i.total() == l) r.push_back(std::move(i));
  });
  std::sort(r.begin(), r.end(), GrlexLess{});
  return r;
}

std::vector<MultiIndex> box_sublevel(const KBox& caps, int l) {
  std::vector<MultiIndex> r;
  for_each_in_box(caps, [&](const std::vector<int>& a) {
    MultiIndex i(a);
    int t = i.total();
    if (t >= 1 && t <= l) r.push_back(std::move(i));
  });
  std::sort(r.begin(), r.end(), GrlexLess{});
  return r;
}

bool plain_is_down_set(std::span<const MultiIndex> elems) {
  auto contains = [&](const MultiIndex& x) {
    return std::find(elems.begin(), elems.end(), x) != elems.end();
  };
  for (const auto& i : elems) {
    std::vector<int> j = i.e;
    for (size_t c = 0; c < j.size(); ++c) {
      if (j[c] == 0) continue;
      std::vector<int> pred = j;
      pred[c]--;
      if (!contains(MultiIndex(pred))) return false;
    }
  }
  return true;
}

std::string elements_str(std::span<const MultiIndex> elems) {
  std::string s = "{";
  for (size_t i = 0; i < elems.size(); ++i) {
    if (i) s += ',';
    s += elems[i].str();
  }
  return s + "}";
}

} // namespace ackdec
