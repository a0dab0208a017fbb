#include "ackdec/transversality.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ackdec {

namespace {

Polynomial poly_one(int dim) {
  return Polynomial(dim, MultiIndex(std::vector<int>(static_cast<size_t>(dim), 0)), 1);
}

uint64_t fnv1a64(const std::string& s) {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hex64(uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[static_cast<size_t>(i)] = digits[v & 0xf];
    v >>= 4;
  }
  return s;
}

std::string transcript_string(const std::vector<EliminationStep>& pivots, int rank) {
  std::string t;
  for (const auto& p : pivots) t += std::to_string(p.row) + "," + std::to_string(p.col) + ";";
  t += "|" + std::to_string(rank);
  return t;
}

// Full-pivot Gaussian elimination over the rationals; returns rank and the
// original row/column indices of the pivots.
struct PivotedRank {
  int rank = 0;
  std::vector<int> rows, cols;
};

PivotedRank rational_rank_pivots(std::vector<std::vector<Rational>> m) {
  int R = static_cast<int>(m.size());
  int C = R ? static_cast<int>(m[0].size()) : 0;
  std::vector<int> rowidx(static_cast<size_t>(R)), colidx(static_cast<size_t>(C));
  std::iota(rowidx.begin(), rowidx.end(), 0);
  std::iota(colidx.begin(), colidx.end(), 0);
  PivotedRank out;
  int r = 0;
  while (r < R && r < C) {
    int pi = -1, pj = -1;
    for (int i = r; i < R && pi < 0; ++i)
      for (int j = r; j < C; ++j)
        if (m[static_cast<size_t>(i)][static_cast<size_t>(j)] != Rational(0)) {
          pi = i;
          pj = j;
          break;
        }
    if (pi < 0) break;
    std::swap(m[static_cast<size_t>(r)], m[static_cast<size_t>(pi)]);
    std::swap(rowidx[static_cast<size_t>(r)], rowidx[static_cast<size_t>(pi)]);
    if (pj != r) {
      for (int i = 0; i < R; ++i) std::swap(m[static_cast<size_t>(i)][static_cast<size_t>(r)], m[static_cast<size_t>(i)][static_cast<size_t>(pj)]);
      std::swap(colidx[static_cast<size_t>(r)], colidx[static_cast<size_t>(pj)]);
    }
    out.rows.push_back(rowidx[static_cast<size_t>(r)]);
    out.cols.push_back(colidx[static_cast<size_t>(r)]);
    const Rational piv = m[static_cast<size_t>(r)][static_cast<size_t>(r)];
    for (int i = r + 1; i < R; ++i) {
      if (m[static_cast<size_t>(i)][static_cast<size_t>(r)] == Rational(0)) continue;
      Rational f = m[static_cast<size_t>(i)][static_cast<size_t>(r)] / piv;
      for (int j = r; j < C; ++j)
        m[static_cast<size_t>(i)][static_cast<size_t>(j)] -= f * m[static_cast<size_t>(r)][static_cast<size_t>(j)];
    }
    ++r;
  }
  out.rank = r;
  std::sort(out.rows.begin(), out.rows.end());
  std::sort(out.cols.begin(), out.cols.end());
  return out;
}

Rational rational_det(std::vector<std::vector<Rational>> m) {
  int n = static_cast<int>(m.size());
  Rational det(1);
  for (int r = 0; r < n; ++r) {
    int pi = -1;
    for (int i = r; i < n; ++i)
      if (m[static_cast<size_t>(i)][static_cast<size_t>(r)] != Rational(0)) {
        pi = i;
        break;
      }
    if (pi < 0) return Rational(0);
    if (pi != r) {
      std::swap(m[static_cast<size_t>(r)], m[static_cast<size_t>(pi)]);
      det = -det;
    }
    const Rational piv = m[static_cast<size_t>(r)][static_cast<size_t>(r)];
    det *= piv;
    for (int i = r + 1; i < n; ++i) {
      if (m[static_cast<size_t>(i)][static_cast<size_t>(r)] == Rational(0)) continue;
      Rational f = m[static_cast<size_t>(i)][static_cast<size_t>(r)] / piv;
      for (int j = r; j < n; ++j)
        m[static_cast<size_t>(i)][static_cast<size_t>(j)] -= f * m[static_cast<size_t>(r)][static_cast<size_t>(j)];
    }
  }
  return det;
}

std::vector<std::vector<Rational>> evaluate_matrix(const PolyMatrix& M,
                                                   std::span<const Rational> pt) {
  std::vector<std::vector<Rational>> e(static_cast<size_t>(M.rows),
                                       std::vector<Rational>(static_cast<size_t>(M.cols), Rational(0)));
  for (int r = 0; r < M.rows; ++r)
    for (int c = 0; c < M.cols; ++c) e[static_cast<size_t>(r)][static_cast<size_t>(c)] = M.at(r, c).eval(pt);
  return e;
}

long next_prime_geq(long lo) {
  Int p(lo - 1);
  mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
  return p.get_si();
}

} // namespace

int rational_rank(std::vector<std::vector<Rational>> m) {
  return rational_rank_pivots(std::move(m)).rank;
}

Subspace::Subspace(const ExponentSet& ambient, std::vector<std::vector<Int>> basis)
    : ambient_(ambient), basis_(std::move(basis)) {
  const size_t n = static_cast<size_t>(ambient_.rank());
  for (const auto& row : basis_)
    if (row.size() != n) throw std::invalid_argument("subspace: basis row length mismatch");
  if (static_cast<int>(basis_.size()) > ambient_.rank())
    throw std::invalid_argument("subspace: more basis rows than ambient dimension");
  std::vector<std::vector<Rational>> m;
  for (const auto& row : basis_) {
    std::vector<Rational> r;
    r.reserve(n);
    for (const auto& v : row) r.emplace_back(v);
    m.push_back(std::move(r));
  }
  if (rational_rank(std::move(m)) != static_cast<int>(basis_.size()))
    throw std::invalid_argument("subspace: basis rows are linearly dependent");
}

Subspace Subspace::coordinate(const ExponentSet& ambient, std::span<const MultiIndex> labels) {
  std::vector<std::vector<Int>> basis;
  const auto& elems = ambient.elements();
  for (const auto& lab : labels) {
    auto it = std::find(elems.begin(), elems.end(), lab);
    if (it == elems.end())
      throw std::invalid_argument("subspace: coordinate label " + lab.str() + " not in ambient set");
    std::vector<Int> row(static_cast<size_t>(ambient.rank()), 0);
    row[static_cast<size_t>(it - elems.begin())] = 1;
    basis.push_back(std::move(row));
  }
  return Subspace(ambient, std::move(basis));
}

bool Subspace::is_coordinate_span(std::span<const MultiIndex> labels) const {
  if (dim() != static_cast<int>(labels.size())) return false;
  std::vector<bool> allowed(static_cast<size_t>(ambient_.rank()), false);
  const auto& elems = ambient_.elements();
  for (const auto& lab : labels) {
    auto it = std::find(elems.begin(), elems.end(), lab);
    if (it == elems.end()) return false;
    allowed[static_cast<size_t>(it - elems.begin())] = true;
  }
  for (const auto& row : basis_)
    for (size_t i = 0; i < row.size(); ++i)
      if (row[i] != 0 && !allowed[i]) return false;
  return true; // supported inside `labels` and of equal dimension, hence equal
}

PolyMatrix tangent_columns(const ExponentSet& set, int l) {
  if (l < 1 || l > set.degree()) throw std::invalid_argument("tangent_columns: l out of range");
  if (!set.is_down_set()) throw std::invalid_argument("tangent_columns: not a down-set");
  const auto& rows = set.elements();
  const auto cols = set.sublevel(l);
  PolyMatrix M(static_cast<int>(rows.size()), static_cast<int>(cols.size()), set.dim());
  for (size_t r = 0; r < rows.size(); ++r) {
    Polynomial phi(set.dim(), rows[r], 1); // t^i
    for (size_t c = 0; c < cols.size(); ++c)
      M.at(static_cast<int>(r), static_cast<int>(c)) = phi.derivative(cols[c]);
  }
  return M;
}

PolyMatrix mv_matrix(const Subspace& V, const ExponentSet& set, int l) {
  if (!(V.ambient() == set)) throw std::invalid_argument("mv_matrix: ambient set mismatch");
  if (l < 1 || l > set.degree()) throw std::invalid_argument("mv_matrix: l out of range");
  const auto& labels = set.elements();
  const auto cols = set.sublevel(l);
  PolyMatrix M(V.dim(), static_cast<int>(cols.size()), set.dim());
  for (int h = 0; h < V.dim(); ++h) {
    Polynomial f(set.dim());
    for (size_t i = 0; i < labels.size(); ++i)
      f.add_term(labels[i], V.basis()[static_cast<size_t>(h)][i]);
    for (size_t c = 0; c < cols.size(); ++c) M.at(h, static_cast<int>(c)) = f.derivative(cols[c]);
  }
  return M;
}

std::vector<Rational> witness_point(int d, int attempt) {
  if (d == 0) return {};
  if (attempt < 25) {
    long p = next_prime_geq(std::max(2, d));
    for (int i = 0; i < attempt; ++i) p = next_prime_geq(p + 1);
    std::vector<Rational> pt;
    pt.reserve(static_cast<size_t>(d));
    for (int i = 1; i <= d; ++i) pt.emplace_back(Rational(i, p + 1));
    return pt;
  }
  long s = attempt - 25;
  for (long m = 2;; ++m) {
    long grid = 1;
    bool overflow = false;
    for (int i = 0; i < d; ++i) {
      grid *= m;
      if (grid > (1L << 40)) {
        overflow = true;
        break;
      }
    }
    if (!overflow && s >= grid) {
      s -= grid;
      continue;
    }
    std::vector<Rational> pt(static_cast<size_t>(d), Rational(0));
    long rem = s;
    for (int i = 0; i < d; ++i) {
      pt[static_cast<size_t>(i)] = Rational(rem % m + 1, m + 1);
      rem /= m;
    }
    return pt;
  }
}

RankCertificate generic_rank(const PolyMatrix& M) {
  const int R = M.rows, C = M.cols, d = M.dim;
  std::vector<std::vector<Polynomial>> w(static_cast<size_t>(R),
                                         std::vector<Polynomial>(static_cast<size_t>(C), Polynomial(d)));
  for (int r = 0; r < R; ++r)
    for (int c = 0; c < C; ++c) w[static_cast<size_t>(r)][static_cast<size_t>(c)] = M.at(r, c);
  std::vector<int> rowidx(static_cast<size_t>(R)), colidx(static_cast<size_t>(C));
  std::iota(rowidx.begin(), rowidx.end(), 0);
  std::iota(colidx.begin(), colidx.end(), 0);

  RankCertificate cert;
  Polynomial prev = poly_one(d);
  int r = 0;
  while (r < R && r < C) {
    // Deterministic pivot: fewest terms, then smallest original indices.
    int pi = -1, pj = -1;
    size_t best = SIZE_MAX;
    for (int i = r; i < R; ++i)
      for (int j = r; j < C; ++j) {
        const Polynomial& e = w[static_cast<size_t>(i)][static_cast<size_t>(j)];
        if (e.is_zero()) continue;
        size_t tc = e.term_count();
        if (tc < best ||
            (tc == best && std::make_pair(rowidx[static_cast<size_t>(i)], colidx[static_cast<size_t>(j)]) <
                               std::make_pair(rowidx[static_cast<size_t>(pi)], colidx[static_cast<size_t>(pj)]))) {
          best = tc;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    std::swap(w[static_cast<size_t>(r)], w[static_cast<size_t>(pi)]);
    std::swap(rowidx[static_cast<size_t>(r)], rowidx[static_cast<size_t>(pi)]);
    if (pj != r) {
      for (int i = 0; i < R; ++i) std::swap(w[static_cast<size_t>(i)][static_cast<size_t>(r)], w[static_cast<size_t>(i)][static_cast<size_t>(pj)]);
      std::swap(colidx[static_cast<size_t>(r)], colidx[static_cast<size_t>(pj)]);
    }
    cert.pivots.push_back({rowidx[static_cast<size_t>(r)], colidx[static_cast<size_t>(r)]});
    const Polynomial& piv = w[static_cast<size_t>(r)][static_cast<size_t>(r)];
    for (int i = r + 1; i < R; ++i)
      for (int j = r + 1; j < C; ++j)
        w[static_cast<size_t>(i)][static_cast<size_t>(j)] = Polynomial::divexact(
            piv * w[static_cast<size_t>(i)][static_cast<size_t>(j)] -
                w[static_cast<size_t>(i)][static_cast<size_t>(r)] * w[static_cast<size_t>(r)][static_cast<size_t>(j)],
            prev);
    prev = piv;
    ++r;
  }
  cert.rank = r;
  cert.transcript_digest = hex64(fnv1a64(transcript_string(cert.pivots, cert.rank)));

  // Lower certificate: a point where some r x r minor survives specialization.
  for (int attempt = 0;; ++attempt) {
    if (attempt > 100000) throw std::logic_error("generic_rank: witness search did not terminate");
    auto pt = witness_point(d, attempt);
    auto ev = evaluate_matrix(M, pt);
    PivotedRank pr = rational_rank_pivots(ev);
    if (pr.rank != cert.rank) continue;
    cert.witness_point = std::move(pt);
    cert.witness_rows = pr.rows;
    cert.witness_cols = pr.cols;
    std::vector<std::vector<Rational>> sub(static_cast<size_t>(cert.rank),
                                           std::vector<Rational>(static_cast<size_t>(cert.rank), Rational(0)));
    for (size_t i = 0; i < cert.witness_rows.size(); ++i)
      for (size_t j = 0; j < cert.witness_cols.size(); ++j)
        sub[i][j] = ev[static_cast<size_t>(cert.witness_rows[i])][static_cast<size_t>(cert.witness_cols[j])];
    cert.witness_det = rational_det(std::move(sub));
    break;
  }
  return cert;
}

bool replay_certificate(const PolyMatrix& M, const RankCertificate& cert) {
  const int R = M.rows, C = M.cols, d = M.dim;
  std::vector<std::vector<Polynomial>> w(static_cast<size_t>(R),
                                         std::vector<Polynomial>(static_cast<size_t>(C), Polynomial(d)));
  for (int r = 0; r < R; ++r)
    for (int c = 0; c < C; ++c) w[static_cast<size_t>(r)][static_cast<size_t>(c)] = M.at(r, c);
  std::vector<int> rowpos(static_cast<size_t>(R)), colpos(static_cast<size_t>(C));
  std::iota(rowpos.begin(), rowpos.end(), 0); // original index -> current position
  std::vector<int> rowidx(static_cast<size_t>(R)), colidx(static_cast<size_t>(C));
  std::iota(rowidx.begin(), rowidx.end(), 0);
  std::iota(colidx.begin(), colidx.end(), 0);
  std::iota(colpos.begin(), colpos.end(), 0);

  Polynomial prev = poly_one(d);
  int r = 0;
  for (const auto& step : cert.pivots) {
    if (r >= R || r >= C) return false;
    int pi = rowpos[static_cast<size_t>(step.row)];
    int pj = colpos[static_cast<size_t>(step.col)];
    if (pi < r || pj < r) return false;
    std::swap(w[static_cast<size_t>(r)], w[static_cast<size_t>(pi)]);
    std::swap(rowidx[static_cast<size_t>(r)], rowidx[static_cast<size_t>(pi)]);
    rowpos[static_cast<size_t>(rowidx[static_cast<size_t>(r)])] = r;
    rowpos[static_cast<size_t>(rowidx[static_cast<size_t>(pi)])] = pi;
    if (pj != r) {
      for (int i = 0; i < R; ++i) std::swap(w[static_cast<size_t>(i)][static_cast<size_t>(r)], w[static_cast<size_t>(i)][static_cast<size_t>(pj)]);
      std::swap(colidx[static_cast<size_t>(r)], colidx[static_cast<size_t>(pj)]);
      colpos[static_cast<size_t>(colidx[static_cast<size_t>(r)])] = r;
      colpos[static_cast<size_t>(colidx[static_cast<size_t>(pj)])] = pj;
    }
    const Polynomial& piv = w[static_cast<size_t>(r)][static_cast<size_t>(r)];
    if (piv.is_zero()) return false;
    for (int i = r + 1; i < R; ++i)
      for (int j = r + 1; j < C; ++j)
        w[static_cast<size_t>(i)][static_cast<size_t>(j)] = Polynomial::divexact(
            piv * w[static_cast<size_t>(i)][static_cast<size_t>(j)] -
                w[static_cast<size_t>(i)][static_cast<size_t>(r)] * w[static_cast<size_t>(r)][static_cast<size_t>(j)],
            prev);
    prev = piv;
    ++r;
  }
  if (r != cert.rank) return false;
  for (int i = r; i < R; ++i)
    for (int j = r; j < C; ++j)
      if (!w[static_cast<size_t>(i)][static_cast<size_t>(j)].is_zero()) return false;
  if (cert.transcript_digest != hex64(fnv1a64(transcript_string(cert.pivots, cert.rank)))) return false;

  // Witness minor must re-evaluate to the recorded nonzero determinant.
  if (static_cast<int>(cert.witness_rows.size()) != cert.rank ||
      static_cast<int>(cert.witness_cols.size()) != cert.rank)
    return false;
  if (cert.rank > 0) {
    std::vector<std::vector<Rational>> sub(static_cast<size_t>(cert.rank),
                                           std::vector<Rational>(static_cast<size_t>(cert.rank), Rational(0)));
    for (size_t i = 0; i < cert.witness_rows.size(); ++i)
      for (size_t j = 0; j < cert.witness_cols.size(); ++j)
        sub[i][j] = M.at(cert.witness_rows[i], cert.witness_cols[j]).eval(cert.witness_point);
    Rational det = rational_det(std::move(sub));
    if (det == Rational(0) || det != cert.witness_det) return false;
  }
  return true;
}

std::string equality_case_name(EqualityCase c) {
  switch (c) {
    case EqualityCase::none: return "none";
    case EqualityCase::full_or_empty: return "full-or-empty";
    case EqualityCase::d2_second_axis: return "d2-second-axis";
    case EqualityCase::d2_first_axis: return "d2-first-axis";
  }
  return "none";
}

BlRankAudit bl_rank_audit(const Subspace& V, const ExponentSet& set, int l) {
  auto box = set.as_box();
  if (!box) throw std::invalid_argument("bl_rank_audit: set must be a box set");
  const KBox& caps = box->first;
  const int k = box->second;
  if (!(1 <= l && l < k && k <= caps.cap_sum()))
    throw std::invalid_argument("bl_rank_audit: requires 1 <= l < k <= sum of caps");

  BlRankAudit out;
  out.certificate = generic_rank(mv_matrix(V, set, l));
  out.rank = out.certificate.rank;
  out.bound = Rational(static_cast<long>(set.sublevel(l).size()) * V.dim(), set.rank());
  Rational r(out.rank);
  out.strict = r > out.bound;
  out.equality = r == out.bound;
  if (!out.strict && !out.equality)
    throw std::logic_error("bl_rank_audit: rank below bound"); // would contradict the theorem
  if (out.equality) {
    out.classified = false;
    if (V.dim() == 0 || V.dim() == set.rank()) {
      out.eq_case = EqualityCase::full_or_empty;
      out.classified = true;
    } else if (set.dim() == 2 && caps.caps[0] == 1 && caps.caps[1] > 1 && k <= caps.caps[1]) {
      std::vector<MultiIndex> labels;
      for (int h = 1; h <= k; ++h) labels.push_back(MultiIndex{0, h});
      if (V.is_coordinate_span(labels)) {
        out.eq_case = EqualityCase::d2_second_axis;
        out.classified = true;
      }
    }
    if (!out.classified && set.dim() == 2 && caps.caps[1] == 1 && caps.caps[0] > 1 &&
        k <= caps.caps[0]) {
      std::vector<MultiIndex> labels;
      for (int h = 1; h <= k; ++h) labels.push_back(MultiIndex{h, 0});
      if (V.is_coordinate_span(labels)) {
        out.eq_case = EqualityCase::d2_first_axis;
        out.classified = true;
      }
    }
  }
  return out;
}

ProjectionDims projection_dims(std::span<const std::vector<Rational>> points, const Subspace& V,
                               const ExponentSet& set, int l) {
  for (const auto& pt : points) {
    if (static_cast<int>(pt.size()) != set.dim())
      throw std::invalid_argument("projection_dims: point dimension mismatch");
    for (const auto& c : pt)
      if (!(Rational(0) < c && c < Rational(1)))
        throw std::invalid_argument("projection_dims: points must lie strictly inside (0,1)^d");
  }
  PolyMatrix M = mv_matrix(V, set, l);
  ProjectionDims out;
  long long total = 0;
  for (const auto& pt : points) {
    int rk = rational_rank(evaluate_matrix(M, pt));
    out.dims.push_back(rk);
    total += rk;
  }
  const long long n_k = set.rank();
  const long long n_l = static_cast<long long>(set.sublevel(l).size());
  const long long m = static_cast<long long>(points.size());
  if (m == 0) throw std::invalid_argument("projection_dims: needs at least one point");
  out.rhs = Rational(Int(n_k * total), Int(n_l * m));
  out.verdict = Rational(V.dim()) <= out.rhs;
  return out;
}

LeadingPowers leading_powers(const Subspace& V, MonomialOrder order) {
  const auto& labels = V.ambient().elements();
  const size_t n = labels.size();
  // Column positions sorted descending by the monomial order.
  std::vector<size_t> pos(n);
  std::iota(pos.begin(), pos.end(), size_t{0});
  std::sort(pos.begin(), pos.end(), [&](size_t a, size_t b) {
    return cmp_by_order(labels[a], labels[b], order) > 0;
  });

  std::vector<std::vector<Rational>> rows;
  for (const auto& b : V.basis()) {
    std::vector<Rational> r(n, Rational(0));
    for (size_t i = 0; i < n; ++i) r[i] = Rational(b[i]);
    rows.push_back(std::move(r));
  }

  std::vector<size_t> lead(rows.size()); // index into pos
  for (size_t h = 0; h < rows.size(); ++h) {
    while (true) {
      size_t li = n;
      for (size_t s = 0; s < n; ++s)
        if (rows[h][pos[s]] != Rational(0)) {
          li = s;
          break;
        }
      if (li == n) throw std::logic_error("leading_powers: dependent basis row");
      bool reduced = false;
      for (size_t g = 0; g < h; ++g)
        if (lead[g] == li) {
          Rational f = rows[h][pos[li]] / rows[g][pos[li]];
          for (size_t i = 0; i < n; ++i) rows[h][i] -= f * rows[g][i];
          reduced = true;
          break;
        }
      if (!reduced) {
        lead[h] = li;
        break;
      }
    }
  }

  // Sort rows by leading power, largest first, and clear denominators.
  std::vector<size_t> perm(rows.size());
  std::iota(perm.begin(), perm.end(), size_t{0});
  std::sort(perm.begin(), perm.end(), [&](size_t a, size_t b) { return lead[a] < lead[b]; });

  LeadingPowers out;
  for (size_t h : perm) {
    out.powers.push_back(labels[pos[lead[h]]]);
    Int l = 1, g = 0;
    for (const auto& v : rows[h]) {
      if (v == Rational(0)) continue;
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.den().get_mpz_t());
    }
    std::vector<Int> iv(n, 0);
    for (size_t i = 0; i < n; ++i) {
      Rational scaled = rows[h][i] * Rational(l);
      iv[i] = scaled.num();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), iv[i].get_mpz_t());
    }
    if (g > 1)
      for (auto& v : iv) v /= g;
    if (iv[static_cast<size_t>(
            std::find(labels.begin(), labels.end(), out.powers.back()) - labels.begin())] < 0)
      for (auto& v : iv) v = -v;
    out.reduced_basis.push_back(std::move(iv));
  }
  return out;
}

VandermondeRank vandermonde_rank(std::span<const MultiIndex> A, const KBox& caps, int l,
                                 int l_prime) {
  if (!(1 <= l && l < l_prime)) throw std::invalid_argument("vandermonde_rank: requires 1 <= l < l'");
  auto Sl = box_sublevel(caps, l);
  auto Slp = box_sublevel(caps, l_prime);
  for (const auto& a : A)
    if (std::find(Slp.begin(), Slp.end(), a) == Slp.end())
      throw std::invalid_argument("vandermonde_rank: A must lie in S^caps_{l'}");

  std::vector<std::vector<Rational>> m;
  for (const auto& a : A) {
    std::vector<Rational> row;
    row.reserve(Sl.size());
    for (const auto& i : Sl) {
      Int v = 1;
      for (int c = 0; c < a.dim(); ++c) v *= int_pow(Int(a[c]), static_cast<unsigned long>(i[c]));
      row.emplace_back(v);
    }
    m.push_back(std::move(row));
  }

  VandermondeRank out;
  out.rank = rational_rank(std::move(m));
  out.bound = Rational(Int(static_cast<long>(Sl.size()) * static_cast<long>(A.size())),
                       Int(static_cast<long>(Slp.size())));
  out.equality = Rational(out.rank) == out.bound;
  if (!(Rational(out.rank) >= out.bound))
    throw std::logic_error("vandermonde_rank: rank below bound"); // would contradict the lemma
  bool level_nonempty = l_prime <= caps.cap_sum();
  if (out.equality && level_nonempty) {
    out.classified = false;
    std::vector<MultiIndex> sortedA(A.begin(), A.end());
    std::sort(sortedA.begin(), sortedA.end(), GrlexLess{});
    if (A.empty() || sortedA == Slp) {
      out.eq_case = EqualityCase::full_or_empty;
      out.classified = true;
    } else if (caps.dim() == 2) {
      std::vector<MultiIndex> axis2, axis1;
      for (int h = 1; h <= l_prime; ++h) {
        axis2.push_back(MultiIndex{0, h});
        axis1.push_back(MultiIndex{h, 0});
      }
      if (caps.caps[0] == 1 && caps.caps[1] > 1 && sortedA == axis2) {
        out.eq_case = EqualityCase::d2_second_axis;
        out.classified = true;
      } else if (caps.caps[1] == 1 && caps.caps[0] > 1 && sortedA == axis1) {
        out.eq_case = EqualityCase::d2_first_axis;
        out.classified = true;
      }
    }
  }
  return out;
}

namespace {

bool in_list(std::span<const MultiIndex> list, const MultiIndex& x) {
  return std::find(list.begin(), list.end(), x) != list.end();
}

long long count_outside_upset(std::span<const MultiIndex> D, std::span<const MultiIndex> B) {
  long long n = 0;
  for (const auto& p : D) {
    bool dominated = false;
    for (const auto& b : B)
      if (dominated_by(b, p)) {
        dominated = true;
        break;
      }
    if (!dominated) ++n;
  }
  return n;
}

bool check_hyp1(const ResidueFamily& R, const MultiIndex& b, int level, std::vector<int>& tail,
                int scan_max, std::string& failure) {
  auto res = R(level, tail, b);
  if (static_cast<long>(res.size()) > b[level - 1]) {
    failure = "|R_" + std::to_string(level) + "| = " + std::to_string(res.size()) + " > b_" +
              std::to_string(level) + " = " + std::to_string(b[level - 1]) + " at b=" + b.str();
    return false;
  }
  if (level == 1) return true;
  for (int n = 0; n <= scan_max; ++n) {
    if (std::find(res.begin(), res.end(), n) != res.end()) continue;
    tail.insert(tail.begin(), n);
    bool ok = check_hyp1(R, b, level - 1, tail, scan_max, failure);
    tail.erase(tail.begin());
    if (!ok) return false;
  }
  return true;
}

} // namespace

SzReport sz_check(std::span<const MultiIndex> D, std::span<const MultiIndex> A,
                  std::span<const MultiIndex> B, const ResidueFamily& R, int scan_max) {
  for (const auto& a : A)
    if (!in_list(D, a)) throw std::invalid_argument("sz_check: A must be contained in D");
  const int d = D.empty() ? (A.empty() ? (B.empty() ? 1 : B[0].dim()) : A[0].dim()) : D[0].dim();

  SzReport rep;
  rep.hypotheses_ok = true;
  for (const auto& b : B) {
    std::vector<int> tail;
    if (!check_hyp1(R, b, d, tail, scan_max, rep.hypothesis_failure)) {
      rep.hypotheses_ok = false;
      break;
    }
  }
  if (rep.hypotheses_ok) {
    for (const auto& a : A) {
      for (const auto& b : B) {
        std::vector<int> tail;
        bool chain = true;
        for (int level = d; level >= 2; --level) {
          auto res = R(level, tail, b);
          if (std::find(res.begin(), res.end(), a[level - 1]) != res.end()) {
            chain = false;
            break;
          }
          tail.insert(tail.begin(), a[level - 1]);
        }
        if (chain) {
          auto res = R(1, tail, b);
          if (std::find(res.begin(), res.end(), a[0]) == res.end()) {
            rep.hypotheses_ok = false;
            rep.hypothesis_failure =
                "membership forcing fails at a=" + a.str() + " b=" + b.str();
            break;
          }
        }
      }
      if (!rep.hypotheses_ok) break;
    }
  }
  rep.A_size = static_cast<long long>(A.size());
  rep.complement_size = count_outside_upset(D, B);
  rep.conclusion_ok = rep.A_size <= rep.complement_size;
  return rep;
}

SzReport sz_sharpness(std::span<const MultiIndex> D, std::span<const MultiIndex> B, int scan_max) {
  std::vector<MultiIndex> A;
  for (const auto& p : D) {
    bool dominated = false;
    for (const auto& b : B)
      if (dominated_by(b, p)) {
        dominated = true;
        break;
      }
    if (!dominated) A.push_back(p);
  }
  ResidueFamily R = [](int level, std::span<const int>, const MultiIndex& b) {
    std::vector<int> r;
    for (int v = 0; v < b[level - 1]; ++v) r.push_back(v);
    return r;
  };
  return sz_check(D, A, B, R, scan_max);
}

UpsetLevelReport upset_level_check(const KBox& caps, int m, std::span<const MultiIndex> T) {
  if (m < 0) throw std::invalid_argument("upset_level_check: m must be >= 0");
  UpsetLevelReport rep;
  auto Vm = box_level(caps, m);
  for (const auto& t : T)
    if (!in_list(Vm, t)) throw std::invalid_argument("upset_level_check: T must lie in V^caps_m");

  auto Vm1 = box_level(caps, m + 1);
  for (const auto& p : Vm1)
    for (const auto& t : T)
      if (dominated_by(t, p)) {
        rep.T_plus.push_back(p);
        break;
      }

  auto lam = level_counts(caps, m + 1);
  auto L = [&](int l) { return l < 0 ? 0LL : lam[static_cast<size_t>(l)]; };
  rep.lhs = L(m + 1) * static_cast<long long>(T.size());
  rep.rhs = L(m) * static_cast<long long>(rep.T_plus.size());
  rep.ok = rep.lhs <= rep.rhs;

  const int d = caps.dim();
  if (d == 0) {
    rep.witnesses_ok = true;
    return rep;
  }
  KBox head(std::vector<int>(caps.caps.begin(), caps.caps.end() - 1));
  auto lamh = level_counts(head, m + 1);
  auto Lh = [&](int l) { return l < 0 ? 0LL : lamh[static_cast<size_t>(l)]; };
  const long long head_sum = head.cap_sum();
  const int kd = caps.caps.back();

  rep.j_min = static_cast<int>(std::max<long long>(0, m - head_sum));
  rep.j_max = std::min(m, kd);
  rep.witnesses_ok = true;
  auto fail = [&](const std::string& s) {
    rep.witnesses_ok = false;
    rep.witness_failures.push_back(s);
  };

  for (int j = rep.j_min; j <= rep.j_max; ++j) {
    long long S = 0;
    for (int idx = m - j + 1; idx <= m; ++idx) S += Lh(idx);
    Rational Aj = (Rational(Lh(m - j)) * Rational(L(m + 1)) - Rational(Lh(m + 1)) * Rational(L(m)) +
                   (Rational(L(m + 1)) - Rational(L(m))) * Rational(S)) /
                  Rational(Lh(m - j));
    Rational Bj;
    if (Lh(m - j + 1) == 0) {
      // The factor Lambda'_{m-j+1} cancels; only this reduced form is defined.
      Bj = Rational(L(m)) / Rational(Lh(m - j));
    } else {
      Bj = (Rational(Lh(m + 1)) * Rational(L(m)) -
            (Rational(L(m + 1)) - Rational(L(m))) * Rational(S)) /
           (Rational(Lh(m - j)) * Rational(Lh(m - j + 1)));
    }
    rep.A.push_back(Aj);
    rep.B.push_back(Bj);
  }

  for (int j = rep.j_min; j <= rep.j_max; ++j) {
    const Rational& Aj = rep.A[static_cast<size_t>(j - rep.j_min)];
    const Rational& Bj = rep.B[static_cast<size_t>(j - rep.j_min)];
    if (Aj < Rational(0)) fail("A_" + std::to_string(j) + " negative");
    if (Bj < Rational(0)) fail("B_" + std::to_string(j) + " negative");
    if (Rational(L(m + 1)) != Aj + Rational(Lh(m - j + 1)) * Bj)
      fail("split equation fails at j=" + std::to_string(j));
    if (j > rep.j_min) {
      const Rational& Aprev = rep.A[static_cast<size_t>(j - 1 - rep.j_min)];
      if (Rational(Lh(m - j)) * Bj + Aprev != Rational(L(m)))
        fail("recombination equation fails at j=" + std::to_string(j));
    }
  }
  if (rep.j_min <= rep.j_max) {
    if (Rational(L(m)) != rep.B.front() * Rational(Lh(m - rep.j_min)))
      fail("B boundary condition fails");
    Rational expectA = m < kd ? Rational(L(m)) : Rational(0);
    if (rep.A.back() != expectA) fail("A boundary condition fails");
  }
  return rep;
}

SublevelDensityReport sublevel_density_check(const KBox& caps, int l, int l_prime,
                                             std::span<const MultiIndex> B_generators) {
  if (!(1 <= l && l < l_prime))
    throw std::invalid_argument("sublevel_density_check: requires 1 <= l < l'");
  auto Sl = box_sublevel(caps, l);
  auto Slp = box_sublevel(caps, l_prime);
  auto in_B = [&](const MultiIndex& p) {
    for (const auto& g : B_generators)
      if (dominated_by(g, p)) return true;
    return false;
  };
  long long bl = 0, blp = 0;
  for (const auto& p : Sl)
    if (in_B(p)) ++bl;
  std::vector<MultiIndex> b_cap_slp;
  for (const auto& p : Slp)
    if (in_B(p)) b_cap_slp.push_back(p);
  blp = static_cast<long long>(b_cap_slp.size());

  SublevelDensityReport rep;
  rep.lhs = static_cast<long long>(Slp.size()) * bl;
  rep.rhs = static_cast<long long>(Sl.size()) * blp;
  rep.ok = rep.lhs <= rep.rhs;
  rep.equality = rep.lhs == rep.rhs;

  for (const auto& g : B_generators) {
    bool minimal = true;
    for (const auto& h : B_generators)
      if (h != g && dominated_by(h, g)) {
        minimal = false;
        break;
      }
    if (minimal && !in_list(rep.min_generators, g)) rep.min_generators.push_back(g);
  }
  std::sort(rep.min_generators.begin(), rep.min_generators.end(), GrlexLess{});

  bool level_nonempty = l_prime <= caps.cap_sum();
  if (rep.equality && level_nonempty) {
    rep.classified = false;
    if (blp == 0 || blp == static_cast<long long>(Slp.size())) {
      rep.eq_case = EqualityCase::full_or_empty;
      rep.classified = true;
    } else if (caps.dim() == 2 && caps.caps[0] == 1 && caps.caps[1] > 1 &&
               rep.min_generators == std::vector<MultiIndex>{MultiIndex{1, 0}} &&
               l_prime <= caps.caps[1]) {
      rep.eq_case = EqualityCase::d2_second_axis;
      rep.classified = true;
    } else if (caps.dim() == 2 && caps.caps[1] == 1 && caps.caps[0] > 1 &&
               rep.min_generators == std::vector<MultiIndex>{MultiIndex{0, 1}} &&
               l_prime <= caps.caps[0]) {
      rep.eq_case = EqualityCase::d2_first_axis;
      rep.classified = true;
    }
  }
  return rep;
}

DegreeBound degree_bound(int d, int k) {
  if (d < 1 || k < 1) throw std::invalid_argument("degree_bound: requires d, k >= 1");
  Int inner = int_pow(Int(k), static_cast<unsigned long>(d));
  if (!inner.fits_ulong_p())
    throw std::invalid_argument("degree_bound: exponent k^d too large to materialize");
  DegreeBound b;
  b.generic = int_pow(Int(k), inner.get_ui());
  return b;
}

DegreeBound degree_bound(const ExponentSet& set) {
  DegreeBound b = degree_bound(set.dim(), set.degree());
  b.from_rank = int_pow(Int(set.degree()), static_cast<unsigned long>(set.rank()));
  return b;
}

} // namespace ackdec
