#include "ackdec/exponents.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "ackdec/literal.hpp"

namespace ackdec {

long long box_homdim(const KBox& caps, int deg) {
  int l_max = static_cast<int>(std::min<long long>(deg, caps.cap_sum()));
  if (l_max < 0) return 0;
  auto lam = level_counts(caps, l_max);
  long long k = 0;
  for (int l = 1; l <= l_max; ++l) k += static_cast<long long>(l) * lam[static_cast<size_t>(l)];
  return k;
}

long long box_rank(const KBox& caps, int deg) {
  int l_max = static_cast<int>(std::min<long long>(deg, caps.cap_sum()));
  if (l_max < 0) return 0;
  auto lam = level_counts(caps, l_max);
  long long n = 0;
  for (int l = 1; l <= l_max; ++l) n += lam[static_cast<size_t>(l)];
  return n;
}

static void require_p(const Rational& p) {
  if (p < Rational(2)) throw std::invalid_argument("exponent query requires p >= 2, got " + p.str());
}

Rational ExponentEvaluator::tilde_box(KBox caps, int deg_cap, const Rational& p, bool l2) {
  std::sort(caps.caps.begin(), caps.caps.end());
  int k = static_cast<int>(std::min<long long>(deg_cap, caps.cap_sum()));
  int d = caps.dim();
  if (d == 0 || k == 0) return Rational(0);
  if (k == 1) return Rational(d) * (Rational(1) - Rational(1) / p);

  RKey key{"box " + caps.str() + " k=" + std::to_string(k), p, l2};
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  const Rational step = l2 ? Rational(1, 2) : Rational(1) / p;
  Rational best = tilde_box(caps.erase(1), k, p, l2) + step;
  for (int j = 2; j <= d; ++j)
    best = max2(best, tilde_box(caps.erase(j), k, p, l2) + step);

  Rational kk(box_homdim(caps, k));
  Rational kk1(box_homdim(caps, k - 1));
  Rational q = max2(Rational(2), p * kk1 / kk);
  best = max2(best, tilde_box(caps, k - 1, q, l2));

  memo_.emplace(std::move(key), best);
  return best;
}

Rational ExponentEvaluator::tilde_general(const ExponentSet& set, const Rational& p, bool l2) {
  if (set.dim() == 0 || set.empty()) return Rational(0);
  int k = set.degree();
  // Degree-one base case counts active coordinates only, so projected sets do
  // not pick up phantom dimensions.
  if (k == 1) return Rational(set.essential_dim()) * (Rational(1) - Rational(1) / p);
  if (auto b = set.as_box()) return tilde_box(b->first, b->second, p, l2);

  RKey key{elements_str(set.elements()) + " d=" + std::to_string(set.dim()), p, l2};
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  const Rational step = l2 ? Rational(1, 2) : Rational(1) / p;
  Rational best = tilde_general(project(set, 1), p, l2) + step;
  for (int j = 2; j <= set.dim(); ++j)
    best = max2(best, tilde_general(project(set, j), p, l2) + step);

  ExponentSet trunc = ExponentSet::from_elements(set.dim(), set.sublevel(k - 1));
  Rational kk(set.homogeneous_dimension());
  Rational kk1(trunc.homogeneous_dimension());
  Rational q = max2(Rational(2), p * kk1 / kk);
  best = max2(best, tilde_general(trunc, q, l2));

  memo_.emplace(std::move(key), best);
  return best;
}

Rational ExponentEvaluator::gamma_tilde(const ExponentSet& set, const Rational& p) {
  require_p(p);
  if (auto v = set.down_set_violation())
    throw std::invalid_argument("gamma_tilde: not a down-set, missing " + v->first.str());
  return tilde_general(set, p, false);
}

Rational ExponentEvaluator::gamma_tilde_l2(const ExponentSet& set, const Rational& p) {
  require_p(p);
  if (auto v = set.down_set_violation())
    throw std::invalid_argument("gamma_tilde_l2: not a down-set, missing " + v->first.str());
  return tilde_general(set, p, true);
}

Rational ExponentEvaluator::gamma_tilde_box(const KBox& caps, int deg_cap, const Rational& p) {
  require_p(p);
  if (deg_cap < 0) throw std::invalid_argument("gamma_tilde_box: negative degree");
  return tilde_box(caps, deg_cap, p, false);
}

Rational ExponentEvaluator::gamma_tilde_l2_box(const KBox& caps, int deg_cap, const Rational& p) {
  require_p(p);
  if (deg_cap < 0) throw std::invalid_argument("gamma_tilde_l2_box: negative degree");
  return tilde_box(caps, deg_cap, p, true);
}

Rational ExponentEvaluator::gamma_lower(const KBox& caps, int deg_cap, const Rational& p) {
  require_p(p);
  int d = caps.dim();
  int k = static_cast<int>(std::min<long long>(deg_cap, caps.cap_sum()));
  if (d == 0 || k == 0) return Rational(0);

  KBox sorted = caps.sorted();
  RKey key{"gl " + sorted.str() + " k=" + std::to_string(k), p, false};
  if (auto it = lower_memo_.find(key); it != lower_memo_.end()) return it->second;

  Rational best(d, 2);
  best = max2(best, Rational(d) - Rational(box_homdim(sorted, k)) / p);
  for (int j = 1; j <= d; ++j)
    best = max2(best, gamma_lower(sorted.erase(j), k, p) + Rational(1) / p);

  lower_memo_.emplace(std::move(key), best);
  return best;
}

ClosedForm ExponentEvaluator::gamma_closed(const KBox& caps, int deg_cap, const Rational& p) {
  require_p(p);
  if (!caps.sorted_ascending())
    throw std::invalid_argument("gamma_closed: caps must be sorted ascending");
  int d = caps.dim();
  ClosedForm r;
  r.value = Rational(d, 2);
  r.argmax_j = 0;
  for (int j = (d + 2) / 2; j <= d; ++j) { // (d+1)/2 <= j <= d
    KBox head(std::vector<int>(caps.caps.begin(), caps.caps.begin() + j));
    Rational term = Rational(j) + Rational(d - j) / p - Rational(box_homdim(head, deg_cap)) / p;
    if (term > r.value) {
      r.value = term;
      r.argmax_j = j;
    }
  }
  return r;
}

Rational ExponentEvaluator::js_exponent(const KBox& caps, int deg_cap, long s) {
  if (s < 1) throw std::invalid_argument("js_exponent: s must be >= 1");
  Rational p(2 * s);
  return p * gamma_tilde_box(caps, deg_cap, p);
}

std::vector<std::pair<std::string, Rational>> ExponentEvaluator::trace() const {
  std::vector<std::pair<std::string, Rational>> t;
  t.reserve(memo_.size());
  for (const auto& [k, v] : memo_)
    t.emplace_back(k.set + (k.l2 ? " [l2]" : "") + " p=" + k.p.fraction_str(), v);
  return t;
}

Rational gamma_tilde(const ExponentSet& set, const Rational& p) {
  ExponentEvaluator ev;
  return ev.gamma_tilde(set, p);
}

Rational gamma_tilde_l2(const ExponentSet& set, const Rational& p) {
  ExponentEvaluator ev;
  return ev.gamma_tilde_l2(set, p);
}

Rational gamma_lower(const KBox& caps, int deg_cap, const Rational& p) {
  ExponentEvaluator ev;
  return ev.gamma_lower(caps, deg_cap, p);
}

ClosedForm gamma_closed(const KBox& caps, int deg_cap, const Rational& p) {
  ExponentEvaluator ev;
  return ev.gamma_closed(caps, deg_cap, p);
}

Rational js_exponent(const KBox& caps, int deg_cap, long s) {
  ExponentEvaluator ev;
  return ev.js_exponent(caps, deg_cap, s);
}

ExponentReport exponent_report(const ExponentSet& set, const Rational& p, bool with_trace) {
  ExponentEvaluator ev;
  ExponentReport r;
  r.set_literal = format_set_literal(set);
  r.p = p;
  r.gamma_tilde = ev.gamma_tilde(set, p);
  r.gamma_l2 = ev.gamma_tilde_l2(set, p);
  if (set.degree() == 1 && set.rank() != set.dim()) r.nonbox_degree_one = true;
  if (auto b = set.as_box()) {
    r.is_box = true;
    KBox sorted = b->first.sorted();
    r.gamma_lower = ev.gamma_lower(sorted, b->second, p);
    ClosedForm cf = ev.gamma_closed(sorted, b->second, p);
    r.gamma_closed = cf.value;
    r.argmax_j = cf.argmax_j;
  }
  if (with_trace) r.trace = ev.trace();
  return r;
}

AuditResult audit_config(ExponentEvaluator& ev, const KBox& sorted_caps, int deg_cap,
                         std::span<const Rational> p_grid) {
  if (!sorted_caps.sorted_ascending())
    throw std::invalid_argument("audit: caps must be sorted ascending");
  AuditResult res;
  const int k = static_cast<int>(std::min<long long>(deg_cap, sorted_caps.cap_sum()));
  const std::string cfg = "caps=" + sorted_caps.str() + " deg<=" + std::to_string(deg_cap);
  ExponentSet set = ExponentSet::box(sorted_caps, deg_cap);

  for (const Rational& p : p_grid) {
    Rational gt = ev.gamma_tilde(set, p);
    Rational gl = ev.gamma_lower(sorted_caps, deg_cap, p);
    Rational gc = ev.gamma_closed(sorted_caps, deg_cap, p).value;
    res.checks++;
    if (!(gt == gl && gl == gc))
      res.failures.push_back({"equality", cfg + " p=" + p.str() + ": tilde=" + gt.str() +
                                              " lower=" + gl.str() + " closed=" + gc.str()});

    // (b) antitone: bump one cap.
    for (int j = 1; j <= sorted_caps.dim(); ++j) {
      KBox bumped = sorted_caps;
      bumped.caps[static_cast<size_t>(j - 1)]++;
      res.checks++;
      if (!(gl >= ev.gamma_lower(bumped, deg_cap, p)))
        res.failures.push_back({"antitone", cfg + " p=" + p.str() + " bump j=" + std::to_string(j)});
    }

    // (c) degree shift inequality, needs k >= 2.
    if (k >= 2) {
      Rational kk(box_homdim(sorted_caps, k));
      Rational kk1(box_homdim(sorted_caps, k - 1));
      Rational lhs = ev.gamma_lower(sorted_caps, k - 1, p);
      Rational rhs = ev.gamma_lower(sorted_caps, k, p * kk / kk1);
      res.checks++;
      if (!(lhs <= rhs))
        res.failures.push_back({"degree-shift", cfg + " p=" + p.str() + ": " + lhs.str() +
                                                    " > " + rhs.str()});
    }

    res.checks++;
    if (!(gt >= gl)) res.failures.push_back({"upper>=lower", cfg + " p=" + p.str()});
  }
  return res;
}

// Enumerates sorted cap tuples with entries in [1, max_cap].
static void for_each_sorted_caps(int d, int max_cap, std::vector<int>& cur,
                                 const std::function<void(const KBox&)>& f) {
  if (static_cast<int>(cur.size()) == d) {
    f(KBox(cur));
    return;
  }
  int lo = cur.empty() ? 1 : cur.back();
  for (int c = lo; c <= max_cap; ++c) {
    cur.push_back(c);
    for_each_sorted_caps(d, max_cap, cur, f);
    cur.pop_back();
  }
}

AuditResult audit_corpus(int max_d, int max_cap, int max_deg, std::span<const Rational> p_grid) {
  if (max_d < 1 || max_cap < 1 || max_deg < 1)
    throw std::invalid_argument("audit: corpus bounds must be positive");
  AuditResult total;
  ExponentEvaluator ev; // shared memo across the corpus
  for (int d = 1; d <= max_d; ++d) {
    std::vector<int> cur;
    for_each_sorted_caps(d, max_cap, cur, [&](const KBox& caps) {
      int top = static_cast<int>(std::min<long long>(max_deg, caps.cap_sum()));
      for (int k = 1; k <= top; ++k) {
        AuditResult r = audit_config(ev, caps, k, p_grid);
        total.checks += r.checks;
        total.failures.insert(total.failures.end(), r.failures.begin(), r.failures.end());
      }
    });
  }
  return total;
}

static Int binomial(long n, long k) {
  Int r;
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

std::vector<PaperExampleRow> paper_examples() {
  std::vector<PaperExampleRow> rows;
  ExponentEvaluator ev;
  const std::vector<Rational> grid = {Rational(2),  Rational(5, 2), Rational(3),  Rational(4),
                                      Rational(6),  Rational(12),   Rational(24), Rational(100)};

  auto push = [&](const std::string& id, const std::string& params, const Rational& got,
                  const Rational& want) {
    rows.push_back({id, params, got.str(), want.str(), got == want});
  };

  // d=1, caps=(k), degree k: max(1/2, 1 - k(k+1)/(2p)).
  for (int k = 1; k <= 6; ++k)
    for (const auto& p : grid) {
      Rational got = ev.gamma_closed(KBox({k}), k, p).value;
      Rational want = max2(Rational(1, 2), Rational(1) - Rational(1LL * k * (k + 1)) / (Rational(2) * p));
      push("moment-curve", "k=" + std::to_string(k) + " p=" + p.str(), got, want);
    }

  // Equal caps k, j coordinates: K = jk/(j+1) C(k+j, j).
  for (int j = 1; j <= 4; ++j)
    for (int k = 1; k <= 4; ++k) {
      KBox caps(std::vector<int>(static_cast<size_t>(j), k));
      Rational got(box_homdim(caps, k));
      Rational want = Rational(1LL * j * k, j + 1) * Rational(binomial(k + j, j));
      push("equal-caps-homdim", "j=" + std::to_string(j) + " k=" + std::to_string(k), got, want);
    }

  // d=2, caps=(1,k2): two regimes.
  for (int k2 = 1; k2 <= 4; ++k2) {
    for (int k = 1; k <= k2; ++k)
      for (const auto& p : grid) {
        Rational got = ev.gamma_closed(KBox({1, k2}), k, p).value;
        Rational want = max2(Rational(1), Rational(2) - Rational(1LL * k * (k + 1)) / p);
        push("d2-k1=1-low", "k2=" + std::to_string(k2) + " k=" + std::to_string(k) + " p=" + p.str(),
             got, want);
      }
    int k = k2 + 1;
    for (const auto& p : grid) {
      Rational got = ev.gamma_closed(KBox({1, k2}), k, p).value;
      Rational want = max2(Rational(1), Rational(2) - Rational(1LL * (k2 + 1) * (k2 + 1)) / p);
      push("d2-k1=1-top", "k2=" + std::to_string(k2) + " p=" + p.str(), got, want);
    }
  }

  // Full box: K = (1/2) prod(k_m + 1) sum(k_m), d = 2 caps <= 4.
  for (int k1 = 1; k1 <= 4; ++k1)
    for (int k2 = k1; k2 <= 4; ++k2) {
      KBox caps({k1, k2});
      Rational got(box_homdim(caps, static_cast<int>(caps.cap_sum())));
      Rational want = Rational(1, 2) * Rational(1LL * (k1 + 1) * (k2 + 1) * (k1 + k2));
      push("full-box-homdim", "caps=" + caps.str(), got, want);
    }

  // Binary system: gamma = max(1, 2 - (k1+1)(k2+1)(k1+k2)/(2p)).
  for (int k1 = 1; k1 <= 4; ++k1)
    for (int k2 = k1; k2 <= 4; ++k2)
      for (const auto& p : grid) {
        KBox caps({k1, k2});
        Rational got = ev.gamma_closed(caps, static_cast<int>(caps.cap_sum()), p).value;
        Rational want =
            max2(Rational(1), Rational(2) - Rational(1LL * (k1 + 1) * (k2 + 1) * (k1 + k2)) /
                                                (Rational(2) * p));
        push("binary-system", "caps=" + caps.str() + " p=" + p.str(), got, want);
      }

  // Cube (2,2,2), degree 6, p=40: the maximum sits at j=2, not j=d.
  {
    ClosedForm cf = ev.gamma_closed(KBox({2, 2, 2}), 6, Rational(40));
    bool ok = cf.value == Rational(2) - Rational(17, 40) && cf.argmax_j == 2;
    rows.push_back({"cube-argmax", "caps=[2,2,2] deg<=6 p=40",
                    cf.value.str() + " j=" + std::to_string(cf.argmax_j), "63/40 j=2", ok});
  }
  return rows;
}

} // namespace ackdec
