#include "sadic/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <unordered_set>

namespace sadic {

namespace {

__extension__ typedef unsigned __int128 u128;

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  u128 p = static_cast<u128>(a) * b;
  return p > (u128{1} << 62) ? (std::uint64_t{1} << 62) : static_cast<std::uint64_t>(p);
}

std::vector<std::uint64_t> letter_lengths(const Morphism& m) {
  std::vector<std::uint64_t> w;
  for (Letter a = 0; a < m.domain().size(); ++a) w.push_back(saturate_u64(m.length(a)));
  return w;
}

RunImage run_word(const Morphism& tau, WordView u, std::vector<std::optional<RunImage>>& cache) {
  RunImage z;
  for (Letter a : u) {
    if (!cache[a]) cache[a] = tau.run_image(a);
    for (const auto& [c, L] : *cache[a]) {
      if (!z.empty() && z.back().first == c) z.back().second += L;
      else z.emplace_back(c, L);
    }
  }
  return z;
}

// Calls fn on every word of length m over k letters, in lexicographic order.
template <class Fn>
void for_each_word(std::size_t k, std::size_t m, Fn&& fn) {
  Word u(m, 0);
  while (true) {
    fn(static_cast<WordView>(u));
    std::size_t i = m;
    while (i > 0 && u[i - 1] + 1 == k) u[--i] = 0;
    if (i == 0) return;
    ++u[i - 1];
  }
}

std::uint64_t ipow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r = sat_mul(r, b);
  return r;
}

BigInt norm_of(const Morphism& m) {
  BigInt r = 0;
  for (Letter a = 0; a < m.domain().size(); ++a) r = std::max(r, m.length(a));
  return r;
}

BigInt min_of(const Morphism& m) {
  BigInt r = m.length(0);
  for (Letter a = 1; a < m.domain().size(); ++a) r = std::min(r, m.length(a));
  return r;
}

constexpr std::uint64_t kWordCap = std::uint64_t{1} << 20;

}  // namespace

RelativeComplexity relative_complexity(const Morphism& sigma, const Morphism& tau, std::uint64_t n, Scope scope) {
  if (!(tau.codomain() == sigma.domain())) throw Error("relative complexity: codomain of tau is not the domain of sigma");
  if (n == 0) throw Error("relative complexity needs n >= 1");
  const std::size_t kb = sigma.domain().size();
  const std::vector<std::uint64_t> w = letter_lengths(sigma);
  RelativeComplexity out;

  std::size_t m = scope.param;
  if (scope.kind == Scope::Kind::FullLanguage) {
    // b.w has at most 2 + (n - 1) / <sigma> letters; such a factor of tau(x) lies in
    // tau(u) for some u of length ceil(|bw| / <tau>) + 1.
    std::uint64_t minsig = *std::min_element(w.begin(), w.end());
    std::uint64_t bw = 2 + (n - 1) / minsig;
    std::uint64_t mint = saturate_u64(min_of(tau));
    std::size_t needed = static_cast<std::size_t>((bw + mint - 1) / mint + 1);
    m = std::min(needed, scope.param);
    out.budget_exhausted = needed > scope.param;
  }
  while (m > 0 && ipow(tau.domain().size(), m) > kWordCap) {
    --m;
    out.budget_exhausted = true;
  }
  if (m == 0) throw Error("relative complexity: no domain words to scan");

  std::vector<std::unordered_set<Word, WordHash>> sets(kb);
  std::vector<std::optional<RunImage>> cache(tau.domain().size());
  for_each_word(tau.domain().size(), m, [&](WordView u) {
    RunImage z = run_word(tau, u, cache);
    for (std::size_t r = 1; r < z.size(); ++r) {
      const Letter b = z[r - 1].first;
      Word word;
      std::uint64_t acc = 0;
      bool done = false;
      for (std::size_t s = r; s < z.size() && !done; ++s) {
        const auto [c, L] = z[s];
        std::uint64_t full = sat_mul(L, w[c]);
        if (acc + full >= n) {
          std::uint64_t t = (n - acc + w[c] - 1) / w[c];
          word.insert(word.end(), static_cast<std::size_t>(t), c);
          done = true;
        } else {
          acc += full;
          word.insert(word.end(), static_cast<std::size_t>(L), c);
        }
      }
      if (done) sets[b].insert(std::move(word));
    }
  });
  for (Letter b = 0; b < kb; ++b) {
    FSet f;
    f.b = b;
    f.n = n;
    f.members.assign(sets[b].begin(), sets[b].end());
    std::sort(f.members.begin(), f.members.end());
    out.value += f.members.size();
    out.f_sets.push_back(std::move(f));
  }
  return out;
}

std::uint64_t full_shift_complexity(const Morphism& sigma, const Morphism& tau, std::uint64_t n) {
  Morphism st = compose(sigma, tau);
  if (!st.has_images()) throw Error("full-shift complexity needs explicit images");
  std::uint64_t mn = saturate_u64(min_of(st));
  std::size_t m = static_cast<std::size_t>((n + mn - 1) / mn + 2);
  if (ipow(tau.domain().size(), m) > kWordCap) throw Error("full-shift complexity: too many domain words");
  FactorIndex idx(st.codomain().size());
  for_each_word(tau.domain().size(), m, [&](WordView u) { idx.add(st.apply(u)); });
  return idx.counts(static_cast<std::size_t>(n))[static_cast<std::size_t>(n)];
}

namespace {

void finish(BoundReport& r) {
  r.all_hold = true;
  for (const BoundRow& row : r.rows) {
    if (row.informational) continue;
    if (!row.ok && r.all_hold) {
      r.all_hold = false;
      r.counterexample = row;
    }
    if (row.slack && (!r.worst_slack || *row.slack < *r.worst_slack)) r.worst_slack = row.slack;
  }
}

BoundRow linear_row(std::uint64_t n, std::string label, std::uint64_t lhs, std::uint64_t coeff) {
  BoundRow row;
  row.n = n;
  row.label = std::move(label);
  row.lhs = lhs;
  BigInt rhs = BigInt(coeff) * n;
  row.rhs = to_string(rhs);
  row.slack = Rational(rhs - BigInt(lhs));
  row.ok = BigInt(lhs) <= rhs;
  return row;
}

}  // namespace

BoundReport verify_two_morphism(const Morphism& tau, const Morphism& sigma) {
  if (!tau.incidence().positive()) throw PreconditionError("two-morphism bound needs tau positive");
  BoundReport r;
  r.kind = "two";
  Morphism st = compose(sigma, tau);
  r.lo = saturate_u64(norm_of(sigma));
  r.hi = saturate_u64(min_of(st));
  const std::uint64_t kb = sigma.domain().size();
  for (std::uint64_t n = r.lo; n <= r.hi; ++n) {
    std::uint64_t lhs = full_shift_complexity(sigma, tau, n);
    std::uint64_t c2 = relative_complexity(sigma, tau, n, Scope::images(2)).value;
    r.rows.push_back(linear_row(n, "", lhs, kb + c2));
  }
  if (r.rows.empty()) r.notes.push_back("empty interval: ||sigma|| > <sigma tau>");
  finish(r);
  return r;
}

BoundReport verify_three_morphism(const Morphism& tau, const Morphism& sigma, const Morphism& phi) {
  if (!tau.incidence().positive()) throw PreconditionError("three-morphism bound needs tau positive");
  if (!sigma.incidence().positive()) throw PreconditionError("three-morphism bound needs sigma positive");
  BoundReport r;
  r.kind = "three";
  Morphism ps = compose(phi, sigma);
  const std::uint64_t nphi = saturate_u64(norm_of(phi));
  const std::uint64_t lo2 = saturate_u64(min_of(ps)), hi2 = saturate_u64(norm_of(ps));
  const std::uint64_t kb = sigma.domain().size(), kc = phi.domain().size();
  r.lo = nphi;
  r.hi = hi2;
  for (std::uint64_t n = nphi; n < lo2; ++n) {
    std::uint64_t lhs = full_shift_complexity(ps, tau, n);
    std::uint64_t c2 = relative_complexity(phi, sigma, n, Scope::images(2)).value;
    r.rows.push_back(linear_row(n, "first", lhs, c2 + kc));
  }
  for (std::uint64_t n = std::max(lo2, nphi); n <= hi2; ++n) {
    std::uint64_t lhs = full_shift_complexity(ps, tau, n);
    std::uint64_t c2 = relative_complexity(ps, tau, n, Scope::images(2)).value;
    std::uint64_t c1 = relative_complexity(phi, sigma, n, Scope::images(1)).value;
    r.rows.push_back(linear_row(n, "second", lhs, c2 + c1 + kb + kc));
  }
  finish(r);
  return r;
}

BoundReport verify_relcomp_props(const Morphism& sigma, const Morphism& tau, std::size_t budget) {
  BoundReport r;
  r.kind = "relprops";
  const BigInt ns = norm_of(sigma), ms = min_of(sigma);
  const std::uint64_t n = saturate_u64(ns);
  r.lo = r.hi = n;
  RelativeComplexity rc = relative_complexity(sigma, tau, n, Scope::full_language(budget));
  if (rc.budget_exhausted) r.notes.push_back("full-language scope cut short by the budget");
  const BigInt comp = rc.value;
  const std::size_t kb = sigma.domain().size();

  BoundRow power;
  power.n = n;
  power.label = "power";
  power.lhs = comp;
  power.rhs = std::to_string(kb) + "^(" + to_string(ns) + "/" + to_string(ms) + "+1)";
  // comp <= |B|^(ns/ms + 1)  <=>  comp^ms <= |B|^(ns + ms)
  power.ok = boost::multiprecision::pow(comp, static_cast<unsigned>(ms)) <=
             boost::multiprecision::pow(BigInt(kb), static_cast<unsigned>(ns + ms));
  power.ok = power.ok && !rc.budget_exhausted;
  r.rows.push_back(power);

  if (kb == 2) {
    BoundRow two;
    two.n = n;
    two.label = "two-letter";
    two.lhs = comp;
    Rational bound = Rational(ns, ms) + 1;
    two.rhs = to_string(bound);
    two.slack = bound - Rational(comp);
    two.ok = Rational(comp) <= bound && !rc.budget_exhausted;
    r.rows.push_back(two);

    BoundRow ceil_row;
    ceil_row.n = n;
    ceil_row.label = "two-letter-ceiling";
    ceil_row.informational = true;
    ceil_row.lhs = comp;
    BigInt cb = (ns + ms - 1) / ms + 1;
    ceil_row.rhs = to_string(cb);
    ceil_row.slack = Rational(cb - comp);
    ceil_row.ok = comp <= cb;
    r.rows.push_back(ceil_row);
  }
  finish(r);
  return r;
}

BoundReport verify_rcomp_domination(const Morphism& sigma, const Morphism& tau, std::uint64_t n_max) {
  BoundReport r;
  r.kind = "rcomp";
  r.lo = 1;
  r.hi = n_max;
  BigInt rc = morphism_metrics(tau).r_comp;
  const std::uint64_t ka = tau.domain().size();
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    std::uint64_t c1 = relative_complexity(sigma, tau, n, Scope::images(1)).value;
    std::uint64_t c2 = relative_complexity(sigma, tau, n, Scope::images(2)).value;
    BoundRow a;
    a.n = n;
    a.label = "comp1<=rcomp";
    a.lhs = c1;
    a.rhs = to_string(rc);
    a.slack = Rational(rc - c1);
    a.ok = BigInt(c1) <= rc;
    r.rows.push_back(a);
    BoundRow b;
    b.n = n;
    b.label = "comp2<=|A|rcomp+comp1";
    b.lhs = c2;
    BigInt bound = BigInt(ka) * rc + c1;
    b.rhs = to_string(bound);
    b.slack = Rational(bound - c2);
    b.ok = BigInt(c2) <= bound && bound <= BigInt(ka + 1) * rc;
    r.rows.push_back(b);
  }
  finish(r);
  return r;
}

std::string format_report(const BoundReport& r) {
  std::ostringstream os;
  for (const BoundRow& row : r.rows) {
    os << "n=" << row.n << " lhs=" << to_string(row.lhs) << " rhs=" << row.rhs << " ok=" << (row.ok ? "true" : "false");
    if (!row.label.empty()) os << " check=" << row.label;
    if (row.informational) os << " informational=true";
    os << '\n';
  }
  for (const std::string& note : r.notes) os << "note: " << note << '\n';
  os << "kind=" << r.kind << " interval=[" << r.lo << "," << r.hi << "] all_hold=" << (r.all_hold ? "true" : "false")
     << " worst_slack=" << (r.worst_slack ? to_string(*r.worst_slack) : std::string("none")) << '\n';
  return os.str();
}

std::vector<DomRow> dm_domination(const DirectiveSequence& seq, std::size_t levels) {
  std::vector<DomRow> out;
  for (std::size_t m = 0; m < levels; ++m) {
    if (!seq.accessible(m)) break;
    auto lens = seq.lengths_range(0, m + 1);
    BigInt mx = *std::max_element(lens.begin(), lens.end());
    BigInt mn = *std::min_element(lens.begin(), lens.end());
    DomRow row;
    row.level = m;
    row.ratio = Rational(mx, mn);
    row.d = d_ratio(seq.at(m).incidence());
    row.ok = row.d && row.ratio <= *row.d;
    out.push_back(row);
  }
  return out;
}

ComplexityProfile growth_profiles(const DirectiveSequence& seq, std::uint64_t n_max) {
  ComplexityProfile prof;
  LanguageTable table = compute_language(seq, 0, static_cast<std::size_t>(n_max));
  auto p = table.counts();

  std::vector<BigInt> norms, mins;
  std::vector<std::optional<Rational>> ds;
  bool positive_proper = true;
  for (std::size_t m = 0;; ++m) {
    if (!seq.accessible(m)) break;
    auto lens = seq.lengths_range(0, m + 1);
    norms.push_back(*std::max_element(lens.begin(), lens.end()));
    mins.push_back(*std::min_element(lens.begin(), lens.end()));
    ds.push_back(d_ratio(seq.at(m).incidence()));
    MorphismFlags f = classify(seq.at(m));
    positive_proper = positive_proper && f.positive && f.proper;
    if (norms.back() >= n_max) break;
  }

  for (std::uint64_t n = 1; n <= n_max; ++n) {
    ProfileRow row;
    row.n = n;
    row.p = p[n];
    double dn = static_cast<double>(n), dp = static_cast<double>(p[n]);
    row.p_over_n = dp / dn;
    row.p_over_n2 = dp / (dn * dn);
    row.log_p_over_n = std::log(dp) / dn;
    std::size_t m = 0;
    while (m + 1 < norms.size() && norms[m] < n) ++m;
    row.level = m;
    if (!norms.empty()) {
      row.norm = norms[m];
      row.min_len = mins[m];
      row.d = ds[m];
    }
    prof.rows.push_back(row);
  }
  if (positive_proper) {
    prof.domination = dm_domination(seq, norms.size());
    for (const DomRow& d : prof.domination) prof.domination_ok = prof.domination_ok && d.ok;
  }
  for (const BigInt& nm : norms) {
    if (nm > n_max || nm < 1) continue;
    std::uint64_t n = static_cast<std::uint64_t>(nm);
    Rational v(BigInt(p[n]), BigInt(n) * n);
    if (!prof.checkpoints.empty() && !(v < prof.checkpoints.back().second)) prof.checkpoints_decreasing = false;
    prof.checkpoints.emplace_back(n, v);
  }
  return prof;
}

std::string profile_csv(const ComplexityProfile& prof) {
  std::ostringstream os;
  os << "n,p,p_over_n,p_over_n2,log_p_over_n,level,norm,min_len,d\n";
  for (const ProfileRow& r : prof.rows)
    os << r.n << ',' << r.p << ',' << r.p_over_n << ',' << r.p_over_n2 << ',' << r.log_p_over_n << ',' << r.level << ','
       << to_string(r.norm) << ',' << to_string(r.min_len) << ',' << (r.d ? to_string(*r.d) : std::string("")) << '\n';
  return os.str();
}

// ---------------------------------------------------------------------------
// Rank-2 construction

namespace {

// Prefix of tau_[lo,hi)(z) of length len (shorter if the whole image is shorter),
// expanded top-down so only the letters that matter are produced.
Word image_prefix(const DirectiveSequence& seq, std::size_t lo, std::size_t hi, Word z, std::uint64_t len) {
  for (std::size_t j = hi; j-- > lo;) {
    std::vector<std::uint64_t> w;
    for (const BigInt& x : seq.lengths_range(lo, j)) w.push_back(saturate_u64(x));
    const Morphism& t = seq.at(j);
    std::vector<std::optional<RunImage>> cache(t.domain().size());
    Word next;
    std::uint64_t acc = 0;
    for (Letter a : z) {
      if (acc >= len) break;
      if (!cache[a]) cache[a] = t.run_image(a);
      for (const auto& [c, L] : *cache[a]) {
        if (acc >= len) break;
        std::uint64_t need = (len - acc + w[c] - 1) / w[c];
        std::uint64_t take = std::min(L, need);
        next.insert(next.end(), static_cast<std::size_t>(take), c);
        acc += sat_mul(take, w[c]);
      }
    }
    z = std::move(next);
  }
  if (z.size() > len) z.resize(static_cast<std::size_t>(len));
  return z;
}

}  // namespace

bool Rank2Report::all_ok() const {
  for (const auto& x : prefixes)
    if (!x.ok) return false;
  for (const auto& x : specials)
    if (!x.ok) return false;
  for (const auto& x : brackets)
    if (!x.ok) return false;
  for (const auto& x : claims)
    if (!x.ok) return false;
  return true;
}

bool Rank2Report::claims_ok_in_used_range() const {
  for (const auto& x : claims)
    if (x.used_range && !x.ok) return false;
  return true;
}

bool Rank2Report::claims_ok_with_ceiling() const {
  for (const auto& x : claims)
    if (!x.ok_ceiling) return false;
  return true;
}

Rank2Report rank2_paper_checks(const DirectiveSequence& seq, Rank2CheckOptions opts) {
  Rank2Report rep;
  const std::size_t levels = std::max<std::size_t>(opts.depth + 2, opts.claim_levels + 1);
  std::vector<BigInt> A, B, C, a;
  for (std::size_t n = 0; n < levels; ++n) {
    auto lens = seq.lengths_range(0, n + 1);
    B.push_back(lens[0]);
    A.push_back(lens[1]);
    C.push_back(n == 0 ? BigInt(1) : C[n - 1] + B[n - 1]);
    a.push_back(seq.at(n).incidence().at(1, 1) + 1);
  }

  // P_n = tau_[0,n-1](0) ... tau_0(0) 0, of length C_n.
  auto tail_word = [&](std::size_t n) {
    Word p;
    for (std::size_t j = n; j-- > 0;) {
      Word part = image_prefix(seq, 0, j + 1, Word{0}, saturate_u64(B[j]));
      p.insert(p.end(), part.begin(), part.end());
    }
    p.push_back(0);
    return p;
  };

  for (std::size_t n = 1; n <= opts.depth; ++n) {
    Word P = tail_word(n);
    const std::uint64_t len = saturate_u64(C[n]) + 1;
    std::set<Word> got{image_prefix(seq, 0, n + 1, Word{0}, len), image_prefix(seq, 0, n + 1, Word{1}, len)};
    Word p0 = P, p1 = P;
    p0.push_back(0);
    p1.push_back(1);
    rep.prefixes.push_back({n, got == std::set<Word>{p0, p1}});
  }

  for (std::size_t n = 1; n <= opts.depth; ++n) {
    const std::size_t kmax = std::min<std::size_t>(opts.max_k, saturate_u64(a[n + 1]) - 1);
    if (kmax == 0) continue;
    LanguageTable upper = compute_language(seq, n + 1, 2 * kmax + 1);
    Word P = tail_word(n);
    for (std::size_t k = 1; k <= kmax; ++k) {
      Word core(k - 1, 0);
      core.push_back(1);
      core.insert(core.end(), k, 0);
      bool ok = true;
      std::uint64_t wlen = 0;
      Word W;
      {
        Word img = image_prefix(seq, 0, n + 1, core, ~std::uint64_t{0} >> 2);
        W = img;
        W.insert(W.end(), P.begin(), P.end());
        wlen = W.size();
      }
      std::set<Letter> next;
      for (Letter x : {Letter{0}, Letter{1}}) {
        Word u = core;
        u.push_back(x);
        if (!upper.contains(u)) {
          ok = false;
          continue;
        }
        Word img = image_prefix(seq, 0, n + 1, u, wlen + 1);
        if (img.size() < wlen + 1 || !std::equal(W.begin(), W.end(), img.begin())) {
          ok = false;
          continue;
        }
        next.insert(img[wlen]);
      }
      rep.specials.push_back({n, k, wlen, ok && next.size() == 2});
    }
  }

  {
    LanguageTable base = compute_language(seq, 0, opts.horizon + 1);
    std::vector<std::uint64_t> rs, ex;
    base.index().right_special_counts(opts.horizon, rs, ex);
    for (std::size_t n = 1; n + 1 < A.size(); ++n) {
      const std::uint64_t b = saturate_u64(B[n]), c = saturate_u64(C[n]);
      const std::uint64_t kmax = saturate_u64(a[n + 1]) - 1;
      for (std::uint64_t k = 1; k <= kmax; ++k) {
        std::uint64_t lo = k * b + c;
        if (lo > opts.horizon) break;
        std::uint64_t hi = std::min<std::uint64_t>((k + 1) * b + c - 1, opts.horizon);
        std::uint64_t mn = ~std::uint64_t{0};
        for (std::uint64_t N = lo; N <= hi; ++N) mn = std::min(mn, rs[N]);
        Rational bound = std::min(Rational(BigInt(k)), Rational(A[n], 2 * B[n]));
        rep.brackets.push_back({n, static_cast<std::size_t>(k), lo, hi, mn, bound, Rational(BigInt(mn)) >= bound});
      }
    }
    if (rep.brackets.empty()) rep.budget_notes.push_back("bracket check: horizon below the first bracket");
  }

  for (std::size_t m = 0; m < opts.claim_levels; ++m) {
    const Morphism& next = seq.at(m + 1);
    if (!next.has_run_images()) {
      rep.budget_notes.push_back("claim check at m=" + std::to_string(m) + ": images of the next level are not available");
      continue;
    }
    Morphism sigma = seq.compose_range(0, m + 1);
    std::vector<std::uint64_t> ns;
    const bool dense = m < 3;
    for (std::uint64_t n = 1; n <= opts.claim_dense && dense; ++n) ns.push_back(n);
    for (double x = dense ? static_cast<double>(opts.claim_dense) : 1.0; x <= static_cast<double>(opts.claim_max_n); x *= 1.25) {
      std::uint64_t n = static_cast<std::uint64_t>(x);
      if (ns.empty() || n > ns.back()) ns.push_back(n);
    }
    for (std::uint64_t n : ns) {
      std::uint64_t comp = relative_complexity(sigma, next, n, Scope::images(2)).value;
      Rational bound(BigInt(6) * n, B[m]);
      BigInt ceil6 = 6 * ((BigInt(n) + B[m] - 1) / B[m]);
      rep.claims.push_back({m, n, comp, bound, Rational(BigInt(comp)) <= bound, BigInt(n) >= B[m], BigInt(comp) <= ceil6});
    }
  }
  return rep;
}

}  // namespace sadic
