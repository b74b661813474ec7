#include "sadic/language.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace sadic {

std::size_t PairSet::size() const {
  return static_cast<std::size_t>(std::count(has.begin(), has.end(), std::uint8_t{1}));
}

const char* to_string(CertStatus s) { return s == CertStatus::Certified ? "Certified" : "Heuristic"; }

PairSet propagate_pairs(const Morphism& tau, const PairSet& upper) {
  const std::size_t ka = tau.domain().size();
  PairSet out(tau.codomain().size());
  std::vector<std::uint8_t> used(ka, 0);
  for (Letter a = 0; a < ka; ++a)
    for (Letter b = 0; b < ka; ++b)
      if (upper.contains(a, b)) {
        used[a] = used[b] = 1;
        out.insert(tau.last(a), tau.first(b));
      }
  for (Letter a = 0; a < ka; ++a)
    if (used[a])
      for (const auto& [pr, cnt] : tau.pair_counts(a))
        if (cnt > 0) out.insert(pr.first, pr.second);
  return out;
}

TwoBlockLadder TwoBlockLadder::build(const DirectiveSequence& seq, std::size_t bottom, std::size_t top) {
  if (top < bottom) throw Error("ladder top below bottom");
  TwoBlockLadder L;
  L.bottom = bottom;
  L.top = top;
  L.levels.resize(top - bottom + 1);
  L.levels.back() = PairSet(seq.alphabet(top).size(), true);
  for (std::size_t m = top; m-- > bottom;) L.levels[m - bottom] = propagate_pairs(seq.at(m), L.levels[m + 1 - bottom]);
  return L;
}

std::size_t expansion_depth(const DirectiveSequence& seq, std::size_t n, std::size_t len, std::size_t depth_budget) {
  if (len <= 1) return n;
  IncidenceMatrix acc;
  for (std::size_t N = n + 1; N <= n + depth_budget; ++N) {
    if (!seq.accessible(N - 1))
      throw DepthExhausted("sequence ends before the images reach length " + std::to_string(len));
    acc = (N == n + 1) ? seq.at(n).incidence() : acc * seq.at(N - 1).incidence();
    BigInt mn = acc.column_sum(0);
    for (std::size_t a = 1; a < acc.cols(); ++a) mn = std::min(mn, acc.column_sum(a));
    if (mn >= len) return N;
  }
  throw Error("image lengths do not reach " + std::to_string(len) + " within the depth budget (degenerate growth)");
}

namespace {

// tau(z), except that runs longer than any cover can span are shortened. Covers of
// the result are exactly the covers of the true image, so run-length images suffice.
Word expand_for_covers(const Morphism& tau, WordView z, const std::vector<std::uint64_t>& w, std::uint64_t budget,
                       std::vector<std::optional<RunImage>>& run_cache) {
  if (tau.has_images()) return tau.apply(z);
  if (!tau.has_run_images()) throw DepthExhausted("a level's images are neither explicit nor run-length encoded");
  Word y;
  for (Letter a : z) {
    if (!run_cache[a]) run_cache[a] = tau.run_image(a);
    for (const auto& [c, L] : *run_cache[a]) {
      std::uint64_t cap = budget / w[c] + 3;
      y.insert(y.end(), static_cast<std::size_t>(std::min(L, cap)), c);
    }
  }
  return y;
}

}  // namespace

std::vector<Word> cover_words(const DirectiveSequence& seq, std::size_t n, std::size_t N, const PairSet& pairs,
                              std::size_t at, std::size_t len) {
  if (at < n || at > N) throw Error("cover level outside [n, N]");
  std::unordered_set<Word, WordHash> cur;
  for (Letter a = 0; a < pairs.k; ++a)
    for (Letter b = 0; b < pairs.k; ++b)
      if (pairs.contains(a, b)) cur.insert(Word{a, b});
  const std::uint64_t budget = len >= 2 ? len - 2 : 0;
  const std::uint64_t whole_cap = 16 * static_cast<std::uint64_t>(len) + 64;
  for (std::size_t j = N; j-- > at;) {
    const Morphism& tau = seq.at(j);
    std::vector<std::uint64_t> w;
    for (const BigInt& x : seq.lengths_range(n, j)) w.push_back(saturate_u64(x));
    std::vector<std::optional<RunImage>> run_cache(tau.domain().size());
    std::unordered_set<Word, WordHash> next;
    for (const Word& z : cur) {
      Word y = expand_for_covers(tau, z, w, budget, run_cache);
      // A light word already covers all its windows; cutting it would only copy letters.
      std::uint64_t total = 0;
      for (Letter c : y) total = std::min(total + w[c], whole_cap + 1);
      if (total <= whole_cap) {
        next.insert(std::move(y));
        continue;
      }
      // For each start s, extend t while the letters strictly between s and t weigh <= len - 2.
      std::size_t t = 0;
      std::uint64_t interior = 0;  // weight of y[s+1 .. t-1]
      for (std::size_t s = 0; s < y.size(); ++s) {
        if (t < s) {
          t = s;
          interior = 0;
        } else if (t > s) {
          interior -= w[y[s]];  // y[s] leaves the interior
        }
        if (len < 2) t = s;
        else
          while (t + 1 < y.size() && (t == s || interior + w[y[t]] <= budget)) {
            if (t > s) interior += w[y[t]];
            ++t;
          }
        next.emplace(y.begin() + static_cast<std::ptrdiff_t>(s), y.begin() + static_cast<std::ptrdiff_t>(t + 1));
      }
    }
    cur.swap(next);
  }
  std::vector<Word> out(cur.begin(), cur.end());
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct Seeds {
  std::size_t N = 0, M = 0, s = 0;
  bool depth_limited = false;
};

Seeds seed_levels(const DirectiveSequence& seq, std::size_t n, std::size_t len, const LanguageOptions& opts) {
  Seeds r;
  r.N = expansion_depth(seq, n, len);
  r.M = r.N + opts.seed_depth;
  r.s = opts.stability;
  if (seq.is_finite()) {
    std::size_t top = seq.finite_length();
    if (r.N > top) throw DepthExhausted("sequence too short for the requested length");
    if (r.M > top) {
      r.M = top;
      r.depth_limited = true;
    }
    if (r.M + r.s > top) {
      r.s = top - r.M;
      r.depth_limited = true;
    }
  }
  return r;
}

}  // namespace

LevelCovers level_covers(const DirectiveSequence& seq, std::size_t n, std::size_t len, LanguageOptions opts) {
  if (len < 2) throw Error("level covers need len >= 2");
  Seeds sd = seed_levels(seq, n, len, opts);
  LevelCovers out;
  out.expansion_depth = sd.N;
  out.pairs = TwoBlockLadder::build(seq, sd.N, sd.M + sd.s).at(sd.N);
  out.covers = cover_words(seq, n, sd.N, out.pairs, n + 1, len);
  return out;
}

namespace {

struct Built {
  std::shared_ptr<FactorIndex> index;
  std::shared_ptr<std::vector<Word>> sources;
};

Built build_index(const DirectiveSequence& seq, std::size_t n, std::size_t N, const PairSet& pairs, std::size_t len) {
  Built b;
  b.sources = std::make_shared<std::vector<Word>>();
  if (N == n) {
    for (Letter a = 0; a < pairs.k; ++a)
      for (Letter c = 0; c < pairs.k; ++c)
        if (pairs.contains(a, c)) b.sources->push_back(Word{a, c});
  } else {
    const Morphism& tau = seq.at(n);
    std::vector<std::uint64_t> unit(tau.codomain().size(), 1);
    std::vector<std::optional<RunImage>> run_cache(tau.domain().size());
    const std::uint64_t budget = len >= 2 ? len - 2 : 0;
    for (const Word& z : cover_words(seq, n, N, pairs, n + 1, len))
      b.sources->push_back(expand_for_covers(tau, z, unit, budget, run_cache));
  }
  b.index = std::make_shared<FactorIndex>(seq.alphabet(n).size());
  for (const Word& s : *b.sources) b.index->add(s);
  return b;
}

std::vector<Word> words_of(const FactorIndex& idx, std::size_t len) {
  std::vector<Word> out;
  idx.for_each(len, [&](const Word& w, std::size_t) {
    out.push_back(w);
    return true;
  });
  return out;
}

}  // namespace

LanguageTable compute_language(const DirectiveSequence& seq, std::size_t n, std::size_t max_len, LanguageOptions opts) {
  if (max_len < 1) throw Error("compute_language needs max_len >= 1");
  const Seeds sd = seed_levels(seq, n, max_len, opts);
  const std::size_t N = sd.N, M = sd.M, s = sd.s;
  const bool depth_limited = sd.depth_limited;
  std::vector<PairSet> at_N;
  for (std::size_t k = 0; k <= s; ++k) at_N.push_back(TwoBlockLadder::build(seq, N, M + k).at(N));

  LanguageTable t;
  t.level_ = n;
  t.max_len_ = max_len;
  t.alphabet_ = seq.alphabet(n);
  t.primitive_ = primitivity_window(seq, n, opts.primitivity_horizon).has_value();

  Built first = build_index(seq, n, N, at_N[0], max_len);
  bool stable = true;
  Built last = first;
  for (std::size_t k = 1; k <= s; ++k) {
    if (at_N[k] == at_N[k - 1]) continue;
    Built b = build_index(seq, n, N, at_N[k], max_len);
    if (words_of(*b.index, max_len) != words_of(*last.index, max_len)) stable = false;
    last = b;
  }
  t.fwd_ = last.index;
  t.sources_ = last.sources;
  // The all-pairs seed is exact only when some tau_[n,N) is positive.
  t.cert_.status = (stable && !depth_limited && t.primitive_) ? CertStatus::Certified : CertStatus::Heuristic;
  t.cert_.expansion_depth = N;
  t.cert_.seed_level = M;
  t.cert_.stability_window = opts.stability;
  return t;
}

bool LanguageTable::contains(WordView w) const { return fwd_->contains(w); }

std::uint64_t LanguageTable::count(std::size_t len) const {
  if (len > max_len_) throw Error("length beyond the computed language");
  return fwd_->counts(len)[len];
}

std::vector<std::uint64_t> LanguageTable::counts() const { return fwd_->counts(max_len_); }

std::vector<Word> LanguageTable::words(std::size_t len) const {
  if (len > max_len_) throw Error("length beyond the computed language");
  return words_of(*fwd_, len);
}

const FactorIndex& LanguageTable::reversed() const {
  if (!rev_) {
    auto r = std::make_shared<FactorIndex>(alphabet_.size());
    for (const Word& s : *sources_) {
      Word rs(s.rbegin(), s.rend());
      r->add(rs);
    }
    rev_ = r;
  }
  return *rev_;
}

std::vector<Letter> LanguageTable::right_extensions(WordView w) const { return fwd_->extensions(w); }

std::vector<Letter> LanguageTable::left_extensions(WordView w) const {
  Word r(w.rbegin(), w.rend());
  return reversed().extensions(r);
}

std::vector<SpecialWord> LanguageTable::special(std::size_t len, Side side) const {
  if (len >= max_len_) throw Error("special words need the language at length len + 1");
  std::vector<SpecialWord> out;
  const FactorIndex& idx = side == Side::Right ? *fwd_ : reversed();
  idx.for_each(len, [&](const Word& w, std::size_t deg) {
    if (deg >= 2) {
      SpecialWord sw;
      sw.extensions = idx.extensions(w);
      sw.word = side == Side::Right ? w : Word(w.rbegin(), w.rend());
      out.push_back(std::move(sw));
    }
    return true;
  });
  std::sort(out.begin(), out.end(), [](const SpecialWord& a, const SpecialWord& b) { return a.word < b.word; });
  return out;
}

std::uint64_t LanguageTable::right_special_count(std::size_t len) const {
  if (len >= max_len_) throw Error("special words need the language at length len + 1");
  std::vector<std::uint64_t> sp, ex;
  fwd_->right_special_counts(len, sp, ex);
  return sp[len];
}

std::vector<ComplexityRow> complexity_table(const LanguageTable& table, std::size_t n_max) {
  if (n_max + 1 > table.max_len()) throw Error("complexity table needs the language at n_max + 1");
  auto p = table.counts();
  std::vector<ComplexityRow> rows;
  for (std::size_t l = 1; l <= n_max; ++l)
    rows.push_back({l, p[l], static_cast<std::int64_t>(p[l + 1]) - static_cast<std::int64_t>(p[l])});
  return rows;
}

std::vector<ComplexityRow> complexity_table(const DirectiveSequence& seq, std::size_t level, std::size_t n_max,
                                            LanguageOptions opts) {
  return complexity_table(compute_language(seq, level, n_max + 1, opts), n_max);
}

std::string complexity_csv(const std::vector<ComplexityRow>& rows) {
  std::ostringstream os;
  os << "n,p,delta\n";
  for (const auto& r : rows) os << r.n << ',' << r.p << ',' << r.delta << '\n';
  return os.str();
}

std::vector<SpecialWord> special_words(const LanguageTable& table, std::size_t len, Side side) {
  return table.special(len, side);
}

}  // namespace sadic
