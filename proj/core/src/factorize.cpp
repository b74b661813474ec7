#include "sadic/factorize.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace sadic {

WordSet WordSet::make(std::vector<Word> words) {
  if (words.empty()) throw Error("word set is empty");
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  WordSet s;
  for (const Word& w : words)
    if (w.empty()) throw Error("word set contains the empty word");
  s.members = std::move(words);
  s.equal_length = s.members.front().size();
  for (const Word& w : s.members)
    if (w.size() != *s.equal_length) s.equal_length.reset();
  return s;
}

std::size_t WordSet::max_length() const {
  std::size_t m = 0;
  for (const Word& w : members) m = std::max(m, w.size());
  return m;
}

std::optional<std::size_t> WordSet::find(WordView w) const {
  auto it = std::lower_bound(members.begin(), members.end(), w, [](const Word& a, WordView b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  });
  if (it == members.end() || !std::equal(it->begin(), it->end(), w.begin(), w.end())) return std::nullopt;
  return static_cast<std::size_t>(it - members.begin());
}

// ---------------------------------------------------------------------------
// Window factorizations

namespace {

bool is_suffix(WordView part, const Word& w) {
  return part.size() <= w.size() && std::equal(part.begin(), part.end(), w.end() - static_cast<std::ptrdiff_t>(part.size()));
}
bool is_prefix(WordView part, const Word& w) {
  return part.size() <= w.size() && std::equal(part.begin(), part.end(), w.begin());
}

std::size_t max_disjoint(const std::vector<WindowFactorization>& fs, bool& exact) {
  const std::size_t m = fs.size();
  std::vector<std::set<std::size_t>> cutsets;
  for (const auto& f : fs) cutsets.emplace_back(f.cuts.begin(), f.cuts.end());
  auto disjoint = [&](std::size_t i, std::size_t j) {
    for (std::size_t c : cutsets[i])
      if (cutsets[j].count(c)) return false;
    return true;
  };
  if (m <= 12) {
    exact = true;
    std::vector<std::uint32_t> clash(m, 0);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        if (i != j && !disjoint(i, j)) clash[i] |= 1u << j;
    std::size_t best = 0;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
      bool ok = true;
      for (std::size_t i = 0; i < m && ok; ++i)
        if ((mask >> i & 1u) && (clash[i] & mask)) ok = false;
      if (ok) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcount(mask)));
    }
    return best;
  }
  exact = false;
  std::vector<std::size_t> chosen;
  for (std::size_t i = 0; i < m; ++i) {
    bool ok = true;
    for (std::size_t j : chosen) ok = ok && disjoint(i, j);
    if (ok) chosen.push_back(i);
  }
  return chosen.size();
}

}  // namespace

FactorizationReport enumerate_window_factorizations(WordView window, const WordSet& W, std::size_t cap) {
  if (window.empty()) throw Error("window factorization needs a non-empty window");
  const std::size_t L = window.size();
  // match[i]: members occurring at i entirely inside the window.
  std::vector<std::vector<std::size_t>> match(L);
  for (std::size_t i = 0; i < L; ++i)
    for (std::size_t m = 0; m < W.size(); ++m) {
      const Word& w = W.members[m];
      if (i + w.size() <= L && std::equal(w.begin(), w.end(), window.begin() + static_cast<std::ptrdiff_t>(i)))
        match[i].push_back(m);
    }
  std::vector<std::vector<std::size_t>> head(L), tail(L);
  for (std::size_t p = 0; p < L; ++p) {
    for (std::size_t m = 0; m < W.size(); ++m) {
      if (p > 0 && p < W.members[m].size() && is_suffix(window.first(p), W.members[m])) head[p].push_back(m);
      if (is_prefix(window.subspan(p), W.members[m])) tail[p].push_back(m);
    }
  }
  auto can_start = [&](std::size_t p) { return p == 0 || !head[p].empty(); };

  // ways[i]: number of ways to finish from a cut at i (saturating).
  std::vector<std::uint64_t> ways(L + 1, 0);
  for (std::size_t i = L; i-- > 0;) {
    std::uint64_t w = tail[i].empty() ? 0 : 1;
    for (std::size_t m : match[i]) {
      std::size_t j = i + W.members[m].size();
      if (j < L) w = std::min<std::uint64_t>(w + ways[j], std::uint64_t{1} << 62);
    }
    ways[i] = w;
  }
  FactorizationReport rep;
  for (std::size_t p = 0; p < L; ++p)
    if (can_start(p)) rep.total = std::min<std::uint64_t>(rep.total + ways[p], std::uint64_t{1} << 62);

  // Depth-first enumeration in phase order.
  std::vector<std::size_t> cuts, labels;
  auto emit = [&](std::size_t last) {
    WindowFactorization f;
    f.cuts = cuts;
    f.labels = labels;
    f.head_candidates = head[cuts.front()];
    f.tail_candidates = tail[last];
    f.border_head = cuts.front() > 0;
    f.border_tail = true;
    for (std::size_t m : f.tail_candidates)
      if (W.members[m].size() == L - last) f.border_tail = false;
    rep.factorizations.push_back(std::move(f));
  };
  std::function<void(std::size_t)> dfs = [&](std::size_t i) {
    if (rep.factorizations.size() >= cap) {
      rep.truncated = true;
      return;
    }
    if (!tail[i].empty()) emit(i);
    for (std::size_t m : match[i]) {
      std::size_t j = i + W.members[m].size();
      if (j >= L || ways[j] == 0) continue;
      cuts.push_back(j);
      labels.push_back(m);
      dfs(j);
      cuts.pop_back();
      labels.pop_back();
    }
  };
  for (std::size_t p = 0; p < L; ++p) {
    if (!can_start(p) || ways[p] == 0) continue;
    cuts.assign(1, p);
    labels.clear();
    dfs(p);
  }
  rep.disjoint_phase_count = max_disjoint(rep.factorizations, rep.disjoint_exact);
  if (rep.truncated) rep.disjoint_exact = false;
  return rep;
}

// ---------------------------------------------------------------------------
// Recognizability

const char* to_string(RecogStatus s) {
  switch (s) {
    case RecogStatus::Certified: return "Certified";
    case RecogStatus::Counterexample: return "Counterexample";
    case RecogStatus::Unknown: return "Unknown";
  }
  return "?";
}

namespace {

constexpr std::uint64_t kMod = (std::uint64_t{1} << 61) - 1;
constexpr std::uint64_t kBase1 = 1000003, kBase2 = 998244353;

__extension__ typedef unsigned __int128 u128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  u128 p = static_cast<u128>(a) * b;
  std::uint64_t r = static_cast<std::uint64_t>((p & kMod) + (p >> 61));
  return r >= kMod ? r - kMod : r;
}
std::uint64_t addmod(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = a + b;
  return r >= kMod ? r - kMod : r;
}
std::uint64_t submod(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kMod - b; }

// Polynomial hash pair of a fixed-length window, updated by one letter at a time.
struct Roller {
  std::size_t len;
  std::uint64_t top1 = 1, top2 = 1;  // base^(len-1)
  std::uint64_t h1 = 0, h2 = 0;
  explicit Roller(std::size_t n) : len(n) {
    for (std::size_t i = 1; i < n; ++i) {
      top1 = mulmod(top1, kBase1);
      top2 = mulmod(top2, kBase2);
    }
  }
  void push(Letter c) {
    h1 = addmod(mulmod(h1, kBase1), c + 1);
    h2 = addmod(mulmod(h2, kBase2), c + 1);
  }
  void pop(Letter c) {
    h1 = submod(h1, mulmod(top1, c + 1));
    h2 = submod(h2, mulmod(top2, c + 1));
  }
  std::uint64_t key() const { return h1 ^ (h2 * 0x9e3779b97f4a7c15ULL); }
};

// Random access into tau(z) without materializing it.
struct ImageCursor {
  const Morphism& tau;
  WordView z;
  std::vector<std::uint64_t> off;  // off[j] = start of tau(z[j]); off.back() = total
  ImageCursor(const Morphism& t, WordView zz) : tau(t), z(zz) {
    off.push_back(0);
    for (Letter a : z) off.push_back(off.back() + tau.image(a).size());
  }
  std::size_t slot(std::uint64_t q) const {
    return static_cast<std::size_t>(std::upper_bound(off.begin(), off.end(), q) - off.begin()) - 1;
  }
  Letter at(std::uint64_t q) const {
    std::size_t j = slot(q);
    return tau.image(z[j])[static_cast<std::size_t>(q - off[j])];
  }
};

}  // namespace

std::uint64_t Recognizer::key(WordView w) const {
  Roller r(w.size());
  for (Letter c : w) r.push(c);
  return r.key();
}

Recognizer::Recognizer(const DirectiveSequence& seq, std::size_t n, std::size_t R, LanguageOptions opts)
    : tau_(seq.at(n)), R_(R) {
  if (R < 1) throw Error("recognizability radius starts at 1");
  if (!tau_.has_images()) throw DepthExhausted("level morphism is too long to scan");
  const std::size_t len = 2 * R;
  LevelCovers lc = level_covers(seq, n, len, opts);

  auto add = [&](std::uint64_t k, std::size_t off, Letter y0, const std::function<Word()>& sample) {
    auto [it, fresh] = map_.try_emplace(k);
    Entry& e = it->second;
    if (fresh) e.sample = sample();
    std::pair<std::size_t, Letter> v{off, y0};
    auto pos = std::lower_bound(e.interp.begin(), e.interp.end(), v);
    if (pos == e.interp.end() || *pos != v) {
      e.interp.insert(pos, v);
      if (e.interp.size() == 2) ++conflicts_;
    }
  };

  std::vector<std::uint8_t> used(tau_.domain().size(), 0);
  for (const Word& z : lc.covers)
    for (Letter a : z) used[a] = 1;

  // Windows inside one image: their center is determined by the letter alone.
  for (Letter c = 0; c < used.size(); ++c) {
    if (!used[c]) continue;
    const Word& y = tau_.image(c);
    if (y.size() < len) continue;
    Roller r(len);
    for (std::size_t i = 0; i < len; ++i) r.push(y[i]);
    for (std::size_t p = 0;; ++p) {
      add(r.key(), p + R, c, [&] { return Word(y.begin() + static_cast<std::ptrdiff_t>(p), y.begin() + static_cast<std::ptrdiff_t>(p + len)); });
      if (p + len >= y.size()) break;
      r.pop(y[p]);
      r.push(y[p + len]);
    }
  }

  // Windows that cross at least one image boundary, rolled interval by interval.
  for (const Word& z : lc.covers) {
    ImageCursor cur(tau_, z);
    const std::uint64_t total = cur.off.back();
    if (total < len) continue;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> iv;  // inclusive start ranges
    for (std::size_t j = 1; j < z.size(); ++j) {
      std::uint64_t b = cur.off[j];
      std::uint64_t lo = b + 1 > len ? b + 1 - len : 0;
      std::uint64_t hi = std::min<std::uint64_t>(b - 1, total - len);
      if (lo <= hi) iv.emplace_back(lo, hi);
    }
    std::sort(iv.begin(), iv.end());
    std::vector<std::pair<std::uint64_t, std::uint64_t>> merged;
    for (auto r : iv) {
      if (!merged.empty() && r.first <= merged.back().second + 1) merged.back().second = std::max(merged.back().second, r.second);
      else merged.push_back(r);
    }
    for (auto [lo, hi] : merged) {
      Roller r(len);
      for (std::uint64_t q = lo; q < lo + len; ++q) r.push(cur.at(q));
      for (std::uint64_t p = lo;; ++p) {
        std::uint64_t c = p + R;
        std::size_t j = cur.slot(c);
        add(r.key(), static_cast<std::size_t>(c - cur.off[j]), z[j], [&] {
          Word w;
          for (std::uint64_t q = p; q < p + len; ++q) w.push_back(cur.at(q));
          return w;
        });
        if (p == hi) break;
        r.pop(cur.at(p));
        r.push(cur.at(p + len));
      }
    }
  }
}

std::vector<std::pair<std::size_t, Letter>> Recognizer::interpretations(WordView w) const {
  if (w.size() != 2 * R_) throw Error("recognizer windows have length 2R");
  auto it = map_.find(key(w));
  if (it == map_.end() || !std::equal(w.begin(), w.end(), it->second.sample.begin(), it->second.sample.end())) return {};
  return it->second.interp;
}

std::optional<std::pair<std::size_t, Letter>> Recognizer::center(WordView w) const {
  auto v = interpretations(w);
  if (v.empty()) return std::nullopt;
  if (v.size() > 1) throw AmbiguousWindow("window has " + std::to_string(v.size()) + " centered interpretations");
  return v.front();
}

std::vector<Word> Recognizer::conflicting_windows() const {
  std::vector<Word> out;
  for (const auto& [k, e] : map_)
    if (e.interp.size() >= 2) out.push_back(e.sample);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::size_t smallest_period(WordView w) {
  for (std::size_t p = 1; p < w.size(); ++p) {
    bool ok = true;
    for (std::size_t i = p; i < w.size() && ok; ++i) ok = w[i] == w[i - p];
    if (ok) return p;
  }
  return w.size();
}

}  // namespace

RecognizabilityResult recognizability_radius(const DirectiveSequence& seq, std::size_t n, RecognizabilityOptions opts) {
  RecognizabilityResult res;
  const std::size_t r0 = std::max<std::size_t>(1, opts.r_max / 4);
  std::optional<Recognizer> at_r0;
  for (std::size_t R = 1; R <= opts.r_max; ++R) {
    res.radius = R;
    try {
      Recognizer rec(seq, n, R, opts.language);
      if (rec.unambiguous()) {
        res.status = RecogStatus::Certified;
        return res;
      }
      if (R == r0) at_r0.emplace(std::move(rec));
      else if (R == 4 * r0 && at_r0) {
        // Ambiguity on a periodic window is only a certificate when the language itself
        // is periodic (p(l) <= l for some l, Morse-Hedlund); otherwise it proves nothing.
        std::vector<Word> periodic;
        for (const Word& v : rec.conflicting_windows())
          if (smallest_period(v) <= r0) periodic.push_back(v);
        if (!periodic.empty()) {
          auto counts = compute_language(seq, n, 8 * r0, opts.language).counts();
          bool eventually_periodic = false;
          for (std::size_t l = 1; l < counts.size(); ++l) eventually_periodic = eventually_periodic || counts[l] <= l;
          if (eventually_periodic) {
            const Word& v = periodic.front();
            auto in = rec.interpretations(v);
            res.status = RecogStatus::Counterexample;
            res.window = v;
            res.consistency_depth = 4 * r0;
            CenteredRepresentation a, b;
            a.k = a.k_first = in[0].first;
            a.y0 = in[0].second;
            b.k = b.k_first = in[1].first;
            b.y0 = in[1].second;
            a.y_window = {a.y0};
            b.y_window = {b.y0};
            a.anchor = b.anchor = R;
            res.witness = std::make_pair(a, b);
            return res;
          }
        }
      }
    } catch (const Error& e) {
      res.note = e.what();
      res.status = RecogStatus::Unknown;
      return res;
    }
  }
  res.status = RecogStatus::Unknown;
  res.note = "ambiguous windows remain at the largest radius tried";
  return res;
}

CenteredRepresentation centered_representation(WordView window, const Recognizer& rec) {
  const std::size_t R = rec.radius();
  if (window.size() < 2 * R) throw Error("window shorter than 2R");
  const std::size_t lo = R, hi = window.size() - R;
  const std::size_t q0 = std::clamp(window.size() / 2, lo, hi);
  const Morphism& tau = rec.morphism();
  CenteredRepresentation out;
  std::size_t prev_k = 0;
  for (std::size_t q = lo; q <= hi; ++q) {
    auto c = rec.center(window.subspan(q - R, 2 * R));
    if (!c) throw UnparsableWindow("window is not in the language");
    auto [k, y] = *c;
    if (q == lo) {
      out.y_window.push_back(y);
      out.k_first = k;
      out.anchor = lo;
    } else if (k == 0) {
      if (prev_k + 1 != tau.image(out.y_window.back()).size()) throw AmbiguousWindow("centered interpretations disagree");
      out.y_window.push_back(y);
    } else if (k != prev_k + 1 || y != out.y_window.back()) {
      throw AmbiguousWindow("centered interpretations disagree");
    }
    if (q == q0) {
      out.k = k;
      out.y0 = y;
      out.y_center = out.y_window.size() - 1;
    }
    prev_k = k;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Return words

std::vector<std::size_t> occurrences(WordView window, const WordSet& W) {
  if (!W.equal_length) throw Error("return words need an equal-length word set");
  const std::size_t l = *W.equal_length;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i + l <= window.size(); ++i)
    if (W.find(window.subspan(i, l))) out.push_back(i);
  return out;
}

ReturnWords return_words(const DirectiveSequence& seq, std::size_t n, const WordSet& W, ReturnWordOptions opts) {
  if (!W.equal_length) throw Error("return words need an equal-length word set");
  const std::size_t l = *W.equal_length;
  ReturnWords out;
  out.W = W;
  std::set<Word> found;
  std::size_t quiet = 0;
  for (std::size_t D = n + 1; D <= n + opts.max_depth; ++D) {
    if (!seq.accessible(D - 1)) break;
    std::size_t top = D + 3;
    if (seq.is_finite()) top = std::min(top, seq.finite_length());
    if (top < D) break;
    Morphism tau = seq.compose_range(n, D);
    if (!tau.has_images() || saturate_u64(tau.total_length()) > opts.scan_budget) break;
    PairSet pairs = TwoBlockLadder::build(seq, D, top).at(D);
    std::size_t before = found.size();
    for (Letter a = 0; a < pairs.k; ++a)
      for (Letter b = 0; b < pairs.k; ++b) {
        if (!pairs.contains(a, b)) continue;
        Word u = tau.image(a);
        u.insert(u.end(), tau.image(b).begin(), tau.image(b).end());
        if (u.size() < 2 * l) continue;
        WordView inner = WordView(u).subspan(l, u.size() - 2 * l);
        auto occ = occurrences(inner, W);
        for (std::size_t i = 0; i + 1 < occ.size(); ++i)
          found.emplace(inner.begin() + static_cast<std::ptrdiff_t>(occ[i]), inner.begin() + static_cast<std::ptrdiff_t>(occ[i + 1]));
      }
    out.scan_depth = D;
    quiet = (found.size() == before && !found.empty()) ? quiet + 1 : 0;
    if (quiet >= 2) {
      out.stabilized = true;
      break;
    }
  }
  if (found.empty()) throw Error("no return words found within the scan budget");
  std::vector<Word> rs(found.begin(), found.end());
  std::sort(rs.begin(), rs.end(), [](const Word& a, const Word& b) { return a.size() != b.size() ? a.size() < b.size() : a < b; });
  out.returns.members = rs;
  out.returns.equal_length = rs.front().size();
  for (const Word& w : rs)
    if (w.size() != *out.returns.equal_length) out.returns.equal_length.reset();
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= rs.size(); ++i) names.push_back(std::to_string(i));
  out.coding = Morphism(Alphabet(names), seq.alphabet(n), rs);
  return out;
}

Word derive_window(WordView window, const ReturnWords& rw) {
  auto occ = occurrences(window, rw.W);
  if (occ.size() < 2) throw Error("window contains fewer than two occurrences of W");
  Word out;
  const auto& rs = rw.returns.members;
  for (std::size_t i = 0; i + 1 < occ.size(); ++i) {
    WordView u = window.subspan(occ[i], occ[i + 1] - occ[i]);
    auto it = std::find_if(rs.begin(), rs.end(), [&](const Word& r) { return std::equal(r.begin(), r.end(), u.begin(), u.end()); });
    if (it == rs.end()) throw Error("window contains a gap that is not a return word");
    out.push_back(static_cast<Letter>(it - rs.begin()));
  }
  return out;
}

}  // namespace sadic
