#include "sadic/suite/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <map>

namespace sadic::oracle {

namespace {

// Depth-first reader of tau_[lo,hi)(a).
class ImageStream {
 public:
  ImageStream(const DirectiveSequence& seq, std::size_t lo, std::size_t hi, Letter a) : seq_(seq), lo_(lo) {
    if (hi == lo) {
      single_ = a;
      return;
    }
    push(hi - 1, a);
  }

  bool next(Letter& out) {
    if (single_) {
      out = *single_;
      single_.reset();
      return true;
    }
    while (!stack_.empty()) {
      Frame& f = stack_.back();
      if (f.run == f.img->size()) {
        stack_.pop_back();
        continue;
      }
      const auto [c, L] = (*f.img)[f.run];
      if (++f.rep == L) {
        f.rep = 0;
        ++f.run;
      }
      if (f.level == lo_) {
        out = c;
        return true;
      }
      push(f.level - 1, c);
    }
    return false;
  }

 private:
  struct Frame {
    std::size_t level;
    const RunImage* img;
    std::size_t run = 0;
    std::uint64_t rep = 0;
  };
  void push(std::size_t level, Letter a) {
    auto key = std::make_pair(level, a);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, seq_.at(level).run_image(a)).first;
    stack_.push_back({level, &it->second});
  }

  const DirectiveSequence& seq_;
  std::size_t lo_;
  std::optional<Letter> single_;
  std::vector<Frame> stack_;
  std::map<std::pair<std::size_t, Letter>, RunImage> cache_;
};

}  // namespace

std::set<Word> stream_language(const DirectiveSequence& seq, std::size_t n, std::size_t len, std::uint64_t cap) {
  std::set<Word> prev;
  bool have_prev = false;
  for (std::size_t N = n + 1; N <= n + 16 && seq.accessible(N - 1); ++N) {
    if (seq.min_len_range(n, N) < len) continue;
    std::set<Word> cur;
    const std::size_t k = seq.alphabet(n).size();
    // Windows are packed base-k into 64 bits when they fit, else kept as words.
    const bool packed = std::pow(static_cast<double>(k), static_cast<double>(len)) < 1e8;
    std::vector<std::uint8_t> seen;
    std::uint64_t mod = 1;
    if (packed) {
      for (std::size_t i = 0; i < len; ++i) mod *= k;
      seen.assign(mod, 0);
    }
    for (Letter a = 0; a < seq.alphabet(N).size(); ++a) {
      ImageStream s(seq, n, N, a);
      Word win;
      std::uint64_t code = 0, count = 0;
      Letter c;
      while (count < cap && s.next(c)) {
        ++count;
        if (packed) {
          code = (code * k + c) % mod;
          if (count >= len) seen[code] = 1;
        } else {
          win.push_back(c);
          if (win.size() > len) win.erase(win.begin());
          if (win.size() == len) cur.insert(win);
        }
      }
    }
    if (packed)
      for (std::uint64_t x = 0; x < mod; ++x)
        if (seen[x]) {
          Word w(len);
          std::uint64_t y = x;
          for (std::size_t i = len; i-- > 0;) {
            w[i] = static_cast<Letter>(y % k);
            y /= k;
          }
          cur.insert(std::move(w));
        }
    if (have_prev && cur == prev) return cur;
    prev = std::move(cur);
    have_prev = true;
  }
  return prev;
}

std::vector<std::set<Word>> shorter_factors(const std::set<Word>& top, std::size_t len) {
  std::vector<std::set<Word>> out(len + 1);
  for (const Word& w : top)
    for (std::size_t l = 1; l <= len; ++l)
      for (std::size_t i = 0; i + l <= w.size(); ++i) out[l].emplace(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(i + l));
  return out;
}

namespace {

template <class F>
void all_words(std::size_t k, std::size_t m, F&& f) {
  Word u(m, 0);
  while (true) {
    f(u);
    std::size_t i = m;
    while (i > 0 && u[i - 1] + 1 == k) u[--i] = 0;
    if (i == 0) return;
    ++u[i - 1];
  }
}

}  // namespace

std::set<Word> full_shift_factors(const Morphism& sigma, const Morphism& tau, std::size_t m, std::size_t n) {
  std::set<Word> out;
  all_words(tau.domain().size(), m, [&](const Word& u) {
    Word y = sigma.apply(tau.apply(u));
    for (std::size_t i = 0; i + n <= y.size(); ++i) out.emplace(y.begin() + static_cast<std::ptrdiff_t>(i), y.begin() + static_cast<std::ptrdiff_t>(i + n));
  });
  return out;
}

std::vector<std::set<Word>> f_sets(const Morphism& sigma, const Morphism& tau, std::size_t i, std::uint64_t n) {
  std::vector<std::set<Word>> out(sigma.domain().size());
  auto weight = [&](const Word& w, std::size_t upto) {
    std::uint64_t s = 0;
    for (std::size_t j = 0; j < upto; ++j) s += static_cast<std::uint64_t>(sigma.length(w[j]));
    return s;
  };
  all_words(tau.domain().size(), i, [&](const Word& u) {
    Word y = tau.apply(u);
    for (std::size_t p = 1; p < y.size(); ++p)
      for (std::size_t q = p + 1; q <= y.size(); ++q) {
        Word w(y.begin() + static_cast<std::ptrdiff_t>(p), y.begin() + static_cast<std::ptrdiff_t>(q));
        if (w.front() == y[p - 1]) break;
        if (weight(w, w.size() - 1) < n && n <= weight(w, w.size())) out[y[p - 1]].insert(w);
      }
  });
  return out;
}

std::uint64_t block_count(const Morphism& tau) {
  std::uint64_t k = 0;
  for (const Word& w : tau.images())
    for (std::size_t i = 0; i < w.size(); ++i)
      if (i == 0 || w[i] != w[i - 1]) ++k;
  return k;
}

std::uint64_t count_factorizations(const Word& window, const std::vector<Word>& W) {
  const std::size_t L = window.size();
  auto matches = [&](const Word& w, std::ptrdiff_t at) {
    // w placed at offset `at` (possibly negative or running past the end) agrees with the window
    for (std::size_t j = 0; j < w.size(); ++j) {
      std::ptrdiff_t p = at + static_cast<std::ptrdiff_t>(j);
      if (p < 0 || p >= static_cast<std::ptrdiff_t>(L)) continue;
      if (window[static_cast<std::size_t>(p)] != w[j]) return false;
    }
    return true;
  };
  // ways[p]: factorizations of window[p..) that start with a cut at p.
  std::vector<std::uint64_t> ways(L + 1, 0);
  for (std::size_t p = L; p-- > 0;) {
    std::uint64_t total = 0;
    bool tail = false;  // window[p..) is a non-empty prefix of some member
    for (const Word& w : W) {
      if (!matches(w, static_cast<std::ptrdiff_t>(p))) continue;
      if (p + w.size() >= L) tail = true;
      else total += ways[p + w.size()];
    }
    ways[p] = total + (tail ? 1 : 0);
  }
  // Head: empty or a proper suffix of some member ending at the first cut c.
  std::uint64_t out = 0;
  for (std::size_t c = 0; c < L; ++c) {
    if (ways[c] == 0) continue;
    std::uint64_t heads = c == 0 ? 1 : 0;
    for (const Word& w : W)
      if (c > 0 && w.size() > c && matches(w, static_cast<std::ptrdiff_t>(c) - static_cast<std::ptrdiff_t>(w.size()))) heads = 1;
    out += heads * ways[c];
  }
  return out;
}

}  // namespace sadic::oracle
