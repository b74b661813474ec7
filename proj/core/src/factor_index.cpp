#include "sadic/factor_index.hpp"

#include <algorithm>

namespace sadic {

FactorIndex::FactorIndex(std::size_t alphabet_size) : k_(alphabet_size) {
  next_.assign(k_, -1);
  link_.push_back(-1);
  len_.push_back(0);
}

int FactorIndex::clone_state(int q) {
  int c = static_cast<int>(len_.size());
  next_.insert(next_.end(), next_.begin() + static_cast<std::ptrdiff_t>(q * k_),
               next_.begin() + static_cast<std::ptrdiff_t>((q + 1) * k_));
  link_.push_back(link_[q]);
  len_.push_back(len_[q]);
  return c;
}

void FactorIndex::add(WordView w) {
  int last = 0;
  for (Letter ch : w) {
    if (ch >= k_) throw Error("factor index: letter outside alphabet");
    const std::size_t c = ch;
    int q = next_[last * k_ + c];
    if (q != -1) {
      // Transition exists already: the generalized construction reuses or splits.
      if (len_[last] + 1 == len_[q]) {
        last = q;
        continue;
      }
      int cl = clone_state(q);
      len_[cl] = len_[last] + 1;
      link_[q] = cl;
      for (int p = last; p != -1 && next_[p * k_ + c] == q; p = link_[p]) next_[p * k_ + c] = cl;
      last = cl;
      continue;
    }
    int cur = static_cast<int>(len_.size());
    next_.insert(next_.end(), k_, -1);
    link_.push_back(0);
    len_.push_back(len_[last] + 1);
    int p = last;
    while (p != -1 && next_[p * k_ + c] == -1) {
      next_[p * k_ + c] = cur;
      p = link_[p];
    }
    if (p != -1) {
      q = next_[p * k_ + c];
      if (len_[p] + 1 == len_[q]) {
        link_[cur] = q;
      } else {
        int cl = clone_state(q);
        len_[cl] = len_[p] + 1;
        link_[q] = cl;
        link_[cur] = cl;
        for (; p != -1 && next_[p * k_ + c] == q; p = link_[p]) next_[p * k_ + c] = cl;
      }
    }
    last = cur;
  }
}

int FactorIndex::walk(WordView w) const {
  int v = 0;
  for (Letter c : w) {
    if (c >= k_) return -1;
    v = next_[v * k_ + c];
    if (v == -1) return -1;
  }
  return v;
}

bool FactorIndex::contains(WordView w) const { return walk(w) != -1; }

std::size_t FactorIndex::outdeg(int v) const {
  std::size_t d = 0;
  for (std::size_t c = 0; c < k_; ++c) d += next_[v * k_ + c] != -1;
  return d;
}

std::vector<std::uint64_t> FactorIndex::counts(std::size_t max_len) const {
  std::vector<std::int64_t> diff(max_len + 2, 0);
  diff[0] += 1;  // the empty word
  diff[1] -= 1;
  for (std::size_t v = 1; v < len_.size(); ++v) {
    std::size_t lo = len_[link_[v]] + 1, hi = len_[v];
    if (lo > max_len) continue;
    diff[lo] += 1;
    diff[std::min(hi, max_len) + 1] -= 1;
  }
  std::vector<std::uint64_t> out(max_len + 1);
  std::int64_t run = 0;
  for (std::size_t l = 0; l <= max_len; ++l) out[l] = static_cast<std::uint64_t>(run += diff[l]);
  return out;
}

void FactorIndex::right_special_counts(std::size_t max_len, std::vector<std::uint64_t>& specials,
                                       std::vector<std::uint64_t>& excess) const {
  std::vector<std::int64_t> ds(max_len + 2, 0), de(max_len + 2, 0);
  for (std::size_t v = 0; v < len_.size(); ++v) {
    std::size_t d = outdeg(static_cast<int>(v));
    if (d < 2) continue;
    std::size_t lo = v == 0 ? 0 : len_[link_[v]] + 1, hi = len_[v];
    if (lo > max_len) continue;
    std::size_t top = std::min(hi, max_len) + 1;
    ds[lo] += 1;
    ds[top] -= 1;
    de[lo] += static_cast<std::int64_t>(d - 1);
    de[top] -= static_cast<std::int64_t>(d - 1);
  }
  specials.assign(max_len + 1, 0);
  excess.assign(max_len + 1, 0);
  std::int64_t rs = 0, re = 0;
  for (std::size_t l = 0; l <= max_len; ++l) {
    specials[l] = static_cast<std::uint64_t>(rs += ds[l]);
    excess[l] = static_cast<std::uint64_t>(re += de[l]);
  }
}

std::vector<Letter> FactorIndex::extensions(WordView w) const {
  std::vector<Letter> out;
  int v = walk(w);
  if (v == -1) return out;
  for (std::size_t c = 0; c < k_; ++c)
    if (next_[v * k_ + c] != -1) out.push_back(static_cast<Letter>(c));
  return out;
}

void FactorIndex::for_each(std::size_t len, const std::function<bool(const Word&, std::size_t)>& fn) const {
  Word cur;
  cur.reserve(len);
  std::vector<std::pair<int, std::size_t>> stack;  // (state, next letter to try)
  stack.emplace_back(0, 0);
  if (len == 0) {
    fn(cur, outdeg(0));
    return;
  }
  while (!stack.empty()) {
    auto& [v, c] = stack.back();
    if (c == k_) {
      stack.pop_back();
      if (!cur.empty()) cur.pop_back();
      continue;
    }
    std::size_t letter = c++;
    int nv = next_[v * k_ + letter];
    if (nv == -1) continue;
    cur.push_back(static_cast<Letter>(letter));
    if (cur.size() == len) {
      bool go_on = fn(cur, outdeg(nv));
      cur.pop_back();
      if (!go_on) return;
      continue;
    }
    stack.emplace_back(nv, 0);
  }
}

}  // namespace sadic
