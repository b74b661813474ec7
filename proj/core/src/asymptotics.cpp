#include "sadic/asymptotics.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace sadic {

namespace {

Word concat(WordView a, WordView b) {
  Word w(a.begin(), a.end());
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

// Prefixes of length `len` of all words in head{A,B}*.
std::set<Word> prefixes(WordView head, WordView A, WordView B, std::size_t len) {
  std::set<Word> out;
  std::vector<Word> stack{Word(head.begin(), head.end())};
  while (!stack.empty()) {
    Word w = std::move(stack.back());
    stack.pop_back();
    if (w.size() >= len) {
      w.resize(len);
      out.insert(std::move(w));
      continue;
    }
    stack.push_back(concat(w, A));
    stack.push_back(concat(w, B));
  }
  return out;
}

}  // namespace

Word divergence_word(WordView A, WordView B) {
  if (A.empty() || B.empty()) throw Error("divergence word needs non-empty words");
  if (std::ranges::equal(A, B)) throw Error("divergence word needs two different words");
  if (concat(A, B) == concat(B, A)) throw Error("the two words are powers of one word and never diverge");
  if (A.size() > B.size()) std::swap(A, B);
  const std::size_t common = static_cast<std::size_t>(std::ranges::mismatch(A, B).in1 - A.begin());
  if (A.size() == B.size() || common < A.size()) return Word(A.begin(), A.begin() + static_cast<std::ptrdiff_t>(common));
  return concat(A, divergence_word(A, B.subspan(A.size())));
}

bool divergence_holds(WordView A, WordView B, WordView u) {
  const std::size_t len = u.size() + 1;
  std::set<Word> xs = prefixes(A, A, B, len), ys = prefixes(B, A, B, len);
  std::set<Letter> xl, yl;
  for (const Word& x : xs) {
    if (!std::equal(u.begin(), u.end(), x.begin())) return false;
    xl.insert(x.back());
  }
  for (const Word& y : ys) {
    if (!std::equal(u.begin(), u.end(), y.begin())) return false;
    if (xl.count(y.back())) return false;
  }
  return true;
}

ChainReport right_special_chains(const DirectiveSequence& seq, std::size_t depth, ChainOptions opts) {
  if (depth == 0) throw Error("chain depth starts at 1");
  ChainReport rep;
  rep.depth = depth;
  rep.horizon = std::max(depth + 1, opts.horizon_factor * depth);
  LanguageTable table = compute_language(seq, 0, rep.horizon + 1, opts.language);

  std::vector<Word> top;
  for (SpecialWord& s : table.special(rep.horizon, Side::Right)) top.push_back(std::move(s.word));

  for (std::size_t l = 1; l <= depth; ++l) {
    std::set<Word> persistent;
    for (const Word& w : top) persistent.emplace(w.end() - static_cast<std::ptrdiff_t>(l), w.end());
    rep.counts.push_back(persistent.size());
    auto all = table.special(l, Side::Right);
    rep.right_special.push_back(all.size());
    if (l > 1)
      for (const SpecialWord& s : all)
        if (table.right_extensions(WordView(s.word).subspan(1)).size() < 2) rep.linking_ok = false;
    if (l == depth)
      for (const Word& w : persistent) {
        SpecialChain c;
        for (std::size_t k = 1; k <= depth; ++k) {
          c.nodes.emplace_back(w.end() - static_cast<std::ptrdiff_t>(k), w.end());
          c.branches.push_back(table.right_extensions(c.nodes.back()));
        }
        rep.chains.push_back(std::move(c));
      }
  }
  for (std::size_t l = depth / 2 + 1; l < rep.counts.size(); ++l)
    if (rep.counts[l] > rep.counts[l - 1]) rep.counts_settle = false;
  return rep;
}

AsymptoticReport asymptotic_report(const DirectiveSequence& seq, std::size_t depth, ChainOptions opts) {
  AsymptoticReport rep;
  rep.chains = right_special_chains(seq, depth, opts);
  LanguageTable table = compute_language(seq, 0, rep.chains.horizon, opts.language);
  auto p = table.counts();
  for (std::size_t l = 1; l < p.size(); ++l)
    if (p[l] <= l) throw PeriodicInput("p(" + std::to_string(l) + ") = " + std::to_string(p[l]) + ": the language is eventually periodic");
  for (const SpecialChain& c : rep.chains.chains) rep.diverging.push_back(c.branches.back());
  if (table.alphabet().size() == 2) rep.two_letter_bound_ok = rep.chains.chains.size() <= 2;
  return rep;
}

std::string format_asymptotic(const AsymptoticReport& r, const Alphabet& alphabet) {
  std::ostringstream os;
  os << "depth=" << r.chains.depth << " chains=" << r.chains.chains.size() << '\n';
  for (std::size_t i = 0; i < r.chains.chains.size(); ++i) {
    os << "chain " << i + 1 << " word=" << format_word(r.chains.chains[i].nodes.back(), alphabet) << " diverging=";
    for (std::size_t k = 0; k < r.diverging[i].size(); ++k) os << (k ? "," : "") << alphabet.symbol(r.diverging[i][k]);
    os << '\n';
  }
  if (r.two_letter_bound_ok) os << "two_letter_bound_ok=" << (*r.two_letter_bound_ok ? "true" : "false") << '\n';
  return os.str();
}

}  // namespace sadic
