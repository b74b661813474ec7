#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "sadic/words.hpp"

namespace sadic {

// Generalized suffix automaton over a set of words: every factor of every inserted
// word is a path from the root, and the strings ending in one state share their
// right extensions. Transitions are a flat |A|-wide table.
class FactorIndex {
 public:
  explicit FactorIndex(std::size_t alphabet_size = 0);

  void add(WordView w);
  bool contains(WordView w) const;
  std::size_t alphabet_size() const { return k_; }
  std::size_t states() const { return len_.size(); }

  // Number of distinct factors of each length 0..max_len.
  std::vector<std::uint64_t> counts(std::size_t max_len) const;
  // Number of right-special factors, and sum of (extensions - 1), for each length 0..max_len.
  void right_special_counts(std::size_t max_len, std::vector<std::uint64_t>& specials,
                            std::vector<std::uint64_t>& excess) const;

  // Right extension letters of w (empty if w is not a factor).
  std::vector<Letter> extensions(WordView w) const;
  // Visit every factor of length `len` in lexicographic letter order. The callback
  // receives the word and its state's out-degree; returning false stops the walk.
  void for_each(std::size_t len, const std::function<bool(const Word&, std::size_t)>& fn) const;

 private:
  int walk(WordView w) const;
  int clone_state(int q);
  std::size_t outdeg(int v) const;

  std::size_t k_;
  std::vector<int> next_;
  std::vector<int> link_;
  std::vector<std::uint32_t> len_;
};

}  // namespace sadic
