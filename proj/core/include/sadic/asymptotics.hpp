#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sadic/language.hpp"

namespace sadic {

// The word u on which every x in A{A,B}* and y in B{A,B}* agree before they split.
// Throws when A = B, or when A and B are powers of one word (then nothing ever splits).
Word divergence_word(WordView A, WordView B);
// Checks u against every concatenation long enough to decide the split.
bool divergence_holds(WordView A, WordView B, WordView u);

// nodes[l - 1] is the right-special word of length l; each is a suffix of the next.
struct SpecialChain {
  std::vector<Word> nodes;
  std::vector<std::vector<Letter>> branches;  // right extensions per node
};

struct ChainOptions {
  std::size_t horizon_factor = 40;  // chains must extend to length factor * depth
  LanguageOptions language;
};

struct ChainReport {
  std::size_t depth = 0;
  std::size_t horizon = 0;
  std::vector<SpecialChain> chains;       // persistent chains reaching the depth
  std::vector<std::size_t> counts;        // persistent right-special words, lengths 1..depth
  std::vector<std::size_t> right_special; // all right-special words, lengths 1..depth
  bool linking_ok = true;                 // suffixes of right-special words are right special
  bool counts_settle = true;              // persistent counts non-increasing over the second half
};

// A right-special word of length l counts when it is the suffix of a right-special
// word at the horizon length.
ChainReport right_special_chains(const DirectiveSequence& seq, std::size_t depth, ChainOptions opts = {});

class PeriodicInput : public Error {
 public:
  using Error::Error;
};

struct AsymptoticReport {
  ChainReport chains;
  std::vector<std::vector<Letter>> diverging;  // per chain, the extensions of its last word
  std::optional<bool> two_letter_bound_ok;     // set for two-letter alphabets
};

// Throws PeriodicInput when p(l) <= l for some computed l.
AsymptoticReport asymptotic_report(const DirectiveSequence& seq, std::size_t depth, ChainOptions opts = {});
std::string format_asymptotic(const AsymptoticReport& r, const Alphabet& alphabet);

}  // namespace sadic
