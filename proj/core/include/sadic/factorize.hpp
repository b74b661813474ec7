#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <unordered_map>
#include <string>
#include <vector>

#include "sadic/language.hpp"

namespace sadic {

// A finite set of non-empty words over one alphabet, kept sorted.
struct WordSet {
  std::vector<Word> members;
  std::optional<std::size_t> equal_length;

  static WordSet make(std::vector<Word> words);
  std::size_t size() const { return members.size(); }
  std::size_t max_length() const;
  std::optional<std::size_t> find(WordView w) const;
};

// Cuts are positions in [0, |window|). Segments between consecutive cuts are whole
// members; the head window[0, cuts[0]) is empty or a proper suffix of a member, and
// the tail window[cuts.back(), |window|) is a non-empty prefix of a member.
struct WindowFactorization {
  std::vector<std::size_t> cuts;
  std::vector<std::size_t> labels;           // one per complete segment between cuts
  std::vector<std::size_t> head_candidates;  // members the head is a proper suffix of
  std::vector<std::size_t> tail_candidates;  // members the tail is a prefix of
  bool border_head = false;
  bool border_tail = false;  // tail is a proper prefix of every candidate

  std::size_t phase() const { return cuts.front(); }
};

struct FactorizationReport {
  std::vector<WindowFactorization> factorizations;
  std::uint64_t total = 0;  // number of factorizations, saturating
  bool truncated = false;   // enumeration stopped at the cap
  std::size_t disjoint_phase_count = 0;
  bool disjoint_exact = true;  // false: greedy lower bound
};

FactorizationReport enumerate_window_factorizations(WordView window, const WordSet& W,
                                                    std::size_t cap = std::size_t{1} << 16);

// (k, y0): the window center sits at offset k of tau_n(y0). y_window lists the letters
// determined around it, with y_window[y_center] = y0; tau_n(y_window) read from offset
// k_first reproduces the window from position `anchor` over the determined span.
struct CenteredRepresentation {
  std::size_t k = 0;
  Letter y0 = 0;
  Word y_window;
  std::size_t y_center = 0;
  std::size_t k_first = 0;
  std::size_t anchor = 0;
};

enum class RecogStatus { Certified, Counterexample, Unknown };
const char* to_string(RecogStatus s);

struct RecognizabilityResult {
  RecogStatus status = RecogStatus::Unknown;
  std::size_t radius = 0;  // certified R, or the last radius tried
  std::string note;        // why Unknown, when known
  // Counterexample: one periodic window with two centered interpretations.
  Word window;
  std::optional<std::pair<CenteredRepresentation, CenteredRepresentation>> witness;
  std::size_t consistency_depth = 0;
};

struct RecognizabilityOptions {
  std::size_t r_max = 64;
  LanguageOptions language;
};

RecognizabilityResult recognizability_radius(const DirectiveSequence& seq, std::size_t n,
                                             RecognizabilityOptions opts = {});

// Windows of length 2R of L^{(n)} mapped to the (k, y0) of their center.
class Recognizer {
 public:
  Recognizer(const DirectiveSequence& seq, std::size_t n, std::size_t R, LanguageOptions opts = {});
  std::size_t radius() const { return R_; }
  bool unambiguous() const { return conflicts_ == 0; }
  std::size_t conflicts() const { return conflicts_; }
  // nullopt when the window is not in the language; throws on ambiguity.
  std::optional<std::pair<std::size_t, Letter>> center(WordView window2R) const;
  std::vector<Word> conflicting_windows() const;  // sorted
  std::vector<std::pair<std::size_t, Letter>> interpretations(WordView window2R) const;
  const Morphism& morphism() const { return tau_; }

 private:
  struct Entry {
    std::vector<std::pair<std::size_t, Letter>> interp;  // sorted, unique
    Word sample;
  };
  std::uint64_t key(WordView w) const;

  Morphism tau_;
  std::size_t R_;
  std::size_t conflicts_ = 0;
  std::unordered_map<std::uint64_t, Entry> map_;
};

class AmbiguousWindow : public Error {
 public:
  using Error::Error;
};
class UnparsableWindow : public Error {
 public:
  using Error::Error;
};

CenteredRepresentation centered_representation(WordView window, const Recognizer& rec);

struct ReturnWords {
  WordSet W;
  WordSet returns;  // sorted by (length, lex); coding letter i+1 maps to returns.members[i]
  Morphism coding;  // {1..r} -> A_n
  bool stabilized = false;
  std::size_t scan_depth = 0;
};

struct ReturnWordOptions {
  std::size_t max_depth = 24;                           // levels above n to try
  std::uint64_t scan_budget = std::uint64_t{1} << 24;   // letters per level
};

ReturnWords return_words(const DirectiveSequence& seq, std::size_t n, const WordSet& W, ReturnWordOptions opts = {});

// Positions i with window[i, i + l_W) in W.
std::vector<std::size_t> occurrences(WordView window, const WordSet& W);
// Coding of the window between its first and last W-occurrence.
Word derive_window(WordView window, const ReturnWords& rw);

}  // namespace sadic
