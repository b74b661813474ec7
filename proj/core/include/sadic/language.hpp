#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sadic/factor_index.hpp"
#include "sadic/sequence.hpp"

namespace sadic {

// Admissible 2-letter words over one alphabet, as a |A| x |A| table.
struct PairSet {
  std::size_t k = 0;
  std::vector<std::uint8_t> has;

  PairSet() = default;
  explicit PairSet(std::size_t k_, bool all = false) : k(k_), has(k_ * k_, all ? 1 : 0) {}
  bool contains(Letter a, Letter b) const { return has[a * k + b] != 0; }
  void insert(Letter a, Letter b) { has[a * k + b] = 1; }
  std::size_t size() const;
  bool operator==(const PairSet& o) const = default;
};

// Seeded with all pairs at level `top`, propagated down: level m holds the
// 2-factors of tau_m(ab) over the admissible ab of level m+1.
struct TwoBlockLadder {
  std::size_t bottom = 0, top = 0;
  std::vector<PairSet> levels;  // levels[m - bottom]

  static TwoBlockLadder build(const DirectiveSequence& seq, std::size_t bottom, std::size_t top);
  const PairSet& at(std::size_t m) const { return levels.at(m - bottom); }
};

// 2-factors of tau(ab) over the given pairs, from the morphism profile alone.
PairSet propagate_pairs(const Morphism& tau, const PairSet& upper);

enum class CertStatus { Certified, Heuristic };
const char* to_string(CertStatus s);

struct Certification {
  CertStatus status = CertStatus::Heuristic;
  std::size_t expansion_depth = 0;  // N
  std::size_t seed_level = 0;       // M
  std::size_t stability_window = 0; // s
};

struct LanguageOptions {
  std::size_t seed_depth = 3;  // M = N + seed_depth
  std::size_t stability = 2;   // s
  std::size_t primitivity_horizon = 32;
};

enum class Side { Left, Right };

struct SpecialWord {
  Word word;
  std::vector<Letter> extensions;
};

// L_1 .. L_max_len of L^{(n)}(tau). Stored as a factor index of covering words,
// so every length up to max_len is available without listing words eagerly.
class LanguageTable {
 public:
  std::size_t level() const { return level_; }
  std::size_t max_len() const { return max_len_; }
  const Certification& certification() const { return cert_; }
  const Alphabet& alphabet() const { return alphabet_; }
  // primitivity_window found a positive product within the horizon.
  bool primitive() const { return primitive_; }

  bool contains(WordView w) const;
  std::uint64_t count(std::size_t len) const;           // p(len)
  std::vector<std::uint64_t> counts() const;            // p(0..max_len)
  std::vector<Word> words(std::size_t len) const;       // sorted
  std::vector<Letter> right_extensions(WordView w) const;
  std::vector<Letter> left_extensions(WordView w) const;
  // Requires len < max_len.
  std::vector<SpecialWord> special(std::size_t len, Side side) const;
  std::uint64_t right_special_count(std::size_t len) const;
  const FactorIndex& index() const { return *fwd_; }

 private:
  friend LanguageTable compute_language(const DirectiveSequence&, std::size_t, std::size_t, LanguageOptions);
  const FactorIndex& reversed() const;

  std::size_t level_ = 0, max_len_ = 0;
  Certification cert_;
  Alphabet alphabet_;
  bool primitive_ = false;
  std::shared_ptr<FactorIndex> fwd_;
  std::shared_ptr<std::vector<Word>> sources_;
  mutable std::shared_ptr<FactorIndex> rev_;
};

// Smallest N with <tau_{[n,N)}> >= len, from incidence products only.
std::size_t expansion_depth(const DirectiveSequence& seq, std::size_t n, std::size_t len,
                            std::size_t depth_budget = 4096);

// Level-`at` words whose tau_{[n,at)} images contain, as factors, every length-len factor of
// tau_{[n,N)}(ab) over the given level-N pairs. Each is a maximal run of letters whose
// interior weight stays within len - 2.
std::vector<Word> cover_words(const DirectiveSequence& seq, std::size_t n, std::size_t N, const PairSet& pairs,
                              std::size_t at, std::size_t len);

// Level-(n+1) covers for length len, over the pairs of the deepest seed.
struct LevelCovers {
  std::size_t expansion_depth = 0;
  PairSet pairs;
  std::vector<Word> covers;
};
LevelCovers level_covers(const DirectiveSequence& seq, std::size_t n, std::size_t len, LanguageOptions opts = {});

LanguageTable compute_language(const DirectiveSequence& seq, std::size_t n, std::size_t max_len,
                               LanguageOptions opts = {});

struct ComplexityRow {
  std::size_t n;
  std::uint64_t p;
  std::int64_t delta;  // p(n+1) - p(n)
};
std::vector<ComplexityRow> complexity_table(const DirectiveSequence& seq, std::size_t level, std::size_t n_max,
                                            LanguageOptions opts = {});
std::vector<ComplexityRow> complexity_table(const LanguageTable& table, std::size_t n_max);
std::string complexity_csv(const std::vector<ComplexityRow>& rows);

std::vector<SpecialWord> special_words(const LanguageTable& table, std::size_t len, Side side);

}  // namespace sadic
