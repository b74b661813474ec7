#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sadic/bigint.hpp"

namespace sadic {

using Letter = std::uint32_t;
using Word = std::vector<Letter>;
using WordView = std::span<const Letter>;

struct WordHash {
  std::size_t operator()(WordView w) const noexcept;
  std::size_t operator()(const Word& w) const noexcept { return (*this)(WordView(w)); }
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Ordered list of distinct tokens. Letter i of a Word over this alphabet is symbols()[i].
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> symbols);

  // Tokens "0", "1", ..., "n-1".
  static Alphabet numbered(std::size_t n);

  std::size_t size() const { return symbols_.size(); }
  const std::string& symbol(Letter a) const { return symbols_.at(a); }
  const std::vector<std::string>& symbols() const { return symbols_; }
  std::optional<Letter> find(std::string_view token) const;
  Letter at(std::string_view token) const;
  bool single_char() const { return single_char_; }

  bool operator==(const Alphabet& o) const { return symbols_ == o.symbols_; }

 private:
  std::vector<std::string> symbols_;
  std::unordered_map<std::string, Letter> index_;
  bool single_char_ = true;
};

// Single-character alphabets print words glued ("0110"); otherwise tokens are space separated.
std::string format_word(WordView w, const Alphabet& alphabet);
// Accepts either whitespace-separated tokens or, for single-character alphabets, a glued string.
Word parse_word(std::string_view text, const Alphabet& alphabet);

// Rows are codomain letters b, columns domain letters a; entry (b, a) = |tau(a)|_b.
// The section on D(M) uses this orientation; the background section states the transpose.
class IncidenceMatrix {
 public:
  IncidenceMatrix() = default;
  IncidenceMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), m_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& at(std::size_t b, std::size_t a) { return m_[b * cols_ + a]; }
  const BigInt& at(std::size_t b, std::size_t a) const { return m_[b * cols_ + a]; }

  BigInt column_sum(std::size_t a) const;
  bool positive() const;
  IncidenceMatrix operator*(const IncidenceMatrix& rhs) const;
  bool operator==(const IncidenceMatrix& o) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<BigInt> m_;
};

// Zero pattern only; enough to decide positivity of long products.
class SupportMatrix {
 public:
  SupportMatrix() = default;
  SupportMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), m_(rows * cols, 0) {}
  explicit SupportMatrix(const IncidenceMatrix& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool at(std::size_t b, std::size_t a) const { return m_[b * cols_ + a] != 0; }
  bool positive() const;
  SupportMatrix operator*(const SupportMatrix& rhs) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::uint8_t> m_;
};

enum class Tri { False, True, Undetermined };
const char* to_string(Tri t);

struct MorphismMetrics {
  BigInt norm;
  BigInt min_len;
  BigInt r_comp;
  std::optional<Rational> d_ratio;  // absent when some incidence entry is 0
};

struct MorphismFlags {
  bool proper = false;
  bool positive = false;
  bool hat = false;
  Tri left_to_right = Tri::Undetermined;
};

// Counts of adjacent letter pairs inside one image, sparse and sorted by pair.
using PairCounts = std::vector<std::pair<std::pair<Letter, Letter>, BigInt>>;
// Run-length form of an image: (letter, run length) with adjacent letters distinct.
using RunImage = std::vector<std::pair<Letter, std::uint64_t>>;

// A non-erasing morphism tau: A* -> B*. Images are stored when they are small enough
// to materialize; otherwise only the profile (incidence, end letters, internal pair
// counts) is kept. Every quantity the language ladder and the metrics need is
// available from the profile, so very deep compositions stay usable.
class Morphism {
 public:
  struct Profile {
    IncidenceMatrix incidence;
    std::vector<Letter> first, last;
    std::vector<PairCounts> pairs;
    std::vector<RunImage> run_images;  // optional; empty when unknown
  };

  Morphism() = default;
  Morphism(Alphabet domain, Alphabet codomain, std::vector<Word> images);
  static Morphism from_profile(Alphabet domain, Alphabet codomain, Profile profile);
  static Morphism identity(const Alphabet& alphabet);

  const Alphabet& domain() const { return domain_; }
  const Alphabet& codomain() const { return codomain_; }

  bool has_images() const { return !images_.empty() || domain_.size() == 0; }
  const Word& image(Letter a) const;
  const std::vector<Word>& images() const;

  const BigInt& length(Letter a) const { return lengths_.at(a); }
  const IncidenceMatrix& incidence() const { return profile_.incidence; }
  Letter first(Letter a) const { return profile_.first.at(a); }
  Letter last(Letter a) const { return profile_.last.at(a); }
  const PairCounts& pair_counts(Letter a) const { return profile_.pairs.at(a); }
  const Profile& profile() const { return profile_; }
  // Run-length images, available for explicit morphisms and for profiles that carry them.
  bool has_run_images() const { return has_images() || !profile_.run_images.empty(); }
  RunImage run_image(Letter a) const;
  BigInt runs(Letter a) const;  // k(a): number of maximal constant blocks of tau(a)
  BigInt total_length() const;

  Word apply(WordView w) const;

  bool operator==(const Morphism& o) const;

 private:
  void finish_profile_from_images();
  void finish_lengths();

  Alphabet domain_, codomain_;
  std::vector<Word> images_;
  Profile profile_;
  std::vector<BigInt> lengths_;
};

// Images are materialized only while the composed total length stays below this.
inline constexpr std::uint64_t kExplicitLetterBudget = std::uint64_t{1} << 22;

Morphism compose(const Morphism& outer, const Morphism& inner);
MorphismMetrics morphism_metrics(const Morphism& tau);
MorphismFlags classify(const Morphism& tau);
// D(M) for a positive matrix: sup over rows of max/min within the row.
std::optional<Rational> d_ratio(const IncidenceMatrix& m);

struct Decomposition {
  Morphism sigma;  // hat-morphism a -> (1,a)...(|tau(a)|,a)
  Morphism psi;    // letter-to-letter (i,a) -> tau(a)_i
};
Decomposition decompose_recognizable(const Morphism& tau);

}  // namespace sadic
