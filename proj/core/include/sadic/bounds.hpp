#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sadic/language.hpp"

namespace sadic {

// Where F(b, n, sigma, L) draws its words from: factors of tau(A^i), or of tau over the
// full shift, realized by all domain words of one length (at most `param`).
struct Scope {
  enum class Kind { Images, FullLanguage };
  Kind kind = Kind::Images;
  std::size_t param = 2;

  static Scope images(std::size_t i) { return {Kind::Images, i}; }
  static Scope full_language(std::size_t budget = 8) { return {Kind::FullLanguage, budget}; }
};

// Words w with b.w admissible, w_1 != b, |sigma(w minus its last letter)| < n <= |sigma(w)|.
struct FSet {
  Letter b = 0;
  std::uint64_t n = 0;
  std::vector<Word> members;  // sorted
};

struct RelativeComplexity {
  std::vector<FSet> f_sets;  // one per letter of B
  std::uint64_t value = 0;
  bool budget_exhausted = false;  // the full-language scope was cut short
};

// Only |sigma(b)| is read from sigma, and tau may be given by run-length images.
RelativeComplexity relative_complexity(const Morphism& sigma, const Morphism& tau, std::uint64_t n, Scope scope);

// Distinct length-n factors of sigma(tau(u)) over all u of length ceil(n / <sigma tau>) + 2.
std::uint64_t full_shift_complexity(const Morphism& sigma, const Morphism& tau, std::uint64_t n);

struct BoundRow {
  std::uint64_t n = 0;
  std::string label;  // which inequality, when a kind checks several
  BigInt lhs;
  std::string rhs;                  // exact form of the bound
  std::optional<Rational> slack;    // rhs - lhs when the bound is rational
  bool ok = false;
  bool informational = false;       // reported, not part of all_hold
};

struct BoundReport {
  std::string kind;
  std::uint64_t lo = 0, hi = 0;  // interval checked
  std::vector<BoundRow> rows;
  bool all_hold = true;
  std::optional<Rational> worst_slack;
  std::optional<BoundRow> counterexample;
  std::vector<std::string> notes;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

// p(n) <= (|B| + comp2(sigma, tau, n)) n on [||sigma||, <sigma tau>]; tau positive.
BoundReport verify_two_morphism(const Morphism& tau, const Morphism& sigma);
// The two-interval bound for phi sigma tau; tau and sigma positive.
BoundReport verify_three_morphism(const Morphism& tau, const Morphism& sigma, const Morphism& phi);
// comp(sigma, tau, ||sigma||) <= |B|^(||sigma||/<sigma> + 1), and <= ||sigma||/<sigma> + 1 when |B| = 2.
// The row for ceil(||sigma||/<sigma>) + 1 is informational.
BoundReport verify_relcomp_props(const Morphism& sigma, const Morphism& tau, std::size_t budget = 8);
// comp1 <= r-comp(tau) and comp2 <= |A| r-comp(tau) + comp1 for n in [1, n_max].
BoundReport verify_rcomp_domination(const Morphism& sigma, const Morphism& tau, std::uint64_t n_max);

std::string format_report(const BoundReport& r);

// ||tau_[0,m]|| / <tau_[0,m]> against D(M_m), level by level.
struct DomRow {
  std::size_t level = 0;
  Rational ratio;
  std::optional<Rational> d;
  bool ok = false;
};
std::vector<DomRow> dm_domination(const DirectiveSequence& seq, std::size_t levels);

struct ProfileRow {
  std::uint64_t n = 0;
  std::uint64_t p = 0;
  double p_over_n = 0, p_over_n2 = 0, log_p_over_n = 0;
  std::size_t level = 0;  // smallest m with ||tau_[0,m]|| >= n
  BigInt norm, min_len;   // of tau_[0,m]
  std::optional<Rational> d;  // D(M_m)
};

struct ComplexityProfile {
  std::vector<ProfileRow> rows;
  std::vector<DomRow> domination;  // filled when every level is positive and proper
  bool domination_ok = true;
  // p(n)/n^2 at n = ||tau_[0,m]|| within range; decreasing along the checkpoints.
  std::vector<std::pair<std::uint64_t, Rational>> checkpoints;
  bool checkpoints_decreasing = true;
};

ComplexityProfile growth_profiles(const DirectiveSequence& seq, std::uint64_t n_max);
std::string profile_csv(const ComplexityProfile& p);

// Checks of the rank-2 superlinear construction.
struct Rank2CheckOptions {
  std::size_t depth = 2;             // levels n for the prefix and W_n(k) checks
  std::size_t max_k = 4;             // W_n(k) for k <= max_k
  std::size_t horizon = 600;         // language length for the bracket check
  std::size_t claim_levels = 4;      // m = 0 .. claim_levels - 1
  std::uint64_t claim_dense = 400;   // every n up to this, then geometric
  std::uint64_t claim_max_n = 200000;
};

struct Rank2Report {
  struct Prefix {
    std::size_t n;
    bool ok;
  };
  struct Special {
    std::size_t n, k;
    std::uint64_t length;
    bool ok;
  };
  struct Bracket {
    std::size_t n, k;
    std::uint64_t lo, hi;  // N in [lo, hi] checked
    std::uint64_t min_specials;
    Rational bound;
    bool ok;
  };
  struct Claim {
    std::size_t m;
    std::uint64_t n, comp;
    Rational bound;  // 6n / B_m
    bool ok;
    bool used_range;   // n >= B_m, the lengths where the bound feeds the complexity estimate
    bool ok_ceiling;   // comp <= 6 ceil(n / B_m)
  };
  std::vector<Prefix> prefixes;
  std::vector<Special> specials;
  std::vector<Bracket> brackets;
  std::vector<Claim> claims;
  std::vector<std::string> budget_notes;
  bool all_ok() const;
  // The claim rows restricted to n >= B_m, or checked against 6 ceil(n / B_m).
  bool claims_ok_in_used_range() const;
  bool claims_ok_with_ceiling() const;
};

Rank2Report rank2_paper_checks(const DirectiveSequence& seq, Rank2CheckOptions opts = {});

}  // namespace sadic
