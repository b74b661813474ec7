#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sadic/words.hpp"

namespace sadic {

class DirectiveSequence;

struct GeneratorSpec {
  std::string name;
  std::vector<std::pair<std::string, std::string>> params;  // in declaration order
};

// Produces tau_n for n >= preamble size. May inspect earlier levels through `self`.
using GeneratorFn = std::function<Morphism(std::size_t n, const DirectiveSequence& self)>;

class DepthExhausted : public Error {
 public:
  using Error::Error;
};

// tau_n : A_{n+1}* -> A_n*, given by a preamble followed by a periodic tail, a
// generator, or nothing. Copies share one morphism cache; generated levels are
// built at most once per cache.
class DirectiveSequence {
 public:
  DirectiveSequence() = default;

  static DirectiveSequence finite(std::vector<Morphism> morphisms);
  // tau_n = morphisms[n] for n < size, then the block morphisms[from..] repeats.
  static DirectiveSequence periodic(std::vector<Morphism> morphisms, std::size_t from);
  static DirectiveSequence generated(std::vector<Morphism> preamble, GeneratorSpec spec, GeneratorFn fn);

  const Morphism& at(std::size_t n) const;
  bool accessible(std::size_t n) const;
  bool is_finite() const { return kind_ == Kind::Finite; }
  std::size_t finite_length() const { return preamble_size_; }
  std::size_t preamble_size() const { return preamble_size_; }

  // tau_{[n,N)} = tau_n o ... o tau_{N-1}; the identity on A_n when n == N.
  Morphism compose_range(std::size_t n, std::size_t N) const;
  IncidenceMatrix incidence_range(std::size_t n, std::size_t N) const;
  // |tau_{[n,N)}(a)| for every a in A_N, from incidence products only.
  std::vector<BigInt> lengths_range(std::size_t n, std::size_t N) const;
  BigInt min_len_range(std::size_t n, std::size_t N) const;
  BigInt max_len_range(std::size_t n, std::size_t N) const;
  const Alphabet& alphabet(std::size_t n) const;  // A_n

  enum class Kind { Finite, Periodic, Generated };
  Kind kind() const { return kind_; }
  std::size_t periodic_from() const { return periodic_from_; }
  const std::optional<GeneratorSpec>& generator() const { return gen_spec_; }

 private:
  struct Cache;
  Kind kind_ = Kind::Finite;
  std::size_t preamble_size_ = 0;
  std::size_t periodic_from_ = 0;
  std::optional<GeneratorSpec> gen_spec_;
  std::shared_ptr<Cache> cache_;
};

// Result k-th morphism = tau_{[cuts[k], cuts[k+1])}. After the listed cuts the
// indices continue with `step` when given; otherwise the result is finite.
DirectiveSequence telescope(const DirectiveSequence& seq, std::vector<std::size_t> cuts,
                            std::optional<std::size_t> step = std::nullopt);

// Smallest N in (n, n + horizon] with tau_{[n,N)} positive; nullopt when the horizon
// is exhausted (which says nothing about primitivity).
std::optional<std::size_t> primitivity_window(const DirectiveSequence& seq, std::size_t n, std::size_t horizon);

// The paper's rank-2 example: tau_n(0) = 011, tau_n(1) = 0^2 1 0^3 1 ... 0^{a_n} 1 with
// a_{n+1} = floor((3n+4) A_n / B_n) + margin.
struct Rank2Params {
  std::uint64_t a0 = 2;
  std::uint64_t margin = 1;
};
DirectiveSequence rank2_superlinear_sequence(Rank2Params params);

// Realized constants of the rank-2 generator: a_n, A_n = |tau_{[0,n]}(1)|,
// B_n = |tau_{[0,n]}(0)|, and C_n = B_{n-1} + ... + B_0 + 1.
struct Rank2Constants {
  std::vector<BigInt> a, A, B, C;
};
Rank2Constants rank2_constants(Rank2Params params, std::size_t levels);

// Registry used by the spec-file parser.
DirectiveSequence make_generated(const GeneratorSpec& spec, std::vector<Morphism> preamble);

}  // namespace sadic
