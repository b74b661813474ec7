#include "sadic/sequence.hpp"

#include <deque>
#include <mutex>

namespace sadic {

struct DirectiveSequence::Cache {
  std::recursive_mutex mu;
  std::deque<Morphism> levels;  // preamble, then generated levels in order
  GeneratorFn fn;
};

namespace {

void check_chain(const std::vector<Morphism>& ms) {
  for (std::size_t n = 0; n + 1 < ms.size(); ++n)
    if (!(ms[n].domain() == ms[n + 1].codomain()))
      throw Error("chain mismatch: domain of tau_" + std::to_string(n) + " differs from codomain of tau_" +
                  std::to_string(n + 1));
}

}  // namespace

DirectiveSequence DirectiveSequence::finite(std::vector<Morphism> morphisms) {
  check_chain(morphisms);
  DirectiveSequence s;
  s.kind_ = Kind::Finite;
  s.preamble_size_ = morphisms.size();
  s.cache_ = std::make_shared<Cache>();
  for (auto& m : morphisms) s.cache_->levels.push_back(std::move(m));
  return s;
}

DirectiveSequence DirectiveSequence::periodic(std::vector<Morphism> morphisms, std::size_t from) {
  if (from >= morphisms.size()) throw Error("periodic tail start beyond the listed morphisms");
  check_chain(morphisms);
  if (!(morphisms.back().domain() == morphisms[from].codomain()))
    throw Error("chain mismatch: periodic tail does not close up");
  DirectiveSequence s = finite(std::move(morphisms));
  s.kind_ = Kind::Periodic;
  s.periodic_from_ = from;
  return s;
}

DirectiveSequence DirectiveSequence::generated(std::vector<Morphism> preamble, GeneratorSpec spec, GeneratorFn fn) {
  DirectiveSequence s = finite(std::move(preamble));
  s.kind_ = Kind::Generated;
  s.gen_spec_ = std::move(spec);
  s.cache_->fn = std::move(fn);
  return s;
}

bool DirectiveSequence::accessible(std::size_t n) const {
  return kind_ != Kind::Finite || n < preamble_size_;
}

const Morphism& DirectiveSequence::at(std::size_t n) const {
  if (!cache_) throw DepthExhausted("empty directive sequence");
  switch (kind_) {
    case Kind::Finite:
      if (n >= preamble_size_)
        throw DepthExhausted("tau_" + std::to_string(n) + " is beyond a finite sequence of length " +
                             std::to_string(preamble_size_));
      return cache_->levels[n];
    case Kind::Periodic: {
      if (n < preamble_size_) return cache_->levels[n];
      std::size_t period = preamble_size_ - periodic_from_;
      return cache_->levels[periodic_from_ + (n - periodic_from_) % period];
    }
    case Kind::Generated: {
      std::lock_guard<std::recursive_mutex> lock(cache_->mu);
      while (cache_->levels.size() <= n) {
        std::size_t k = cache_->levels.size();
        Morphism m = cache_->fn(k, *this);
        if (k > 0 && !(cache_->levels[k - 1].domain() == m.codomain()))
          throw Error("generator broke the chain condition at level " + std::to_string(k));
        cache_->levels.push_back(std::move(m));
      }
      return cache_->levels[n];
    }
  }
  throw Error("unreachable");
}

const Alphabet& DirectiveSequence::alphabet(std::size_t n) const {
  if (kind_ == Kind::Finite && n == preamble_size_ && n > 0) return at(n - 1).domain();
  return at(n).codomain();
}

Morphism DirectiveSequence::compose_range(std::size_t n, std::size_t N) const {
  if (N < n) throw Error("compose_range with N < n");
  if (N == n) return Morphism::identity(alphabet(n));
  Morphism acc = at(N - 1);
  for (std::size_t k = N - 1; k-- > n;) acc = compose(at(k), acc);
  return acc;
}

IncidenceMatrix DirectiveSequence::incidence_range(std::size_t n, std::size_t N) const {
  if (N < n) throw Error("incidence_range with N < n");
  if (N == n) {
    std::size_t k = alphabet(n).size();
    IncidenceMatrix id(k, k);
    for (std::size_t i = 0; i < k; ++i) id.at(i, i) = 1;
    return id;
  }
  IncidenceMatrix acc = at(n).incidence();
  for (std::size_t k = n + 1; k < N; ++k) acc = acc * at(k).incidence();
  return acc;
}

std::vector<BigInt> DirectiveSequence::lengths_range(std::size_t n, std::size_t N) const {
  IncidenceMatrix m = incidence_range(n, N);
  std::vector<BigInt> out(m.cols());
  for (std::size_t a = 0; a < m.cols(); ++a) out[a] = m.column_sum(a);
  return out;
}

BigInt DirectiveSequence::min_len_range(std::size_t n, std::size_t N) const {
  auto ls = lengths_range(n, N);
  BigInt m = ls.at(0);
  for (const auto& l : ls) m = l < m ? l : m;
  return m;
}

BigInt DirectiveSequence::max_len_range(std::size_t n, std::size_t N) const {
  auto ls = lengths_range(n, N);
  BigInt m = 0;
  for (const auto& l : ls) m = l > m ? l : m;
  return m;
}

DirectiveSequence telescope(const DirectiveSequence& seq, std::vector<std::size_t> cuts,
                            std::optional<std::size_t> step) {
  if (cuts.empty() || cuts[0] != 0) throw Error("telescope cuts must start at 0");
  for (std::size_t i = 1; i < cuts.size(); ++i)
    if (cuts[i] <= cuts[i - 1]) throw Error("telescope cuts must be strictly increasing");
  if (step && *step == 0) throw Error("telescope step must be positive");
  if (!step) {
    if (cuts.size() < 2) throw Error("finite telescope needs at least two cuts");
    std::vector<Morphism> ms;
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) ms.push_back(seq.compose_range(cuts[k], cuts[k + 1]));
    return DirectiveSequence::finite(std::move(ms));
  }
  auto cut = [cuts, s = *step](std::size_t k) {
    if (k < cuts.size()) return cuts[k];
    return cuts.back() + (k - cuts.size() + 1) * s;
  };
  GeneratorSpec spec{"telescope", {}};
  return DirectiveSequence::generated({}, spec, [seq, cut](std::size_t k, const DirectiveSequence&) {
    return seq.compose_range(cut(k), cut(k + 1));
  });
}

std::optional<std::size_t> primitivity_window(const DirectiveSequence& seq, std::size_t n, std::size_t horizon) {
  if (horizon == 0) throw Error("primitivity horizon must be >= 1");
  SupportMatrix acc;
  for (std::size_t N = n + 1; N <= n + horizon; ++N) {
    if (!seq.accessible(N - 1)) return std::nullopt;
    SupportMatrix m(seq.at(N - 1).incidence());
    acc = (N == n + 1) ? m : acc * m;
    if (acc.positive()) return N;
  }
  return std::nullopt;
}

}  // namespace sadic
