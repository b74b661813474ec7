#include "sadic/suite/corpus.hpp"

#include <algorithm>
#include <optional>
#include <random>

#include "sadic/specfile.hpp"

namespace sadic::corpus {

namespace {

// Plain modulo draws keep the corpus identical across standard libraries.
struct Draw {
  std::mt19937_64 rng;
  std::size_t below(std::size_t k) { return static_cast<std::size_t>(rng() % k); }
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
};

// A word of length len containing every letter of a k-letter alphabet, with the
// first and last letters fixed when asked.
Word covering_word(Draw& d, std::size_t k, std::size_t len, std::optional<Letter> first, std::optional<Letter> last) {
  while (true) {
    Word w(len);
    for (auto& c : w) c = static_cast<Letter>(d.below(k));
    if (first) w.front() = *first;
    if (last) w.back() = *last;
    std::vector<bool> seen(k, false);
    for (Letter c : w) seen[c] = true;
    if (std::find(seen.begin(), seen.end(), false) == seen.end()) return w;
  }
}

Morphism positive(Draw& d, const Alphabet& dom, const Alphabet& cod, bool proper) {
  std::optional<Letter> f, l;
  if (proper) {
    f = static_cast<Letter>(d.below(cod.size()));
    l = static_cast<Letter>(d.below(cod.size()));
  }
  // Fixed ends cover one letter (or two when distinct); the free middle covers the rest.
  std::size_t lo = cod.size();
  if (proper) lo = *f == *l ? cod.size() + 1 : std::max<std::size_t>(cod.size(), 2);
  std::vector<Word> imgs;
  for (std::size_t a = 0; a < dom.size(); ++a) imgs.push_back(covering_word(d, cod.size(), d.between(lo, 6), f, l));
  return Morphism(dom, cod, std::move(imgs));
}

Morphism any_morphism(Draw& d, const Alphabet& dom, const Alphabet& cod) {
  std::vector<Word> imgs;
  for (std::size_t a = 0; a < dom.size(); ++a) {
    Word w(d.between(1, 6));
    for (auto& c : w) c = static_cast<Letter>(d.below(cod.size()));
    imgs.push_back(std::move(w));
  }
  return Morphism(dom, cod, std::move(imgs));
}

}  // namespace

std::vector<BoundInstance> bound_instances(std::size_t count, std::uint64_t seed) {
  Draw d{std::mt19937_64(seed)};
  std::vector<BoundInstance> out;
  for (std::size_t i = 0; i < count; ++i) {
    Alphabet A = Alphabet::numbered(d.between(2, 4)), B = Alphabet::numbered(d.between(2, 4)),
             C = Alphabet::numbered(d.between(2, 4)), D = Alphabet::numbered(d.between(2, 4));
    Morphism tau = positive(d, A, B, false);
    Morphism sigma = positive(d, B, C, false);
    Morphism phi = any_morphism(d, C, D);
    out.push_back({std::move(tau), std::move(sigma), std::move(phi)});
  }
  return out;
}

std::vector<DirectiveSequence> proper_sequences(std::size_t count, std::size_t levels, std::uint64_t seed) {
  Draw d{std::mt19937_64(seed ^ 0x9e3779b97f4a7c15ULL)};
  std::vector<DirectiveSequence> out;
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<Alphabet> alph;
    for (std::size_t m = 0; m <= levels; ++m) alph.push_back(Alphabet::numbered(d.between(2, 4)));
    std::vector<Morphism> ms;
    for (std::size_t m = 0; m < levels; ++m) ms.push_back(positive(d, alph[m + 1], alph[m], true));
    out.push_back(DirectiveSequence::finite(std::move(ms)));
  }
  return out;
}

std::vector<Example> bundled_examples(const std::string& data_dir) {
  std::vector<Example> out;
  for (const char* name : {"fibonacci", "thue_morse", "rank2", "fibonacci_proper"})
    out.push_back({name, load_spec(data_dir + "/" + name + ".sadic")});
  return out;
}

}  // namespace sadic::corpus
