#include <doctest.h>

#include <random>
#include <set>

#include "sadic/factorize.hpp"
#include "sadic/suite/oracles.hpp"
#include "support.hpp"

using namespace testing;

namespace {

// Words between consecutive occurrences of W in a long prefix.
std::set<Word> scan_returns(const Word& text, const std::vector<Word>& W) {
  std::vector<std::size_t> occ;
  for (std::size_t i = 0; i + W[0].size() <= text.size(); ++i)
    for (const Word& m : W)
      if (std::equal(m.begin(), m.end(), text.begin() + static_cast<std::ptrdiff_t>(i))) {
        occ.push_back(i);
        break;
      }
  std::set<Word> out;
  for (std::size_t k = 0; k + 1 < occ.size(); ++k)
    out.emplace(text.begin() + static_cast<std::ptrdiff_t>(occ[k]), text.begin() + static_cast<std::ptrdiff_t>(occ[k + 1]));
  return out;
}

Word iterate(const Morphism& m, Word x, int times) {
  for (int i = 0; i < times; ++i) x = m.apply(x);
  return x;
}

// tau_0 = sigma (a hat morphism from splitting mu), then mu forever.
DirectiveSequence hat_over_tm() {
  Decomposition d = decompose_recognizable(thue().at(0));
  return DirectiveSequence::generated({d.psi, d.sigma}, GeneratorSpec{"tm", {}},
                                      [](std::size_t, const DirectiveSequence&) { return thue().at(0); });
}

}  // namespace

TEST_CASE("window factorizations match the counting oracle") {
  WordSet W = WordSet::make(strings_to_words({"0", "01"}));
  auto r = enumerate_window_factorizations(w("010010"), W);
  CHECK(r.total == oracle::count_factorizations(w("010010"), W.members));
  CHECK(r.factorizations.size() == r.total);
  CHECK(r.disjoint_phase_count <= 2);
  for (const auto& f : r.factorizations) CHECK(f.cuts.front() < 6);

  WordSet one = WordSet::make({w("0110")});
  auto s = enumerate_window_factorizations(w("0110"), one);
  std::size_t borderless = 0;
  for (const auto& f : s.factorizations) borderless += !f.border_head && !f.border_tail && f.phase() == 0;
  CHECK(borderless == 1);

  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    std::vector<Word> ws(1 + rng() % 3);
    for (auto& m : ws) {
      m.resize(1 + rng() % 4);
      for (auto& c : m) c = static_cast<Letter>(rng() % 2);
    }
    WordSet set = WordSet::make(ws);
    Word win(1 + rng() % 14);
    for (auto& c : win) c = static_cast<Letter>(rng() % 2);
    auto rep = enumerate_window_factorizations(win, set);
    REQUIRE_FALSE(rep.truncated);
    CHECK(rep.total == oracle::count_factorizations(win, set.members));
  }
}

TEST_CASE("disjoint factorizations of Fibonacci windows") {
  Morphism phi3 = fib().compose_range(0, 3);
  WordSet W = WordSet::make(phi3.images());
  auto t = compute_language(fib(), 0, 200);
  for (std::size_t len : {10, 50, 100, 200})
    for (const Word& win : t.words(len)) {
      auto r = enumerate_window_factorizations(win, W);
      CHECK(r.disjoint_phase_count <= 2);
      CHECK(r.disjoint_exact);
    }
}

TEST_CASE("recognizability radii") {
  auto tmr = recognizability_radius(thue(), 0);
  REQUIRE(tmr.status == RecogStatus::Certified);
  CHECK(tmr.radius <= 16);
  // Certified at R stays unambiguous above R.
  for (std::size_t extra : {1, 2}) CHECK(Recognizer(thue(), 0, tmr.radius + extra).unambiguous());

  auto hat = recognizability_radius(hat_over_tm(), 1);
  CHECK(hat.status == RecogStatus::Certified);
  CHECK(hat.radius == 1);

  auto fr = recognizability_radius(fib(), 0);
  CHECK(fr.status == RecogStatus::Certified);

  // Composition: tau_0 tau_1 is recognizable with radius at most R_0 + ||tau_0|| (R_1 + 1).
  auto r0 = recognizability_radius(r2(), 0), r1 = recognizability_radius(r2(), 1);
  REQUIRE(r0.status == RecogStatus::Certified);
  REQUIRE(r1.status == RecogStatus::Certified);
  auto tele = telescope(r2(), {0, 2}, std::size_t{1});
  std::size_t bound = r0.radius + static_cast<std::size_t>(morphism_metrics(r2().at(0)).norm) * (r1.radius + 1);
  auto rc = recognizability_radius(tele, 0, {bound, {}});
  CHECK(rc.status == RecogStatus::Certified);
  CHECK(rc.radius <= bound);
}

TEST_CASE("periodic inputs give a counterexample") {
  auto s = DirectiveSequence::periodic({morphism(1, 1, {"00"})}, 0);
  auto r = recognizability_radius(s, 0, {8, {}});
  CHECK(r.status == RecogStatus::Counterexample);
  REQUIRE(r.witness);
  CHECK(r.witness->first.k != r.witness->second.k);
}

TEST_CASE("centered representations reproduce the window") {
  auto R = recognizability_radius(thue(), 0).radius;
  Recognizer rec(thue(), 0, R);
  const Morphism& mu = thue().at(0);
  auto t = compute_language(thue(), 0, 2 * R);
  for (const Word& win : t.words(2 * R)) {
    CenteredRepresentation c = centered_representation(win, rec);
    CHECK(mu.image(c.y0).at(c.k) == win[R]);
    Word img = mu.apply(c.y_window);
    std::size_t n = std::min(img.size() - c.k_first, win.size() - c.anchor);
    CHECK(std::equal(img.begin() + static_cast<std::ptrdiff_t>(c.k_first), img.begin() + static_cast<std::ptrdiff_t>(c.k_first + n),
                     win.begin() + static_cast<std::ptrdiff_t>(c.anchor)));
  }

  DirectiveSequence h = hat_over_tm();
  Recognizer hr(h, 1, 1);
  const Morphism& sigma = h.at(1);
  CenteredRepresentation c = centered_representation(sigma.image(0), hr);
  CHECK(c.y0 == 0);
  CHECK(sigma.image(0).at(c.k) == sigma.image(0)[1]);
}

TEST_CASE("return words") {
  ReturnWords f = return_words(fib(), 0, WordSet::make({w("0")}));
  CHECK(f.returns.members == strings_to_words({"0", "01"}));
  CHECK(f.stabilized);
  CHECK(std::set<Word>(f.returns.members.begin(), f.returns.members.end()) ==
        scan_returns(iterate(fib().at(0), w("0"), 14), {w("0")}));

  ReturnWords t = return_words(thue(), 0, WordSet::make({w("01")}));
  std::set<Word> ref = scan_returns(iterate(thue().at(0), w("0"), 10), {w("01")});
  CHECK(std::set<Word>(t.returns.members.begin(), t.returns.members.end()) == ref);
  CHECK(t.returns.members == strings_to_words({"01", "010", "011", "0110"}));

  // Each return word starts with a member and meets no other occurrence inside.
  for (const Word& u : t.returns.members) {
    Word uw = u;
    uw.insert(uw.end(), {0, 1});
    auto occ = occurrences(uw, t.W);
    CHECK(occ == std::vector<std::size_t>{0, u.size()});
  }

  ReturnWords both = return_words(thue(), 0, WordSet::make({w("0"), w("1")}));
  CHECK(both.returns.members == strings_to_words({"0", "1"}));
}

TEST_CASE("derived windows") {
  ReturnWords f = return_words(fib(), 0, WordSet::make({w("0")}));
  CHECK(derive_window(w("00100101"), f) == w("0101"));  // letters 1, 2, 1, 2
  CHECK(f.coding.apply(w("0101")) == w("001001"));
  CHECK(derive_window(w("010"), f).size() == 1);

  std::mt19937_64 rng(corpus::kSeed);
  auto windows = compute_language(fib(), 0, 40).words(40);
  for (int i = 0; i < 50; ++i) {
    const Word& win = windows[rng() % windows.size()];
    auto occ = occurrences(win, f.W);
    Word back = f.coding.apply(derive_window(win, f));
    CHECK(back == Word(win.begin() + static_cast<std::ptrdiff_t>(occ.front()), win.begin() + static_cast<std::ptrdiff_t>(occ.back())));
  }
}
