#include <doctest.h>

#include <random>

#include "sadic/asymptotics.hpp"
#include "support.hpp"

using namespace testing;

namespace {

// Brute force: the longest common prefix over all x in A{A,B}^k and y in B{A,B}^k.
std::size_t brute_split(const Word& A, const Word& B) {
  const std::size_t reach = A.size() + B.size() + std::max(A.size(), B.size());
  std::vector<Word> xs{A}, ys{B};
  for (bool grew = true; grew;) {
    grew = false;
    for (auto* v : {&xs, &ys}) {
      std::vector<Word> next;
      for (const Word& u : *v) {
        if (u.size() >= reach) {
          next.push_back(u);
          continue;
        }
        for (const Word* p : {&A, &B}) {
          Word e = u;
          e.insert(e.end(), p->begin(), p->end());
          next.push_back(std::move(e));
        }
        grew = true;
      }
      *v = std::move(next);
    }
  }
  std::size_t best = reach;
  for (const Word& x : xs)
    for (const Word& y : ys) {
      std::size_t i = 0;
      while (i < x.size() && i < y.size() && x[i] == y[i]) ++i;
      best = std::min(best, i);
    }
  return best;
}

}  // namespace

TEST_CASE("divergence words of the worked cases") {
  CHECK(divergence_word(w("0"), w("01")) == w("0"));
  CHECK(divergence_word(w("01"), w("10")).empty());
  Word u = divergence_word(w("01"), w("0110"));
  CHECK(u == w("01"));
  CHECK(u.size() < 6);
  CHECK(divergence_holds(w("01"), w("0110"), u));
  CHECK_FALSE(divergence_holds(w("01"), w("0110"), w("0")));
  CHECK_THROWS(divergence_word(w("01"), w("01")));
  // Powers of one word never split.
  CHECK_THROWS(divergence_word(w("01"), w("0101")));
}

TEST_CASE("divergence words on random pairs") {
  std::mt19937_64 rng(3);
  int checked = 0;
  while (checked < 150) {
    Word A(1 + rng() % 8), B(1 + rng() % 8);
    for (auto& c : A) c = static_cast<Letter>(rng() % 2);
    for (auto& c : B) c = static_cast<Letter>(rng() % 2);
    Word ab = A, ba = B;
    ab.insert(ab.end(), B.begin(), B.end());
    ba.insert(ba.end(), A.begin(), A.end());
    if (ab == ba) continue;
    ++checked;
    Word u = divergence_word(A, B);
    CHECK(u.size() < A.size() + B.size());
    CHECK(divergence_holds(A, B, u));
    if (A.size() + B.size() <= 10) CHECK(u.size() == brute_split(A, B));
  }
}

TEST_CASE("persistent right-special chains") {
  ChainReport f = right_special_chains(fib(), 40);
  CHECK(f.chains.size() == 1);
  CHECK(f.linking_ok);
  for (auto c : f.counts) CHECK(c == 1);

  ChainReport t = right_special_chains(thue(), 30);
  CHECK(t.chains.size() == 2);
  for (const auto& c : t.chains) {
    REQUIRE(c.nodes.size() == 30);
    for (std::size_t l = 1; l < c.nodes.size(); ++l) {
      const Word& a = c.nodes[l - 1];
      const Word& b = c.nodes[l];
      CHECK(std::equal(a.begin(), a.end(), b.end() - static_cast<std::ptrdiff_t>(a.size())));
      CHECK(c.branches[l].size() >= 2);
    }
  }

  ChainReport r = right_special_chains(r2(), 30);
  CHECK(r.chains.size() == 1);
  CHECK(r.linking_ok);
}

TEST_CASE("asymptotic report") {
  auto t = asymptotic_report(thue(), 20);
  CHECK(t.chains.chains.size() == 2);
  CHECK(t.two_letter_bound_ok == std::optional<bool>(true));
  REQUIRE(t.diverging.size() == 2);
  for (const auto& d : t.diverging) CHECK(d == std::vector<Letter>{0, 1});
  std::string text = format_asymptotic(t, thue().alphabet(0));
  CHECK(text.rfind("depth=20 chains=2\n", 0) == 0);

  auto f = asymptotic_report(fib(), 20);
  CHECK(f.chains.chains.size() == 1);
  CHECK(f.two_letter_bound_ok == std::optional<bool>(true));

  auto periodic = DirectiveSequence::periodic({morphism(2, 2, {"01", "01"})}, 0);
  CHECK_THROWS_AS(asymptotic_report(periodic, 10), PeriodicInput);
}
