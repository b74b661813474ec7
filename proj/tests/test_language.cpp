#include <doctest.h>

#include <set>

#include "sadic/language.hpp"
#include "sadic/suite/oracles.hpp"
#include "support.hpp"

using namespace testing;

namespace {

std::set<Word> as_set(const std::vector<Word>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("small languages") {
  auto f = compute_language(fib(), 0, 4);
  CHECK(as_set(f.words(4)) == as_set(strings_to_words({"0010", "0100", "0101", "1001", "1010"})));
  CHECK(f.words(1) == strings_to_words({"0", "1"}));
  CHECK(f.certification().status == CertStatus::Certified);
  auto t = compute_language(thue(), 0, 3);
  CHECK(t.words(3) == strings_to_words({"001", "010", "011", "100", "101", "110"}));
}

TEST_CASE("language equals the streamed factors of long images") {
  for (const auto* s : {&fib(), &thue(), &r2(), &fib_proper()}) {
    for (std::size_t level : {0, 1}) {
      auto t = compute_language(*s, level, 12);
      auto ref = oracle::shorter_factors(oracle::stream_language(*s, level, 12), 12);
      for (std::size_t l = 1; l <= 12; ++l) CHECK(as_set(t.words(l)) == ref[l]);
    }
  }
}

TEST_CASE("rank-2 complexity against the streamed oracle") {
  auto t = compute_language(r2(), 0, 23);
  auto p = t.counts();
  for (std::size_t l : {13, 20, 21, 22, 23}) CHECK(p[l] == oracle::stream_language(r2(), 0, l).size());
  // Frozen from the oracle: p(n+1) - p(n) falls from 6 to 5 at n = 21.
  CHECK(p[20] == 75);
  CHECK(p[21] == 81);
  CHECK(p[22] == 86);
}

TEST_CASE("factor closure, extendability and the right-special identity") {
  for (const auto* s : {&fib(), &thue(), &r2(), &fib_proper()}) {
    auto t = compute_language(*s, 0, 16);
    for (std::size_t l = 2; l <= 16; ++l)
      for (const Word& u : t.words(l)) {
        CHECK(t.contains(WordView(u).first(l - 1)));
        CHECK(t.contains(WordView(u).last(l - 1)));
      }
    for (std::size_t l = 1; l < 16; ++l) {
      std::uint64_t surplus = 0;
      for (const Word& u : t.words(l)) {
        CHECK_FALSE(t.right_extensions(u).empty());
        CHECK_FALSE(t.left_extensions(u).empty());
      }
      for (const auto& sw : t.special(l, Side::Right)) surplus += sw.extensions.size() - 1;
      CHECK(surplus == t.count(l + 1) - t.count(l));
    }
  }
}

TEST_CASE("Fibonacci has one right-special word per length") {
  auto t = compute_language(fib(), 0, 41);
  auto rs = special_words(t, 2, Side::Right);
  REQUIRE(rs.size() == 1);
  CHECK(rs[0].word == w("10"));
  CHECK(rs[0].extensions == std::vector<Letter>{0, 1});
  for (std::size_t l = 1; l <= 40; ++l) CHECK(t.right_special_count(l) == 1);
}

TEST_CASE("complexity table and CSV") {
  auto rows = complexity_table(fib(), 0, 60);
  REQUIRE(rows.size() == 60);
  for (const auto& r : rows) {
    CHECK(r.p == r.n + 1);
    CHECK(r.delta == 1);
  }
  auto tmr = complexity_table(thue(), 0, 5);
  std::vector<std::uint64_t> got;
  for (const auto& r : tmr) got.push_back(r.p);
  CHECK(got == std::vector<std::uint64_t>{2, 4, 6, 10, 12});
  CHECK(complexity_csv(complexity_table(fib(), 0, 2)) == "n,p,delta\n1,2,1\n2,3,1\n");
}

TEST_CASE("the two-block ladder shrinks as the seed moves up") {
  auto lad = TwoBlockLadder::build(r2(), 0, 6);
  for (std::size_t m = 0; m < 6; ++m) {
    auto down = propagate_pairs(r2().at(m), lad.at(m + 1));
    CHECK(down == lad.at(m));
  }
  auto a = TwoBlockLadder::build(thue(), 0, 4).at(0), b = TwoBlockLadder::build(thue(), 0, 8).at(0);
  for (Letter x = 0; x < 2; ++x)
    for (Letter y = 0; y < 2; ++y)
      if (b.contains(x, y)) CHECK(a.contains(x, y));
}

TEST_CASE("non-primitive input is flagged") {
  auto s = DirectiveSequence::periodic({morphism(2, 2, {"00", "11"})}, 0);
  auto t = compute_language(s, 0, 3);
  CHECK_FALSE(t.primitive());
  CHECK(t.certification().status == CertStatus::Heuristic);
  // Still an over-approximation: nothing that occurs is missed.
  CHECK(t.contains(w("000")));
  CHECK(t.contains(w("111")));
  CHECK(compute_language(fib(), 0, 3).primitive());
}
