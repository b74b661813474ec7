#include <doctest.h>

#include <set>

#include "sadic/language.hpp"
#include "sadic/suite/oracles.hpp"
#include "support.hpp"

using namespace testing;

namespace {

Word apply_twice(const Morphism& outer, const Morphism& inner, Letter a) {
  Word out;
  for (Letter c : inner.image(a))
    for (Letter d : outer.image(c)) out.push_back(d);
  return out;
}

}  // namespace

TEST_CASE("compose substitutes letter by letter") {
  Morphism phi = morphism(2, 2, {"01", "0"});
  Morphism phi2 = compose(phi, phi);
  CHECK(phi2.image(0) == w("010"));
  CHECK(phi2.image(1) == w("01"));
  CHECK(compose(Morphism::identity(phi.codomain()), phi) == phi);

  Morphism t = morphism(2, 2, {"011", "001"});
  CHECK(compose(t, t).image(0) == w("011001001"));
}

TEST_CASE("incidence of a composition is the matrix product, lengths sandwich") {
  for (const auto& c : corpus::bound_instances(60, 7)) {
    Morphism st = compose(c.sigma, c.tau);
    CHECK(st.incidence() == c.sigma.incidence() * c.tau.incidence());
    for (Letter a = 0; a < c.tau.domain().size(); ++a) CHECK(st.image(a) == apply_twice(c.sigma, c.tau, a));
    auto ms = morphism_metrics(c.sigma), mt = morphism_metrics(c.tau), m = morphism_metrics(st);
    CHECK(ms.min_len * mt.min_len <= m.min_len);
    CHECK(m.min_len <= m.norm);
    CHECK(m.norm <= ms.norm * mt.norm);
  }
}

TEST_CASE("metrics of Thue-Morse and of a rank-2 morphism") {
  auto m = morphism_metrics(morphism(2, 2, {"01", "10"}));
  CHECK(m.norm == 2);
  CHECK(m.min_len == 2);
  CHECK(m.r_comp == 4);
  REQUIRE(m.d_ratio);
  CHECK(*m.d_ratio == 1);

  Morphism t = morphism(2, 2, {"011", "0010001"});
  CHECK(t.runs(0) == 2);
  CHECK(t.runs(1) == 4);
  CHECK(morphism_metrics(t).r_comp == 6);
  CHECK(morphism_metrics(t).r_comp == oracle::block_count(t));
}

TEST_CASE("r-comp is at least |A||B| on positive morphisms") {
  for (const auto& c : corpus::bound_instances(80, 11)) {
    const Morphism& t = c.tau;
    BigInt lower = BigInt(t.domain().size()) * t.codomain().size();
    auto m = morphism_metrics(t);
    CHECK(m.r_comp == oracle::block_count(t));
    CHECK(m.r_comp >= lower);
    if (classify(t).left_to_right == Tri::True) CHECK(m.r_comp == lower);
  }
  // 0 -> 01, 1 -> 01 visits the codomain left to right.
  Morphism lr = morphism(2, 2, {"01", "01"});
  CHECK(classify(lr).left_to_right == Tri::True);
  CHECK(morphism_metrics(lr).r_comp == 4);
}

TEST_CASE("classify") {
  auto r = classify(r2().at(0));
  CHECK(r.proper);
  CHECK(r.positive);
  auto t = classify(morphism(2, 2, {"01", "10"}));
  CHECK_FALSE(t.proper);
  CHECK(t.positive);
  CHECK(classify(morphism(2, 3, {"01", "2"})).hat);
  CHECK_FALSE(classify(morphism(2, 2, {"01", "0"})).hat);
}

TEST_CASE("primitivity window") {
  CHECK(primitivity_window(fib(), 0, 8) == std::optional<std::size_t>(2));
  CHECK(primitivity_window(thue(), 0, 8) == std::optional<std::size_t>(1));
  Morphism id = Morphism::identity(Alphabet::numbered(2));
  auto s = DirectiveSequence::periodic({id}, 0);
  CHECK_FALSE(primitivity_window(s, 0, 50));
}

TEST_CASE("decompose_recognizable splits into a hat morphism and a coding") {
  Decomposition d = decompose_recognizable(morphism(2, 2, {"01", "10"}));
  CHECK(d.sigma.codomain().size() == 4);
  CHECK(classify(d.sigma).hat);
  CHECK(compose(d.psi, d.sigma) == morphism(2, 2, {"01", "10"}));
  CHECK(d.psi.image(d.sigma.image(1)[0]) == w("1"));
  CHECK(d.psi.image(d.sigma.image(1)[1]) == w("0"));

  const Morphism& t0 = r2().at(0);
  Decomposition r = decompose_recognizable(t0);
  CHECK(r.sigma.image(0).size() == 3);
  CHECK(r.sigma.image(1).size() == 3);
  CHECK(r.psi.domain().size() == 6);
  CHECK(compose(r.psi, r.sigma) == t0);

  for (const auto& c : corpus::bound_instances(40, 3)) {
    Decomposition x = decompose_recognizable(c.phi);
    CHECK(classify(x.sigma).hat);
    CHECK(compose(x.psi, x.sigma) == c.phi);
  }
}

TEST_CASE("telescoping") {
  auto t = telescope(fib(), {0, 2}, std::size_t{2});
  Morphism phi2 = compose(fib().at(0), fib().at(1));
  for (std::size_t i = 0; i < 4; ++i) CHECK(t.at(i) == phi2);

  auto same = telescope(thue(), {0, 1}, std::size_t{1});
  for (std::size_t i = 0; i < 4; ++i) CHECK(same.at(i) == thue().at(i));

  auto r = telescope(r2(), {0, 2}, std::size_t{2});
  CHECK(r.at(0) == compose(r2().at(0), r2().at(1)));
  auto a = compute_language(r, 0, 12).words(12);
  auto b = oracle::stream_language(r2(), 0, 12);
  CHECK(std::set<Word>(a.begin(), a.end()) == b);
}

TEST_CASE("rank-2 generator constants") {
  auto c = rank2_constants({2, 1}, 4);
  CHECK(c.a[0] == 2);
  CHECK(c.a[1] == 5);
  CHECK(c.A[0] == 3);
  CHECK(c.B[0] == 3);
  CHECK(c.A[1] == 54);
  CHECK(c.B[1] == 9);
  CHECK(c.C[1] == 4);
  CHECK(r2().at(0) == morphism(2, 2, {"011", "001"}));
  for (std::size_t n = 0; n < 4; ++n) {
    CHECK(classify(r2().at(n)).proper);
    CHECK(r2().at(n).length(1) == (c.a[n] + 1) * (c.a[n] + 2) / 2 - 3);
  }
  // a_{n+1} = floor((3n+4) A_n / B_n) + margin
  for (std::size_t n = 0; n + 1 < 4; ++n) CHECK(c.a[n + 1] == (3 * n + 4) * c.A[n] / c.B[n] + 1);
}
