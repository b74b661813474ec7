#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <sstream>

#include "sadic/rauzy.hpp"
#include "support.hpp"

using namespace testing;

namespace {

// Union-find over the complement: a forest has no undirected cycle, loops and
// parallel edges included.
bool brute_forest(const RauzyGraph& g, const std::vector<std::size_t>& vprime) {
  std::vector<bool> out(g.vertices.size(), false);
  for (auto v : vprime) out[v] = true;
  std::vector<std::size_t> root(g.vertices.size());
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](std::size_t x) {
    while (root[x] != x) x = root[x];
    return x;
  };
  for (const auto& e : g.edges) {
    if (out[e.source] || out[e.target]) continue;
    std::size_t a = find(e.source), b = find(e.target);
    if (a == b) return false;
    root[a] = b;
  }
  return true;
}

std::size_t count_lines(const std::string& s, const std::string& needle) {
  std::istringstream in(s);
  std::size_t n = 0;
  for (std::string l; std::getline(in, l);) n += l.find(needle) != std::string::npos;
  return n;
}

}  // namespace

TEST_CASE("Rauzy graphs of Fibonacci and Thue-Morse") {
  RauzyGraph g = build_rauzy(fib(), 0, 2);
  CHECK(g.vertices == strings_to_words({"00", "01", "10"}));
  REQUIRE(g.edges.size() == 4);
  std::vector<Word> labels;
  for (const auto& e : g.edges) labels.push_back(e.word);
  CHECK(labels == strings_to_words({"001", "010", "100", "101"}));
  CHECK(g.strongly_connected);
  CHECK(g.right_special() == std::vector<std::size_t>{2});

  RauzyGraph t = build_rauzy(thue(), 0, 2);
  CHECK(t.vertices.size() == 4);
  CHECK(t.edges.size() == 6);

  RauzyGraph one = build_rauzy(thue(), 0, 1);
  CHECK(one.vertices.size() <= 2);
  CHECK(one.edges.size() <= 4);
}

TEST_CASE("forest lemma on small cases") {
  RauzyGraph g = build_rauzy(fib(), 0, 2);
  ForestReport f = forest_and_border_paths(g, {2});
  CHECK(f.is_directed_forest);
  CHECK(f.border_paths.size() == 2);
  CHECK(f.bound_ok);

  ForestReport all = forest_and_border_paths(g, {0, 1, 2});
  CHECK(all.is_directed_forest);
  std::size_t inner = 0;
  for (const auto& p : all.border_paths) inner += p.size() == 2;
  CHECK(inner == all.border_paths.size());
  CHECK(all.border_paths.size() == g.edges.size());

  ForestReport none = forest_and_border_paths(g, {});
  CHECK_FALSE(none.is_directed_forest);
  CHECK_FALSE(none.witness_cycle.empty());
}

TEST_CASE("complement of the right specials is a forest within the border-path bound") {
  for (const auto* s : {&fib(), &thue(), &r2(), &fib_proper()}) {
    auto t = compute_language(*s, 0, 15);
    for (std::size_t n = 1; n <= 14; ++n) {
      RauzyGraph g = build_rauzy(t, n);
      auto rs = g.right_special();
      ForestReport f = forest_and_border_paths(g, rs);
      CHECK(f.is_directed_forest == brute_forest(g, rs));
      CHECK(f.is_directed_forest);
      CHECK(f.bound == rs.size() * rs.size() * g.max_out_degree() * g.max_in_degree());
      CHECK(f.border_paths.size() <= f.bound);
      for (const auto& p : f.border_paths) {
        CHECK(std::binary_search(rs.begin(), rs.end(), p.front()));
        CHECK(std::binary_search(rs.begin(), rs.end(), p.back()));
      }
    }
  }
}

TEST_CASE("deconnectability witnesses") {
  RauzyGraph g = build_rauzy(fib(), 0, 2);
  auto w = deconnectability_witness(g, 1, 2);
  REQUIRE(w.status == WitnessStatus::Found);
  CHECK(w.vprime == std::vector<std::size_t>{2});
  CHECK(w.complexity_inequality_ok);

  auto all = deconnectability_witness(g, g.vertices.size(), 1);
  CHECK(all.status == WitnessStatus::Found);
  CHECK(all.complexity_inequality_ok);

  DeconnectabilityOptions weak;
  weak.strong = false;
  CHECK(deconnectability_witness(g, 1, 2, weak).status == WitnessStatus::Found);

  // Right specials of the rank-2 example outgrow a fixed K.
  auto late = deconnectability_witness(r2(), 200, 1, 1);
  CHECK(late.status != WitnessStatus::Found);
}

TEST_CASE("Rauzy DOT output") {
  std::string dot = rauzy_dot(build_rauzy(fib(), 0, 2), {2});
  CHECK(dot.rfind("digraph rauzy_2 {", 0) == 0);
  CHECK(count_lines(dot, "->") == 4);
  CHECK(count_lines(dot, ";") - count_lines(dot, "->") == 3);
  CHECK(count_lines(dot, "shape=box") == 1);
}
