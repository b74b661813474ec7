#include <doctest.h>

#include <set>
#include <sstream>

#include "sadic/bratteli.hpp"
#include "support.hpp"

using namespace testing;

namespace {

std::size_t count_lines(const std::string& s, const std::string& needle) {
  std::istringstream in(s);
  std::size_t n = 0;
  for (std::string l; std::getline(in, l);) n += l.find(needle) != std::string::npos;
  return n;
}

// All paths from the root to a top vertex of a finite diagram, by position lists.
std::vector<PathPrefix> all_paths(const OrderedBratteliDiagram& B) {
  std::vector<PathPrefix> out;
  for (Letter top = 0; top < B.vertices.back().size(); ++top) {
    std::optional<PathPrefix> p = min_path(B, top);
    while (p) {
      out.push_back(*p);
      p = successor(B, *p);
    }
  }
  return out;
}

std::size_t depth_for(const DirectiveSequence& s, std::size_t steps) {
  std::size_t d = 1;
  while (s.min_len_range(0, d) <= steps + 1) ++d;
  return d;
}

}  // namespace

TEST_CASE("diagram shape follows the images") {
  auto B = diagram_from_sequence(r2(), 3);
  CHECK(B.depth() == 3);
  for (std::size_t m = 1; m <= 3; ++m) {
    CHECK(B.vertices[m].size() == 2);
    for (Letter v = 0; v < 2; ++v) CHECK(B.fibers[m][v].size() == r2().at(m - 1).length(v));
  }
  CHECK(B.fibers[2][0].size() == 3);

  // Letter-to-letter proper morphisms give single-edge fibers.
  Morphism one = morphism(1, 1, {"0"});
  auto s = DirectiveSequence::finite({morphism(1, 1, {"0"}), one, one});
  auto L = diagram_from_sequence(s, 3);
  for (std::size_t m = 1; m <= 3; ++m) CHECK(L.edge_count(m) == 1);
  for (std::size_t i = 0; i < 3; ++i) CHECK(read_morphisms(L).at(i) == s.at(i));
}

TEST_CASE("reading morphisms off a diagram gives the input back") {
  for (const auto* s : {&r2(), &fib_proper()}) {
    auto B = diagram_from_sequence(*s, 4);
    auto back = read_morphisms(B);
    REQUIRE(back.finite_length() == 4);
    for (std::size_t i = 0; i < 4; ++i) CHECK(back.at(i) == s->at(i));
  }
  // Thue-Morse is not proper past the first level.
  CHECK_THROWS_AS(diagram_from_sequence(thue(), 2), NotProper);
}

TEST_CASE("telescoping commutes with composition") {
  auto B = diagram_from_sequence(fib_proper(), 5);
  for (const std::vector<std::size_t>& cuts : {std::vector<std::size_t>{0, 2, 5}, {0, 1, 3, 4}, {0, 5}}) {
    auto T = read_morphisms(telescope_diagram(B, cuts));
    auto W = telescope(read_morphisms(B), cuts);
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) CHECK(T.at(k) == W.at(k));
  }
  CHECK_THROWS(telescope_diagram(B, {1, 2}));
  CHECK_THROWS(telescope_diagram(B, {0, 6}));
}

TEST_CASE("successor is a bijection onto non-minimal paths") {
  auto B = diagram_from_sequence(fib_proper(), 3);
  auto paths = all_paths(B);
  std::size_t maximal = 0;
  for (const auto& p : paths) {
    auto q = successor(B, p);
    if (!q) {
      ++maximal;
      continue;
    }
    auto back = predecessor(B, *q);
    REQUIRE(back);
    CHECK(back->positions == p.positions);
    CHECK(back->top == p.top);
  }
  CHECK(maximal == B.vertices.back().size());
  std::size_t total = 0;
  for (Letter v = 0; v < B.vertices.back().size(); ++v) total += static_cast<std::size_t>(fib_proper().compose_range(0, 3).length(v));
  CHECK(paths.size() == total);
}

TEST_CASE("odometer cell") {
  auto s = DirectiveSequence::finite({morphism(1, 1, {"0000"})});
  auto B = diagram_from_sequence(s, 1);
  Word code = vershik_orbit_coding(B, 1, min_path(B, 0), 3, OrbitCoding::Raw);
  CHECK(code == w("0000"));
  try {
    vershik_orbit_coding(B, 1, min_path(B, 0), 10, OrbitCoding::Raw);
    FAIL("expected the maximal path");
  } catch (const MaxPathReached& e) {
    CHECK(e.completed_steps == 3);
    CHECK(e.partial.size() == 4);
  }
}

TEST_CASE("orbit codings are words of the language") {
  for (const auto* s : {&r2(), &fib_proper()}) {
    auto B = diagram_from_sequence(*s, depth_for(*s, 500));
    for (std::size_t level : {0, 1, 2}) {
      Word code = vershik_orbit_coding(B, level, min_path(B, 0), 500);
      auto t = compute_language(*s, level, 8);
      for (std::size_t l = 1; l <= 8; ++l)
        for (std::size_t i = 0; i + l <= code.size(); ++i) CHECK(t.contains(WordView(code).subspan(i, l)));
    }
  }
  // Level 0 reads one letter per step and starts with the image of the first letter.
  auto B = diagram_from_sequence(fib_proper(), 6);
  Word w0 = vershik_orbit_coding(B, 0, min_path(B, 0), 99);
  Word img = fib_proper().compose_range(0, 6).image(0);
  CHECK(w0 == Word(img.begin(), img.begin() + 100));
}

TEST_CASE("DOT and text forms") {
  auto B = diagram_from_sequence(r2(), 2);
  std::string dot = diagram_dot(B);
  CHECK(dot.rfind("digraph bratteli {", 0) == 0);
  CHECK(count_lines(dot, "[label=\"") - count_lines(dot, "->") == 1 + 2 + 2);
  CHECK(count_lines(dot, "ord=0") == 2 + 2);
  CHECK(count_lines(dot, "->") == B.edge_count(1) + B.edge_count(2));

  auto E = diagram_from_sequence(r2(), 0);
  CHECK(diagram_dot(E) == "digraph bratteli {\n}\n");

  for (std::size_t d : {0, 1, 3}) {
    auto D = diagram_from_sequence(fib_proper(), d);
    CHECK(parse_diagram_text(diagram_text(D)) == D);
  }
  auto R = diagram_from_sequence(r2(), 3);
  CHECK(parse_diagram_text(diagram_text(R)) == R);
  CHECK_THROWS(parse_diagram_text("bratteli v1\nlevel 2 = a\n"));
}

TEST_CASE("tower partitions") {
  auto t = verify_tower_partition(TowerPartitionSpec::from_images(thue(), 3), thue(), 200);
  CHECK(t.ok);
  CHECK(t.ambiguous == 0);
  CHECK(t.uncovered == 0);
  CHECK(t.windows > 0);

  for (std::size_t cut : {1, 2}) {
    auto r = verify_tower_partition(TowerPartitionSpec::from_images(r2(), cut), r2(), 200);
    CHECK(r.ok);
  }

  auto periodic = DirectiveSequence::periodic({morphism(1, 1, {"00"})}, 0);
  CHECK_THROWS_AS(verify_tower_partition(TowerPartitionSpec::from_images(periodic, 1), periodic, 200), NotRecognizable);

  // A split outside the word is refused.
  auto bad = TowerPartitionSpec::from_images(thue(), 1);
  bad.split[0] = 5;
  CHECK_THROWS(verify_tower_partition(bad, thue(), 200));
}
