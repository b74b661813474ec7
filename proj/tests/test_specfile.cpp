#include <doctest.h>

#include <fstream>
#include <sstream>

#include "sadic/specfile.hpp"
#include "support.hpp"

using namespace testing;

namespace {

std::string error_of(std::string_view text) {
  try {
    parse_spec(text);
  } catch (const SpecError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("the Fibonacci file") {
  const char* text =
      "sadic v1\n"
      "# golden mean\n"
      "letters A = 0 1\n"
      "morphism phi : A -> A\n"
      "  0 = 0 1\n"
      "  1 = 0\n"
      "tail periodic from 0\n";
  DirectiveSequence s = parse_spec(text);
  CHECK(s.kind() == DirectiveSequence::Kind::Periodic);
  CHECK(s.at(0) == morphism(2, 2, {"01", "0"}));
  CHECK(s.at(7) == s.at(0));
  CHECK(s.alphabet(0).size() == 2);
}

TEST_CASE("generator line") {
  DirectiveSequence s = parse_spec("sadic v1\ngenerator rank2_superlinear a0=2 margin=1\n");
  CHECK(s.kind() == DirectiveSequence::Kind::Generated);
  CHECK(s.at(0) == morphism(2, 2, {"011", "001"}));
  CHECK(s.at(1) == r2().at(1));
  CHECK(s.at(1).length(1) == 6 * 7 / 2 - 3);
}

TEST_CASE("parse errors carry a location") {
  CHECK(error_of("sadic v1\nletters A = 0 1\nmorphism t : A -> A\n  0 = 0 1\n  1 = \n").find("line 5") == 0);
  CHECK(error_of("sadic v1\nletters A = 0 1\nmorphism t : A -> A\n  0 = 0 1\n  1 = \n").find("erasing") != std::string::npos);
  CHECK(error_of("sadic v1\nletters A = 0 1\nmorphism t : A -> A\n  0 = 0 2\n  1 = 0\n").find("unknown letter") !=
        std::string::npos);
  CHECK(error_of("sadic v1\nletters A = 0 1\nletters B = x y\nmorphism s : A -> A\n  0 = 0 1\n  1 = 0\n"
                 "morphism t : A -> B\n  0 = x\n  1 = y\n")
            .find("chain") != std::string::npos);
  CHECK(error_of("sadic v1\ngenerator nonsense k=1\n").find("unknown generator") != std::string::npos);
  CHECK(error_of("sadic v1\nletters A = 0 1\nmorphism t : A -> A\n  0 = 0 1\n").find("no image for letter") != std::string::npos);
  CHECK_FALSE(error_of("sadic v2\n").empty());
}

TEST_CASE("serialize then parse is the identity") {
  for (const char* name : {"fibonacci", "thue_morse", "rank2", "fibonacci_proper"}) {
    std::ifstream in(data_path(name));
    std::stringstream ss;
    ss << in.rdbuf();
    SpecFile f = parse_spec_file(ss.str());
    CHECK(parse_spec_file(serialize_spec(f)) == f);
  }
  SpecFile g;
  g.alphabets = {{"A", {"a", "b", "c"}}, {"B", {"x", "y"}}};
  g.morphisms = {{"s", "B", "A", {{"x", {"a", "b"}}, {"y", {"c"}}}}, {"t", "B", "B", {{"x", {"x", "y"}}, {"y", {"x"}}}}};
  g.tail = SpecFile::Tail::Periodic;
  g.periodic_from = 1;
  CHECK(parse_spec_file(serialize_spec(g)) == g);
  DirectiveSequence s = build_sequence(g);
  CHECK(s.at(3) == s.at(1));
  CHECK(s.at(0).image(1) == Word{2});
}
