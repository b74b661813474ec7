#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sadic/specfile.hpp"
#include "sadic/suite/corpus.hpp"

namespace testing {

using namespace sadic;

// Glued digits over the numbered alphabet {0..k-1}.
inline Word w(std::string_view s) {
  Word out;
  for (char c : s) out.push_back(static_cast<Letter>(c - '0'));
  return out;
}

// morphism(2, 2, {"01", "0"}): domain and codomain sizes, then one image per letter.
inline Morphism morphism(std::size_t dom, std::size_t cod, const std::vector<std::string>& images) {
  std::vector<Word> imgs;
  for (const auto& s : images) imgs.push_back(w(s));
  return Morphism(Alphabet::numbered(dom), Alphabet::numbered(cod), std::move(imgs));
}

inline std::string data_path(const std::string& name) { return std::string(SADIC_DATA_DIR) + "/" + name + ".sadic"; }

inline const DirectiveSequence& fib() {
  static const DirectiveSequence s = load_spec(data_path("fibonacci"));
  return s;
}
inline const DirectiveSequence& thue() {
  static const DirectiveSequence s = load_spec(data_path("thue_morse"));
  return s;
}
inline const DirectiveSequence& r2() {
  static const DirectiveSequence s = load_spec(data_path("rank2"));
  return s;
}
inline const DirectiveSequence& fib_proper() {
  static const DirectiveSequence s = load_spec(data_path("fibonacci_proper"));
  return s;
}

inline std::vector<Word> strings_to_words(const std::vector<std::string>& v) {
  std::vector<Word> out;
  for (const auto& s : v) out.push_back(w(s));
  return out;
}

}  // namespace testing
