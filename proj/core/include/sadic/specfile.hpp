#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sadic/sequence.hpp"

namespace sadic {

// Line-oriented description of a directive sequence:
//
//   sadic v1
//   letters A = 0 1
//   morphism phi : A -> A
//     0 = 0 1
//     1 = 0
//   tail periodic from 0
//
// Morphisms are listed tau_0, tau_1, ...; a generator line replaces the tail.
struct SpecFile {
  struct Letters {
    std::string name;
    std::vector<std::string> symbols;
    bool operator==(const Letters&) const = default;
  };
  struct MorphismBlock {
    std::string name, domain, codomain;
    std::vector<std::pair<std::string, std::vector<std::string>>> images;  // in domain order
    bool operator==(const MorphismBlock&) const = default;
  };
  enum class Tail { None, Periodic, Generator };

  std::vector<Letters> alphabets;
  std::vector<MorphismBlock> morphisms;
  Tail tail = Tail::None;
  std::size_t periodic_from = 0;
  std::string generator;
  std::vector<std::pair<std::string, std::string>> params;

  bool operator==(const SpecFile&) const = default;
};

class SpecError : public Error {
 public:
  SpecError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line, column;
};

SpecFile parse_spec_file(std::string_view text);
std::string serialize_spec(const SpecFile& spec);
DirectiveSequence build_sequence(const SpecFile& spec);
DirectiveSequence parse_spec(std::string_view text);
DirectiveSequence load_spec(const std::string& path);

}  // namespace sadic
