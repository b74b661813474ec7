#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sadic/sequence.hpp"

namespace sadic::corpus {

inline constexpr std::uint64_t kSeed = 20240917;

// tau: A -> B and sigma: B -> C positive; phi: C -> D non-erasing.
struct BoundInstance {
  Morphism tau, sigma, phi;
};
// Alphabets of 2..4 letters, images of length at most 6.
std::vector<BoundInstance> bound_instances(std::size_t count, std::uint64_t seed = kSeed);

// Finite sequences of `levels` positive proper morphisms with the same size limits.
std::vector<DirectiveSequence> proper_sequences(std::size_t count, std::size_t levels, std::uint64_t seed = kSeed);

struct Example {
  std::string name;
  DirectiveSequence seq;
};
// The spec files shipped in data/.
std::vector<Example> bundled_examples(const std::string& data_dir);

}  // namespace sadic::corpus
