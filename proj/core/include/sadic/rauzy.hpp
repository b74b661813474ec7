#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sadic/language.hpp"

namespace sadic {

struct RauzyEdge {
  Word word;  // length n + 1
  std::size_t source = 0, target = 0;
};

// G_n: vertices L_n (sorted), one edge per word of L_{n+1} from its prefix to its suffix.
struct RauzyGraph {
  std::size_t n = 0;
  Alphabet alphabet;
  std::vector<Word> vertices;
  std::vector<RauzyEdge> edges;
  std::vector<std::vector<std::size_t>> out, in;  // edge indices per vertex
  bool strongly_connected = false;

  std::optional<std::size_t> find(WordView w) const;
  std::size_t out_degree(std::size_t v) const { return out[v].size(); }
  std::size_t in_degree(std::size_t v) const { return in[v].size(); }
  std::size_t max_out_degree() const;
  std::size_t max_in_degree() const;
  std::vector<std::size_t> right_special() const;
};

RauzyGraph build_rauzy(const LanguageTable& table, std::size_t n);
RauzyGraph build_rauzy(const DirectiveSequence& seq, std::size_t level, std::size_t n);

struct ForestReport {
  bool is_directed_forest = false;
  std::vector<std::size_t> witness_cycle;              // vertices, when not a forest
  std::vector<std::vector<std::size_t>> border_paths;  // vertex sequences, both ends in V'
  std::size_t bound = 0;                               // |V'|^2 * maxd+ * maxd-
  bool bound_ok = false;
};

// Lemma check on G[V \ V'] plus the paths from V' back to V' through the complement.
ForestReport forest_and_border_paths(const RauzyGraph& g, const std::vector<std::size_t>& vprime);

enum class WitnessStatus { Found, NotFound, SearchCapped };
const char* to_string(WitnessStatus s);

struct DeconnectabilityOptions {
  bool strong = true;
  std::size_t exhaustive_cap = 20;  // subset search only when p(n) <= cap
};

struct DeconnectabilityWitness {
  WitnessStatus status = WitnessStatus::NotFound;
  std::vector<std::size_t> vprime;
  std::size_t longest_path = 0;  // in edges, inside the complement
  bool forest = false;
  // p(n) <= K + (2K|A| - 1) K' n, checked whenever a witness is returned.
  bool complexity_inequality_ok = false;
};

DeconnectabilityWitness deconnectability_witness(const RauzyGraph& g, std::size_t K, std::size_t Kprime,
                                                 DeconnectabilityOptions opts = {});
DeconnectabilityWitness deconnectability_witness(const DirectiveSequence& seq, std::size_t n, std::size_t K,
                                                 std::size_t Kprime, DeconnectabilityOptions opts = {});

std::string rauzy_dot(const RauzyGraph& g, const std::vector<std::size_t>& vprime = {});

}  // namespace sadic
