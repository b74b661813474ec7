#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sadic/factorize.hpp"

namespace sadic {

struct BratteliEdge {
  Letter source = 0;  // vertex of the level below; for level 1, the root (0)
  Letter label = 0;   // level-1 edges only: letter of the edge alphabet
  bool operator==(const BratteliEdge&) const = default;
};

// Levels V_0 = {v0}, V_1, ..., V_D. fibers[m][v] lists the edges with range v in V_m,
// in their local order (m >= 1; fibers[0] is empty).
struct OrderedBratteliDiagram {
  std::vector<Alphabet> vertices;
  std::vector<std::vector<std::vector<BratteliEdge>>> fibers;
  Alphabet edge_alphabet;  // labels of level-1 edges
  Morphism level0_coding;  // letter-to-letter, edge alphabet -> A_0

  std::size_t depth() const { return vertices.empty() ? 0 : vertices.size() - 1; }
  std::size_t edge_count(std::size_t m) const;
  bool operator==(const OrderedBratteliDiagram&) const = default;
};

class NotProper : public Error {
 public:
  using Error::Error;
};

// Uses tau_0 .. tau_{D-1}. A tau_0 that is not a hat-morphism is split as psi o sigma
// with sigma a hat; the level-1 edges then carry the letters of sigma and psi is kept
// as level0_coding.
OrderedBratteliDiagram diagram_from_sequence(const DirectiveSequence& seq, std::size_t depth);
DirectiveSequence read_morphisms(const OrderedBratteliDiagram& B);
// cuts strictly increasing from 0, each at most the depth.
OrderedBratteliDiagram telescope_diagram(const OrderedBratteliDiagram& B, const std::vector<std::size_t>& cuts);

// A path from the root up to level `positions.size()`: positions[m-1] is the index of
// x_m in the fiber of its range, and x_m's range is the source of x_{m+1} (top given).
struct PathPrefix {
  Letter top = 0;
  std::vector<std::size_t> positions;
};

PathPrefix min_path(const OrderedBratteliDiagram& B, Letter top);
// Vertices r(x_0..x_m) of the path, index m = level.
std::vector<Letter> path_vertices(const OrderedBratteliDiagram& B, const PathPrefix& p);
// nullopt when every edge is maximal (resp. minimal) and no move exists at this depth.
std::optional<PathPrefix> successor(const OrderedBratteliDiagram& B, const PathPrefix& p);
std::optional<PathPrefix> predecessor(const OrderedBratteliDiagram& B, const PathPrefix& p);

class MaxPathReached : public Error {
 public:
  MaxPathReached(std::size_t steps, Word partial);
  std::size_t completed_steps;
  Word partial;
};

enum class OrbitCoding {
  TowerEntries,  // r(x_n) each time x_1..x_n are minimal: a word of L^{(n)}
  Raw,           // r(x_n) after every step: each letter repeated along its tower
};

// Level 0 always gives the edge labels of x_1 read through level0_coding, one per step.
Word vershik_orbit_coding(const OrderedBratteliDiagram& B, std::size_t level, const PathPrefix& start,
                          std::size_t steps, OrbitCoding mode = OrbitCoding::TowerEntries);

std::string diagram_dot(const OrderedBratteliDiagram& B);
// Line form: "bratteli v1", the level-0 alphabet, edge labels and their coding, then
// "level m = <vertices>" followed by one "<vertex> <- <sources>" line per fiber, in order.
std::string diagram_text(const OrderedBratteliDiagram& B);
OrderedBratteliDiagram parse_diagram_text(std::string_view text);

// Towers over the members of W = tau_[0,cut)(A_cut), each split as w- . w+.
struct TowerPartitionSpec {
  std::size_t cut = 1;
  WordSet W;
  std::vector<std::size_t> split;  // |w-| per member of W, default ceil(|w| / 2)

  static TowerPartitionSpec from_images(const DirectiveSequence& seq, std::size_t cut);
};

struct TowerReport {
  std::size_t radius = 0;
  std::size_t padding = 0;
  std::uint64_t windows = 0, positions = 0;
  std::uint64_t ambiguous = 0, uncovered = 0;
  std::optional<Word> ambiguous_window, uncovered_window;
  bool ok = false;
};

class NotRecognizable : public Error {
 public:
  using Error::Error;
};

// Every interior position of every length-window_len word of L^{(0)} must fall in
// exactly one translated base S^-j [w- . w+]. Throws NotRecognizable when the images
// are not certified recognizable (a periodic language, for one).
TowerReport verify_tower_partition(const TowerPartitionSpec& spec, const DirectiveSequence& seq, std::size_t window_len);

}  // namespace sadic
