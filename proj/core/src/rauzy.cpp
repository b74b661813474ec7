#include "sadic/rauzy.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>

namespace sadic {

std::optional<std::size_t> RauzyGraph::find(WordView w) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), w,
                             [](const Word& a, WordView b) { return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end()); });
  if (it == vertices.end() || !std::equal(it->begin(), it->end(), w.begin(), w.end())) return std::nullopt;
  return static_cast<std::size_t>(it - vertices.begin());
}

std::size_t RauzyGraph::max_out_degree() const {
  std::size_t m = 0;
  for (const auto& e : out) m = std::max(m, e.size());
  return m;
}

std::size_t RauzyGraph::max_in_degree() const {
  std::size_t m = 0;
  for (const auto& e : in) m = std::max(m, e.size());
  return m;
}

std::vector<std::size_t> RauzyGraph::right_special() const {
  std::vector<std::size_t> r;
  for (std::size_t v = 0; v < vertices.size(); ++v)
    if (out[v].size() >= 2) r.push_back(v);
  return r;
}

namespace {

bool reaches_all(const std::vector<std::vector<std::size_t>>& adj, const std::vector<RauzyEdge>& edges, bool forward) {
  const std::size_t nv = adj.size();
  if (nv == 0) return true;
  std::vector<std::uint8_t> seen(nv, 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t e : adj[v]) {
      std::size_t w = forward ? edges[e].target : edges[e].source;
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == nv;
}

}  // namespace

RauzyGraph build_rauzy(const LanguageTable& table, std::size_t n) {
  if (n < 1) throw Error("Rauzy graphs start at n = 1");
  if (n + 1 > table.max_len()) throw Error("Rauzy graph at n needs the language at length n + 1");
  RauzyGraph g;
  g.n = n;
  g.alphabet = table.alphabet();
  g.vertices = table.words(n);
  g.out.resize(g.vertices.size());
  g.in.resize(g.vertices.size());
  for (Word& w : table.words(n + 1)) {
    RauzyEdge e;
    e.source = *g.find(WordView(w).first(n));
    e.target = *g.find(WordView(w).last(n));
    e.word = std::move(w);
    g.out[e.source].push_back(g.edges.size());
    g.in[e.target].push_back(g.edges.size());
    g.edges.push_back(std::move(e));
  }
  g.strongly_connected = reaches_all(g.out, g.edges, true) && reaches_all(g.in, g.edges, false);
  return g;
}

RauzyGraph build_rauzy(const DirectiveSequence& seq, std::size_t level, std::size_t n) {
  return build_rauzy(compute_language(seq, level, n + 1), n);
}

namespace {

struct Complement {
  const RauzyGraph& g;
  std::vector<std::uint8_t> in_vprime;

  bool inside(std::size_t v) const { return !in_vprime[v]; }

  // A directed cycle of G[V \ V'], as a vertex list.
  std::vector<std::size_t> directed_cycle() const {
    const std::size_t nv = g.vertices.size();
    std::vector<std::uint8_t> color(nv, 0);
    std::vector<std::size_t> parent(nv, 0);
    for (std::size_t root = 0; root < nv; ++root) {
      if (!inside(root) || color[root]) continue;
      std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
      color[root] = 1;
      while (!stack.empty()) {
        auto& [v, i] = stack.back();
        if (i == g.out[v].size()) {
          color[v] = 2;
          stack.pop_back();
          continue;
        }
        std::size_t w = g.edges[g.out[v][i++]].target;
        if (!inside(w)) continue;
        if (color[w] == 1) {
          std::vector<std::size_t> cyc{w};
          for (std::size_t x = v; x != w; x = parent[x]) cyc.push_back(x);
          std::reverse(cyc.begin() + 1, cyc.end());
          return cyc;
        }
        if (color[w] == 0) {
          color[w] = 1;
          parent[w] = v;
          stack.emplace_back(w, 0);
        }
      }
    }
    return {};
  }

  // An undirected cycle of the underlying graph, when there is no directed one.
  std::vector<std::size_t> undirected_cycle() const {
    const std::size_t nv = g.vertices.size();
    std::vector<std::size_t> root(nv);
    std::iota(root.begin(), root.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
      while (root[x] != x) x = root[x] = root[root[x]];
      return x;
    };
    std::vector<std::vector<std::size_t>> tree(nv);
    for (const RauzyEdge& e : g.edges) {
      if (!inside(e.source) || !inside(e.target)) continue;
      std::size_t a = find(e.source), b = find(e.target);
      if (a != b) {
        root[a] = b;
        tree[e.source].push_back(e.target);
        tree[e.target].push_back(e.source);
        continue;
      }
      // Close the cycle through the tree path target ... source.
      std::vector<std::size_t> prev(nv, nv);
      std::vector<std::size_t> queue{e.target};
      prev[e.target] = e.target;
      for (std::size_t qi = 0; qi < queue.size(); ++qi)
        for (std::size_t w : tree[queue[qi]])
          if (prev[w] == nv) {
            prev[w] = queue[qi];
            queue.push_back(w);
          }
      std::vector<std::size_t> cyc;
      for (std::size_t x = e.source; x != e.target; x = prev[x]) cyc.push_back(x);
      cyc.push_back(e.target);
      return cyc;
    }
    return {};
  }

  // Longest path (in edges) inside the complement; nullopt when cycles make it too costly.
  std::optional<std::size_t> longest_path(bool acyclic, std::size_t brute_cap) const {
    const std::size_t nv = g.vertices.size();
    if (acyclic) {
      std::vector<std::size_t> indeg(nv, 0), best(nv, 0), order;
      for (const RauzyEdge& e : g.edges)
        if (inside(e.source) && inside(e.target)) ++indeg[e.target];
      for (std::size_t v = 0; v < nv; ++v)
        if (inside(v) && indeg[v] == 0) order.push_back(v);
      std::size_t top = 0;
      for (std::size_t i = 0; i < order.size(); ++i) {
        std::size_t v = order[i];
        top = std::max(top, best[v]);
        for (std::size_t ei : g.out[v]) {
          std::size_t w = g.edges[ei].target;
          if (!inside(w)) continue;
          best[w] = std::max(best[w], best[v] + 1);
          if (--indeg[w] == 0) order.push_back(w);
        }
      }
      return top;
    }
    std::size_t count = 0;
    for (std::size_t v = 0; v < nv; ++v) count += inside(v);
    if (count > brute_cap) return std::nullopt;
    std::size_t top = 0;
    std::vector<std::uint8_t> on(nv, 0);
    std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t v, std::size_t depth) {
      top = std::max(top, depth);
      on[v] = 1;
      for (std::size_t ei : g.out[v]) {
        std::size_t w = g.edges[ei].target;
        if (inside(w) && !on[w]) dfs(w, depth + 1);
      }
      on[v] = 0;
    };
    for (std::size_t v = 0; v < nv; ++v)
      if (inside(v)) dfs(v, 0);
    return top;
  }
};

Complement make_complement(const RauzyGraph& g, const std::vector<std::size_t>& vprime) {
  Complement c{g, std::vector<std::uint8_t>(g.vertices.size(), 0)};
  for (std::size_t v : vprime) {
    if (v >= g.vertices.size()) throw Error("V' names a vertex outside the graph");
    c.in_vprime[v] = 1;
  }
  return c;
}

constexpr std::size_t kBorderPathCap = 1u << 20;

}  // namespace

ForestReport forest_and_border_paths(const RauzyGraph& g, const std::vector<std::size_t>& vprime) {
  Complement c = make_complement(g, vprime);
  ForestReport r;
  r.witness_cycle = c.directed_cycle();
  if (r.witness_cycle.empty()) r.witness_cycle = c.undirected_cycle();
  r.is_directed_forest = r.witness_cycle.empty();

  std::size_t k = 0;
  for (auto b : c.in_vprime) k += b;
  r.bound = k * k * g.max_out_degree() * g.max_in_degree();
  if (!r.is_directed_forest) return r;  // walks need not terminate

  std::vector<std::size_t> sorted(vprime);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  bool capped = false;
  for (std::size_t u : sorted) {
    std::vector<std::size_t> path{u};
    std::function<void(std::size_t)> walk = [&](std::size_t v) {
      for (std::size_t ei : g.out[v]) {
        if (r.border_paths.size() >= kBorderPathCap) {
          capped = true;
          return;
        }
        std::size_t w = g.edges[ei].target;
        path.push_back(w);
        if (c.in_vprime[w]) r.border_paths.push_back(path);
        else walk(w);
        path.pop_back();
      }
    };
    walk(u);
  }
  r.bound_ok = !capped && r.border_paths.size() <= r.bound;
  return r;
}

const char* to_string(WitnessStatus s) {
  switch (s) {
    case WitnessStatus::Found: return "Found";
    case WitnessStatus::NotFound: return "NotFound";
    case WitnessStatus::SearchCapped: return "NotFound(exhausted)";
  }
  return "?";
}

namespace {

// Evaluate one candidate V'. Fills the witness fields and returns whether it qualifies.
bool try_candidate(const RauzyGraph& g, const std::vector<std::size_t>& vprime, std::size_t K, std::size_t Kprime,
                   const DeconnectabilityOptions& opts, DeconnectabilityWitness& out) {
  if (vprime.size() > K) return false;
  Complement c = make_complement(g, vprime);
  bool forest = c.directed_cycle().empty() && c.undirected_cycle().empty();
  if (opts.strong && !forest) return false;
  bool acyclic = forest || c.directed_cycle().empty();
  auto longest = c.longest_path(acyclic, opts.exhaustive_cap);
  if (!longest || *longest > Kprime * g.n) return false;
  out.status = WitnessStatus::Found;
  out.vprime = vprime;
  out.longest_path = *longest;
  out.forest = forest;
  const std::size_t a = g.alphabet.size();
  out.complexity_inequality_ok = g.vertices.size() <= K + (2 * K * a - 1) * Kprime * g.n;
  return true;
}

}  // namespace

DeconnectabilityWitness deconnectability_witness(const RauzyGraph& g, std::size_t K, std::size_t Kprime,
                                                 DeconnectabilityOptions opts) {
  if (K < 1 || Kprime < 1) throw Error("deconnectability needs K >= 1 and K' >= 1");
  DeconnectabilityWitness w;
  if (try_candidate(g, g.right_special(), K, Kprime, opts, w)) return w;
  const std::size_t nv = g.vertices.size();
  if (nv > opts.exhaustive_cap) {
    w.status = WitnessStatus::SearchCapped;
    return w;
  }
  // Subsets by increasing size, lexicographic within a size.
  for (std::size_t size = 0; size <= std::min(K, nv); ++size) {
    std::vector<std::uint8_t> pick(nv, 0);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), 1);
    do {
      std::vector<std::size_t> vp;
      for (std::size_t v = 0; v < nv; ++v)
        if (pick[v]) vp.push_back(v);
      if (try_candidate(g, vp, K, Kprime, opts, w)) return w;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  w.status = WitnessStatus::NotFound;
  return w;
}

DeconnectabilityWitness deconnectability_witness(const DirectiveSequence& seq, std::size_t n, std::size_t K,
                                                 std::size_t Kprime, DeconnectabilityOptions opts) {
  return deconnectability_witness(build_rauzy(seq, 0, n), K, Kprime, opts);
}

std::string rauzy_dot(const RauzyGraph& g, const std::vector<std::size_t>& vprime) {
  std::ostringstream os;
  os << "digraph rauzy_" << g.n << " {\n";
  std::vector<std::size_t> sorted(vprime);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    os << "  \"" << format_word(g.vertices[v], g.alphabet) << '"';
    if (std::binary_search(sorted.begin(), sorted.end(), v)) os << " [shape=box]";
    os << ";\n";
  }
  for (const RauzyEdge& e : g.edges)
    os << "  \"" << format_word(g.vertices[e.source], g.alphabet) << "\" -> \""
       << format_word(g.vertices[e.target], g.alphabet) << "\" [label=\"" << format_word(e.word, g.alphabet)
       << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace sadic
