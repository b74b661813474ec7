#include "sadic/bratteli.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace sadic {

namespace {

constexpr std::size_t kEdgeCap = std::size_t{1} << 24;

Morphism identity_on(const Alphabet& a) {
  std::vector<Word> imgs(a.size());
  for (Letter c = 0; c < a.size(); ++c) imgs[c] = {c};
  return Morphism(a, a, std::move(imgs));
}

const std::vector<BratteliEdge>& fiber(const OrderedBratteliDiagram& B, std::size_t m, Letter v) {
  return B.fibers.at(m).at(v);
}

}  // namespace

std::size_t OrderedBratteliDiagram::edge_count(std::size_t m) const {
  std::size_t e = 0;
  for (const auto& f : fibers.at(m)) e += f.size();
  return e;
}

OrderedBratteliDiagram diagram_from_sequence(const DirectiveSequence& seq, std::size_t depth) {
  OrderedBratteliDiagram B;
  B.vertices.push_back(Alphabet({"v0"}));
  B.fibers.emplace_back();
  if (depth == 0) return B;

  const Morphism& t0 = seq.at(0);
  if (!t0.has_images()) throw DepthExhausted("first morphism is too long to place on a diagram");
  Morphism sigma = t0;
  if (classify(t0).hat) {
    B.edge_alphabet = t0.codomain();
    B.level0_coding = identity_on(t0.codomain());
  } else {
    Decomposition d = decompose_recognizable(t0);
    sigma = d.sigma;
    B.edge_alphabet = d.psi.domain();
    B.level0_coding = d.psi;
  }
  B.vertices.push_back(t0.domain());
  B.fibers.emplace_back(t0.domain().size());
  for (Letter v = 0; v < t0.domain().size(); ++v)
    for (Letter c : sigma.image(v)) B.fibers[1][v].push_back({0, c});

  for (std::size_t m = 2; m <= depth; ++m) {
    const Morphism& t = seq.at(m - 1);
    if (!classify(t).proper)
      throw NotProper("morphism at level " + std::to_string(m - 1) + " is not proper; telescope the sequence first");
    if (!t.has_images()) throw DepthExhausted("morphism at level " + std::to_string(m - 1) + " is too long to place on a diagram");
    B.vertices.push_back(t.domain());
    B.fibers.emplace_back(t.domain().size());
    for (Letter v = 0; v < t.domain().size(); ++v)
      for (Letter c : t.image(v)) B.fibers[m][v].push_back({c, 0});
  }
  return B;
}

DirectiveSequence read_morphisms(const OrderedBratteliDiagram& B) {
  std::vector<Morphism> out;
  for (std::size_t m = 1; m <= B.depth(); ++m) {
    std::vector<Word> imgs(B.vertices[m].size());
    for (Letter v = 0; v < B.vertices[m].size(); ++v)
      for (const BratteliEdge& e : fiber(B, m, v)) imgs[v].push_back(m == 1 ? e.label : e.source);
    if (m == 1) {
      Morphism sigma(B.vertices[1], B.edge_alphabet, std::move(imgs));
      out.push_back(compose(B.level0_coding, sigma));
    } else {
      out.emplace_back(B.vertices[m], B.vertices[m - 1], std::move(imgs));
    }
  }
  return DirectiveSequence::finite(std::move(out));
}

OrderedBratteliDiagram telescope_diagram(const OrderedBratteliDiagram& B, const std::vector<std::size_t>& cuts) {
  if (cuts.empty() || cuts[0] != 0) throw Error("telescoping cuts start at 0");
  for (std::size_t i = 1; i < cuts.size(); ++i)
    if (cuts[i] <= cuts[i - 1]) throw Error("telescoping cuts must increase strictly");
  if (cuts.back() > B.depth()) throw Error("telescoping cut beyond the diagram depth");

  OrderedBratteliDiagram T;
  T.vertices.push_back(B.vertices[0]);
  T.fibers.emplace_back();
  if (cuts.size() == 1) return T;

  // Paths into (m, v) that start at level `bottom`, in the induced order: the top edge
  // varies slowest. Each path is reported by its lowest edge.
  std::size_t budget = kEdgeCap;
  std::function<void(std::size_t, Letter, std::size_t, std::vector<BratteliEdge>&)> paths =
      [&](std::size_t m, Letter v, std::size_t bottom, std::vector<BratteliEdge>& sink) {
        for (const BratteliEdge& e : fiber(B, m, v)) {
          if (m - 1 == bottom) {
            if (budget-- == 0) throw Error("telescoped diagram has too many edges");
            sink.push_back(e);
          } else {
            paths(m - 1, e.source, bottom, sink);
          }
        }
      };

  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const std::size_t lo = cuts[k], hi = cuts[k + 1];
    T.vertices.push_back(B.vertices[hi]);
    T.fibers.emplace_back(B.vertices[hi].size());
    for (Letter v = 0; v < B.vertices[hi].size(); ++v) paths(hi, v, lo, T.fibers.back()[v]);
    if (k > 0) continue;
    if (hi == 1) {
      T.edge_alphabet = B.edge_alphabet;
      T.level0_coding = B.level0_coding;
      continue;
    }
    // Level-1 edges become paths: give each one a fresh label coded like its first edge.
    std::vector<std::string> names;
    std::vector<Word> coding;
    for (auto& f : T.fibers.back())
      for (BratteliEdge& e : f) {
        names.push_back(B.edge_alphabet.symbol(e.label) + "@" + std::to_string(names.size()));
        coding.push_back(B.level0_coding.image(e.label));
        e.label = static_cast<Letter>(names.size() - 1);
      }
    T.edge_alphabet = Alphabet(names);
    T.level0_coding = Morphism(T.edge_alphabet, B.level0_coding.codomain(), std::move(coding));
  }
  return T;
}

// ---------------------------------------------------------------------------
// Vershik map

PathPrefix min_path(const OrderedBratteliDiagram& B, Letter top) {
  if (B.depth() == 0) throw Error("diagram has no edges");
  if (top >= B.vertices.back().size()) throw Error("top vertex out of range");
  return {top, std::vector<std::size_t>(B.depth(), 0)};
}

std::vector<Letter> path_vertices(const OrderedBratteliDiagram& B, const PathPrefix& p) {
  const std::size_t d = p.positions.size();
  if (d > B.depth()) throw Error("path deeper than the diagram");
  std::vector<Letter> v(d + 1, 0);
  v[d] = p.top;
  for (std::size_t m = d; m >= 1; --m) {
    const auto& f = fiber(B, m, v[m]);
    if (p.positions[m - 1] >= f.size()) throw Error("path position outside its fiber");
    v[m - 1] = m == 1 ? 0 : f[p.positions[m - 1]].source;
  }
  return v;
}

std::optional<PathPrefix> successor(const OrderedBratteliDiagram& B, const PathPrefix& p) {
  std::vector<Letter> v = path_vertices(B, p);
  for (std::size_t m = 1; m <= p.positions.size(); ++m) {
    if (p.positions[m - 1] + 1 < fiber(B, m, v[m]).size()) {
      PathPrefix q = p;
      ++q.positions[m - 1];
      std::fill(q.positions.begin(), q.positions.begin() + static_cast<std::ptrdiff_t>(m - 1), 0);
      return q;
    }
  }
  return std::nullopt;
}

std::optional<PathPrefix> predecessor(const OrderedBratteliDiagram& B, const PathPrefix& p) {
  for (std::size_t m = 1; m <= p.positions.size(); ++m) {
    if (p.positions[m - 1] > 0) {
      PathPrefix q = p;
      --q.positions[m - 1];
      std::fill(q.positions.begin(), q.positions.begin() + static_cast<std::ptrdiff_t>(m - 1), 0);
      std::vector<Letter> v = path_vertices(B, q);
      for (std::size_t j = m - 1; j >= 1; --j) {
        v[j] = fiber(B, j + 1, v[j + 1])[q.positions[j]].source;
        q.positions[j - 1] = fiber(B, j, v[j]).size() - 1;
      }
      return q;
    }
  }
  return std::nullopt;
}

MaxPathReached::MaxPathReached(std::size_t steps, Word w)
    : Error("maximal path reached after " + std::to_string(steps) + " steps"), completed_steps(steps), partial(std::move(w)) {}

Word vershik_orbit_coding(const OrderedBratteliDiagram& B, std::size_t level, const PathPrefix& start, std::size_t steps,
                          OrbitCoding mode) {
  if (level > start.positions.size() || start.positions.empty()) throw Error("orbit coding level exceeds the path depth");
  Word out;
  PathPrefix p = start;
  auto record = [&] {
    std::vector<Letter> v = path_vertices(B, p);
    if (level == 0) {
      Letter label = fiber(B, 1, v[1])[p.positions[0]].label;
      out.push_back(B.level0_coding.image(label)[0]);
      return;
    }
    if (mode == OrbitCoding::TowerEntries &&
        !std::all_of(p.positions.begin(), p.positions.begin() + static_cast<std::ptrdiff_t>(level),
                     [](std::size_t x) { return x == 0; }))
      return;
    out.push_back(v[level]);
  };
  record();
  for (std::size_t s = 0; s < steps; ++s) {
    auto q = successor(B, p);
    if (!q) throw MaxPathReached(s, std::move(out));
    p = std::move(*q);
    record();
  }
  return out;
}

std::string diagram_dot(const OrderedBratteliDiagram& B) {
  std::ostringstream os;
  os << "digraph bratteli {\n";
  if (B.depth() > 0) {
    os << "  rankdir=BT;\n";
    for (std::size_t m = 0; m <= B.depth(); ++m)
      for (Letter v = 0; v < B.vertices[m].size(); ++v)
        os << "  L" << m << '_' << v << " [label=\"" << B.vertices[m].symbol(v) << "\"];\n";
    for (std::size_t m = 1; m <= B.depth(); ++m)
      for (Letter v = 0; v < B.vertices[m].size(); ++v) {
        const auto& f = fiber(B, m, v);
        for (std::size_t k = 0; k < f.size(); ++k)
          os << "  L" << m - 1 << '_' << (m == 1 ? 0 : f[k].source) << " -> L" << m << '_' << v << " [label=\"ord=" << k
             << "\"];\n";
      }
  }
  os << "}\n";
  return os.str();
}

std::string diagram_text(const OrderedBratteliDiagram& B) {
  std::ostringstream os;
  auto tokens = [&](const std::vector<std::string>& syms) {
    for (const auto& t : syms) os << ' ' << t;
    os << '\n';
  };
  os << "bratteli v1\n";
  if (B.depth() == 0) return os.str();
  os << "alphabet";
  tokens(B.level0_coding.codomain().symbols());
  os << "edges";
  tokens(B.edge_alphabet.symbols());
  os << "coding";
  for (const Word& img : B.level0_coding.images()) os << ' ' << B.level0_coding.codomain().symbol(img.at(0));
  os << '\n';
  for (std::size_t m = 1; m <= B.depth(); ++m) {
    os << "level " << m << " =";
    tokens(B.vertices[m].symbols());
    for (Letter v = 0; v < B.vertices[m].size(); ++v) {
      os << "  " << B.vertices[m].symbol(v) << " <-";
      for (const BratteliEdge& e : fiber(B, m, v))
        os << ' ' << (m == 1 ? B.edge_alphabet.symbol(e.label) : B.vertices[m - 1].symbol(e.source));
      os << '\n';
    }
  }
  return os.str();
}

OrderedBratteliDiagram parse_diagram_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& msg) -> Error { return Error("line " + std::to_string(lineno) + ": " + msg); };
  auto split = [](const std::string& l) {
    std::istringstream ls(l);
    std::vector<std::string> t;
    for (std::string w; ls >> w;) t.push_back(w);
    return t;
  };

  OrderedBratteliDiagram B;
  B.vertices.push_back(Alphabet({"v0"}));
  B.fibers.emplace_back();
  Alphabet a0;
  std::vector<std::string> coding;
  bool header = false;
  std::size_t filled = 0;  // fibers read at the current level
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    auto t = split(line);
    if (t.empty()) continue;
    if (!header) {
      if (t != std::vector<std::string>{"bratteli", "v1"}) throw fail("expected header 'bratteli v1'");
      header = true;
      continue;
    }
    if (t[0] == "alphabet") {
      a0 = Alphabet({t.begin() + 1, t.end()});
    } else if (t[0] == "edges") {
      B.edge_alphabet = Alphabet({t.begin() + 1, t.end()});
    } else if (t[0] == "coding") {
      coding.assign(t.begin() + 1, t.end());
    } else if (t[0] == "level") {
      if (B.depth() > 0 && filled != B.vertices.back().size()) throw fail("missing fibers at level " + std::to_string(B.depth()));
      if (t.size() < 4 || t[2] != "=" || t[1] != std::to_string(B.depth() + 1)) throw fail("expected 'level <m> = <vertices>'");
      B.vertices.push_back(Alphabet({t.begin() + 3, t.end()}));
      B.fibers.emplace_back(B.vertices.back().size());
      filled = 0;
    } else {
      const std::size_t m = B.depth();
      if (m == 0 || t.size() < 3 || t[1] != "<-") throw fail("expected '<vertex> <- <sources>'");
      auto v = B.vertices[m].find(t[0]);
      if (!v) throw fail("unknown vertex '" + t[0] + "'");
      if (!B.fibers[m][*v].empty()) throw fail("fiber of '" + t[0] + "' given twice");
      for (std::size_t i = 2; i < t.size(); ++i) {
        BratteliEdge e;
        if (m == 1) {
          auto l = B.edge_alphabet.find(t[i]);
          if (!l) throw fail("unknown edge label '" + t[i] + "'");
          e.label = *l;
        } else {
          auto s = B.vertices[m - 1].find(t[i]);
          if (!s) throw fail("unknown vertex '" + t[i] + "' at level " + std::to_string(m - 1));
          e.source = *s;
        }
        B.fibers[m][*v].push_back(e);
      }
      ++filled;
    }
  }
  if (!header) throw Error("empty diagram text");
  if (B.depth() == 0) return B;
  if (filled != B.vertices.back().size()) throw fail("missing fibers at the last level");
  if (coding.size() != B.edge_alphabet.size()) throw Error("coding must give one letter per edge label");
  std::vector<Word> imgs;
  for (const auto& c : coding) {
    auto l = a0.find(c);
    if (!l) throw Error("coding letter '" + c + "' is not in the alphabet");
    imgs.push_back({*l});
  }
  B.level0_coding = Morphism(B.edge_alphabet, a0, std::move(imgs));
  return B;
}

// ---------------------------------------------------------------------------
// Tower partitions

TowerPartitionSpec TowerPartitionSpec::from_images(const DirectiveSequence& seq, std::size_t cut) {
  if (cut == 0) throw Error("tower cut must be at least 1");
  Morphism t = seq.compose_range(0, cut);
  if (!t.has_images()) throw DepthExhausted("tower images are too long");
  TowerPartitionSpec spec;
  spec.cut = cut;
  spec.W = WordSet::make(t.images());
  for (const Word& w : spec.W.members) spec.split.push_back((w.size() + 1) / 2);
  return spec;
}

TowerReport verify_tower_partition(const TowerPartitionSpec& spec, const DirectiveSequence& seq, std::size_t window_len) {
  if (spec.split.size() != spec.W.size()) throw Error("one split per tower word is required");
  for (std::size_t i = 0; i < spec.split.size(); ++i)
    if (spec.split[i] > spec.W.members[i].size()) throw Error("split beyond the end of its word");

  DirectiveSequence tele = spec.cut == 1 ? seq : telescope(seq, {0, spec.cut}, std::size_t{1});
  const Morphism& tau = tele.at(0);
  if (WordSet::make(tau.images()).members != spec.W.members || spec.W.size() != tau.domain().size())
    throw Error("tower words are not the distinct images of the telescoped morphism");

  RecognizabilityResult rr = recognizability_radius(tele, 0);
  if (rr.status != RecogStatus::Certified)
    throw NotRecognizable(std::string("tower words are not recognizable (") + to_string(rr.status) + ")");

  TowerReport rep;
  rep.radius = rr.radius;
  const std::size_t R = rr.radius;
  rep.padding = R + spec.W.max_length();
  if (window_len < 2 * rep.padding + 1) throw Error("window too short for the padding " + std::to_string(rep.padding));

  Recognizer rec(tele, 0, R);
  LanguageTable table = compute_language(seq, 0, window_len);
  for (const Word& x : table.words(window_len)) {
    ++rep.windows;
    WordView xv(x);
    for (std::size_t q = rep.padding; q + rep.padding < window_len; ++q) {
      ++rep.positions;
      auto in = rec.interpretations(xv.subspan(q - R, 2 * R));
      if (in.size() > 1) {
        ++rep.ambiguous;
        if (!rep.ambiguous_window) rep.ambiguous_window = x;
        continue;
      }
      bool covered = in.size() == 1;
      if (covered) {
        auto [k, y] = in[0];
        const Word& w = tau.image(y);
        covered = k < w.size() && std::equal(w.begin(), w.end(), x.begin() + static_cast<std::ptrdiff_t>(q - k));
      }
      if (!covered) {
        ++rep.uncovered;
        if (!rep.uncovered_window) rep.uncovered_window = x;
      }
    }
  }
  rep.ok = rep.positions > 0 && rep.ambiguous == 0 && rep.uncovered == 0;
  return rep;
}

}  // namespace sadic
