#include "sadic/specfile.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace sadic {

SpecError::SpecError(std::size_t l, std::size_t c, const std::string& message)
    : Error("line " + std::to_string(l) + ":" + std::to_string(c) + ": " + message), line(l), column(c) {}

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back({std::string(line.substr(i, j - i)), i + 1});
    i = j;
  }
  return out;
}

const std::set<std::string>& known_generators() {
  static const std::set<std::string> g{"rank2_superlinear"};
  return g;
}

class Parser {
 public:
  SpecFile run(std::string_view text) {
    std::size_t lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t nl = text.find('\n', pos);
      if (nl == std::string_view::npos) nl = text.size();
      std::string_view line = text.substr(pos, nl - pos);
      pos = nl + 1;
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
      auto toks = tokenize(line);
      if (toks.empty()) continue;
      handle(lineno, line, toks);
    }
    if (!header_) throw SpecError(lineno, 1, "missing header 'sadic v1'");
    close_block(lineno);
    if (spec_.morphisms.empty() && spec_.tail != SpecFile::Tail::Generator)
      throw SpecError(lineno, 1, "no morphisms and no generator");
    return std::move(spec_);
  }

 private:
  void handle(std::size_t ln, std::string_view line, const std::vector<Token>& t) {
    if (!header_) {
      if (t.size() != 2 || t[0].text != "sadic" || t[1].text != "v1") throw SpecError(ln, t[0].column, "expected header 'sadic v1'");
      header_ = true;
      return;
    }
    const bool indented = line.front() == ' ' || line.front() == '\t';
    if (indented) {
      image_line(ln, t);
      return;
    }
    close_block(ln);
    if (spec_.tail != SpecFile::Tail::None) throw SpecError(ln, t[0].column, "nothing may follow the tail or generator line");
    const std::string& kw = t[0].text;
    if (kw == "letters") letters_line(ln, t);
    else if (kw == "morphism") morphism_line(ln, t);
    else if (kw == "tail") tail_line(ln, t);
    else if (kw == "generator") generator_line(ln, t);
    else throw SpecError(ln, t[0].column, "unknown directive '" + kw + "'");
  }

  void letters_line(std::size_t ln, const std::vector<Token>& t) {
    if (t.size() < 4 || t[2].text != "=") throw SpecError(ln, t[0].column, "expected 'letters <name> = <tok> ...'");
    if (alphabets_.count(t[1].text)) throw SpecError(ln, t[1].column, "alphabet '" + t[1].text + "' declared twice");
    SpecFile::Letters L{t[1].text, {}};
    std::set<std::string> seen;
    for (std::size_t i = 3; i < t.size(); ++i) {
      if (!seen.insert(t[i].text).second) throw SpecError(ln, t[i].column, "letter '" + t[i].text + "' repeated");
      L.symbols.push_back(t[i].text);
    }
    alphabets_[L.name] = spec_.alphabets.size();
    spec_.alphabets.push_back(std::move(L));
  }

  const SpecFile::Letters& alphabet(std::size_t ln, const Token& tok) {
    auto it = alphabets_.find(tok.text);
    if (it == alphabets_.end()) throw SpecError(ln, tok.column, "unknown alphabet '" + tok.text + "'");
    return spec_.alphabets[it->second];
  }

  void morphism_line(std::size_t ln, const std::vector<Token>& t) {
    if (t.size() != 6 || t[2].text != ":" || t[4].text != "->")
      throw SpecError(ln, t[0].column, "expected 'morphism <name> : <domain> -> <codomain>'");
    alphabet(ln, t[3]);
    alphabet(ln, t[5]);
    if (!spec_.morphisms.empty() && spec_.morphisms.back().domain != t[5].text)
      throw SpecError(ln, t[5].column,
                      "chain mismatch: codomain '" + t[5].text + "' differs from the domain '" + spec_.morphisms.back().domain +
                          "' of the previous morphism");
    spec_.morphisms.push_back({t[1].text, t[3].text, t[5].text, {}});
    block_open_ = true;
    block_line_ = ln;
  }

  void image_line(std::size_t ln, const std::vector<Token>& t) {
    if (!block_open_) throw SpecError(ln, t[0].column, "image line outside a morphism block");
    if (t.size() < 2 || t[1].text != "=") throw SpecError(ln, t[0].column, "expected '<letter> = <tok> ...'");
    SpecFile::MorphismBlock& m = spec_.morphisms.back();
    const auto& dom = spec_.alphabets[alphabets_.at(m.domain)].symbols;
    const auto& cod = spec_.alphabets[alphabets_.at(m.codomain)].symbols;
    if (std::find(dom.begin(), dom.end(), t[0].text) == dom.end())
      throw SpecError(ln, t[0].column, "unknown letter '" + t[0].text + "' for alphabet '" + m.domain + "'");
    for (const auto& [a, img] : m.images)
      if (a == t[0].text) throw SpecError(ln, t[0].column, "second image for letter '" + a + "'");
    if (t.size() == 2) throw SpecError(ln, t[1].column + 1, "erasing morphism: empty image for letter '" + t[0].text + "'");
    std::vector<std::string> img;
    for (std::size_t i = 2; i < t.size(); ++i) {
      if (std::find(cod.begin(), cod.end(), t[i].text) == cod.end())
        throw SpecError(ln, t[i].column, "unknown letter '" + t[i].text + "' for alphabet '" + m.codomain + "'");
      img.push_back(t[i].text);
    }
    m.images.emplace_back(t[0].text, std::move(img));
  }

  void close_block(std::size_t ln) {
    if (!block_open_) return;
    block_open_ = false;
    SpecFile::MorphismBlock& m = spec_.morphisms.back();
    const auto& dom = spec_.alphabets[alphabets_.at(m.domain)].symbols;
    for (const std::string& a : dom) {
      auto it = std::find_if(m.images.begin(), m.images.end(), [&](const auto& p) { return p.first == a; });
      if (it == m.images.end())
        throw SpecError(block_line_, 1, "morphism '" + m.name + "' has no image for letter '" + a + "'");
    }
    // Keep images in domain order so equal specs serialize equally.
    std::stable_sort(m.images.begin(), m.images.end(), [&](const auto& x, const auto& y) {
      return std::find(dom.begin(), dom.end(), x.first) < std::find(dom.begin(), dom.end(), y.first);
    });
    (void)ln;
  }

  void tail_line(std::size_t ln, const std::vector<Token>& t) {
    if (t.size() != 4 || t[1].text != "periodic" || t[2].text != "from")
      throw SpecError(ln, t[0].column, "expected 'tail periodic from <k>'");
    std::size_t k = 0;
    try {
      std::size_t used = 0;
      k = std::stoul(t[3].text, &used);
      if (used != t[3].text.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw SpecError(ln, t[3].column, "expected a level index");
    }
    if (k >= spec_.morphisms.size()) throw SpecError(ln, t[3].column, "periodic block starts after the last morphism");
    if (spec_.morphisms.back().domain != spec_.morphisms[k].codomain)
      throw SpecError(ln, t[3].column, "chain mismatch: the periodic block does not close up");
    spec_.tail = SpecFile::Tail::Periodic;
    spec_.periodic_from = k;
  }

  void generator_line(std::size_t ln, const std::vector<Token>& t) {
    if (t.size() < 2) throw SpecError(ln, t[0].column, "expected 'generator <name> <key>=<value> ...'");
    if (!known_generators().count(t[1].text)) throw SpecError(ln, t[1].column, "unknown generator '" + t[1].text + "'");
    spec_.tail = SpecFile::Tail::Generator;
    spec_.generator = t[1].text;
    for (std::size_t i = 2; i < t.size(); ++i) {
      auto eq = t[i].text.find('=');
      if (eq == std::string::npos || eq == 0 || eq + 1 == t[i].text.size())
        throw SpecError(ln, t[i].column, "expected <key>=<value>");
      spec_.params.emplace_back(t[i].text.substr(0, eq), t[i].text.substr(eq + 1));
    }
    try {
      build_sequence(spec_);
    } catch (const SpecError&) {
      throw;
    } catch (const Error& e) {
      throw SpecError(ln, t[1].column, e.what());
    }
  }

  SpecFile spec_;
  std::map<std::string, std::size_t> alphabets_;
  bool header_ = false;
  bool block_open_ = false;
  std::size_t block_line_ = 0;
};

}  // namespace

SpecFile parse_spec_file(std::string_view text) { return Parser().run(text); }

std::string serialize_spec(const SpecFile& spec) {
  std::ostringstream os;
  os << "sadic v1\n";
  for (const auto& L : spec.alphabets) {
    os << "letters " << L.name << " =";
    for (const auto& s : L.symbols) os << ' ' << s;
    os << '\n';
  }
  for (const auto& m : spec.morphisms) {
    os << "morphism " << m.name << " : " << m.domain << " -> " << m.codomain << '\n';
    for (const auto& [a, img] : m.images) {
      os << "  " << a << " =";
      for (const auto& s : img) os << ' ' << s;
      os << '\n';
    }
  }
  if (spec.tail == SpecFile::Tail::Periodic) os << "tail periodic from " << spec.periodic_from << '\n';
  if (spec.tail == SpecFile::Tail::Generator) {
    os << "generator " << spec.generator;
    for (const auto& [k, v] : spec.params) os << ' ' << k << '=' << v;
    os << '\n';
  }
  return os.str();
}

DirectiveSequence build_sequence(const SpecFile& spec) {
  std::map<std::string, Alphabet> alph;
  for (const auto& L : spec.alphabets) alph.emplace(L.name, Alphabet(L.symbols));
  auto find = [&](const std::string& name) -> const Alphabet& {
    auto it = alph.find(name);
    if (it == alph.end()) throw Error("unknown alphabet '" + name + "'");
    return it->second;
  };
  std::vector<Morphism> ms;
  for (const auto& m : spec.morphisms) {
    const Alphabet& dom = find(m.domain);
    const Alphabet& cod = find(m.codomain);
    std::vector<Word> imgs(dom.size());
    std::vector<bool> seen(dom.size(), false);
    for (const auto& [a, img] : m.images) {
      Letter x = dom.at(a);
      if (img.empty()) throw Error("erasing morphism: empty image for letter '" + a + "'");
      for (const auto& s : img) imgs[x].push_back(cod.at(s));
      seen[x] = true;
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) throw Error("morphism '" + m.name + "' misses an image");
    ms.emplace_back(dom, cod, std::move(imgs));
  }
  for (std::size_t i = 1; i < ms.size(); ++i)
    if (!(ms[i].codomain() == ms[i - 1].domain())) throw Error("chain mismatch at morphism " + std::to_string(i));
  switch (spec.tail) {
    case SpecFile::Tail::None:
      if (ms.empty()) throw Error("empty directive sequence");
      return DirectiveSequence::finite(std::move(ms));
    case SpecFile::Tail::Periodic:
      return DirectiveSequence::periodic(std::move(ms), spec.periodic_from);
    case SpecFile::Tail::Generator:
      return make_generated(GeneratorSpec{spec.generator, spec.params}, std::move(ms));
  }
  throw Error("unreachable tail kind");
}

DirectiveSequence parse_spec(std::string_view text) { return build_sequence(parse_spec_file(text)); }

DirectiveSequence load_spec(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_spec(ss.str());
}

}  // namespace sadic
