#include "sadic/words.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace sadic {

std::uint64_t saturate_u64(const BigInt& v) {
  static const BigInt cap = BigInt(1) << 62;
  if (v <= 0) return 0;
  if (v >= cap) return std::uint64_t{1} << 62;
  return static_cast<std::uint64_t>(v);
}

std::string to_string(const BigInt& v) { return v.str(); }

std::string to_string(const Rational& v) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(v);
  if (boost::multiprecision::denominator(v) != 1) os << '/' << boost::multiprecision::denominator(v);
  return os.str();
}

std::size_t WordHash::operator()(WordView w) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ w.size();
  for (Letter c : w) {
    h ^= c + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 33));
}

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw Error("alphabet must be non-empty");
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    const std::string& s = symbols_[i];
    if (s.empty()) throw Error("empty letter token");
    for (char ch : s)
      if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') throw Error("letter token '" + s + "' contains whitespace");
    if (!index_.emplace(s, static_cast<Letter>(i)).second) throw Error("duplicate letter '" + s + "'");
    if (s.size() != 1) single_char_ = false;
  }
}

Alphabet Alphabet::numbered(std::size_t n) {
  std::vector<std::string> s;
  s.reserve(n);
  for (std::size_t i = 0; i < n; ++i) s.push_back(std::to_string(i));
  return Alphabet(std::move(s));
}

std::optional<Letter> Alphabet::find(std::string_view token) const {
  auto it = index_.find(std::string(token));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Letter Alphabet::at(std::string_view token) const {
  if (auto l = find(token)) return *l;
  throw Error("unknown letter '" + std::string(token) + "'");
}

std::string format_word(WordView w, const Alphabet& alphabet) {
  std::string out;
  bool glue = alphabet.single_char();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!glue && i) out += ' ';
    out += alphabet.symbol(w[i]);
  }
  return out;
}

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  Word w;
  bool has_space = text.find_first_of(" \t") != std::string_view::npos;
  if (!has_space && alphabet.single_char()) {
    for (char ch : text) w.push_back(alphabet.at(std::string_view(&ch, 1)));
    return w;
  }
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < text.size() && text[j] != ' ' && text[j] != '\t') ++j;
    if (j > i) w.push_back(alphabet.at(text.substr(i, j - i)));
    i = j;
  }
  return w;
}

BigInt IncidenceMatrix::column_sum(std::size_t a) const {
  BigInt s = 0;
  for (std::size_t b = 0; b < rows_; ++b) s += at(b, a);
  return s;
}

bool IncidenceMatrix::positive() const {
  return std::all_of(m_.begin(), m_.end(), [](const BigInt& x) { return x > 0; });
}

IncidenceMatrix IncidenceMatrix::operator*(const IncidenceMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw Error("incidence dimension mismatch");
  IncidenceMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const BigInt& x = at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        if (rhs.at(k, j) != 0) out.at(i, j) += x * rhs.at(k, j);
    }
  return out;
}

SupportMatrix::SupportMatrix(const IncidenceMatrix& m) : SupportMatrix(m.rows(), m.cols()) {
  for (std::size_t b = 0; b < rows_; ++b)
    for (std::size_t a = 0; a < cols_; ++a) m_[b * cols_ + a] = m.at(b, a) > 0;
}

bool SupportMatrix::positive() const {
  return std::all_of(m_.begin(), m_.end(), [](std::uint8_t x) { return x != 0; });
}

SupportMatrix SupportMatrix::operator*(const SupportMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw Error("incidence dimension mismatch");
  SupportMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k)
      if (at(i, k))
        for (std::size_t j = 0; j < rhs.cols_; ++j)
          if (rhs.at(k, j)) out.m_[i * rhs.cols_ + j] = 1;
  return out;
}

const char* to_string(Tri t) {
  switch (t) {
    case Tri::False: return "false";
    case Tri::True: return "true";
    default: return "undetermined";
  }
}

Morphism::Morphism(Alphabet domain, Alphabet codomain, std::vector<Word> images)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images)) {
  if (images_.size() != domain_.size()) throw Error("morphism needs exactly one image per domain letter");
  for (std::size_t a = 0; a < images_.size(); ++a) {
    if (images_[a].empty()) throw Error("erasing morphism: image of '" + domain_.symbol(static_cast<Letter>(a)) + "' is empty");
    for (Letter c : images_[a])
      if (c >= codomain_.size()) throw Error("image letter outside the codomain");
  }
  finish_profile_from_images();
  finish_lengths();
}

Morphism Morphism::from_profile(Alphabet domain, Alphabet codomain, Profile profile) {
  Morphism m;
  m.domain_ = std::move(domain);
  m.codomain_ = std::move(codomain);
  m.profile_ = std::move(profile);
  if (m.profile_.incidence.cols() != m.domain_.size() || m.profile_.incidence.rows() != m.codomain_.size())
    throw Error("profile incidence has the wrong shape");
  m.finish_lengths();
  for (const BigInt& l : m.lengths_)
    if (l == 0) throw Error("erasing morphism in profile");
  return m;
}

Morphism Morphism::identity(const Alphabet& alphabet) {
  std::vector<Word> imgs(alphabet.size());
  for (std::size_t a = 0; a < imgs.size(); ++a) imgs[a] = {static_cast<Letter>(a)};
  return Morphism(alphabet, alphabet, std::move(imgs));
}

void Morphism::finish_profile_from_images() {
  const std::size_t na = domain_.size(), nb = codomain_.size();
  profile_.incidence = IncidenceMatrix(nb, na);
  profile_.first.assign(na, 0);
  profile_.last.assign(na, 0);
  profile_.pairs.assign(na, {});
  for (std::size_t a = 0; a < na; ++a) {
    const Word& w = images_[a];
    std::vector<std::uint64_t> cnt(nb, 0);
    for (Letter c : w) ++cnt[c];
    for (std::size_t b = 0; b < nb; ++b) profile_.incidence.at(b, a) = cnt[b];
    profile_.first[a] = w.front();
    profile_.last[a] = w.back();
    std::map<std::pair<Letter, Letter>, std::uint64_t> pc;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) ++pc[{w[i], w[i + 1]}];
    for (auto& [k, v] : pc) profile_.pairs[a].emplace_back(k, BigInt(v));
  }
}

void Morphism::finish_lengths() {
  lengths_.resize(domain_.size());
  for (std::size_t a = 0; a < domain_.size(); ++a) lengths_[a] = profile_.incidence.column_sum(a);
}

const Word& Morphism::image(Letter a) const {
  if (!has_images()) throw Error("morphism images are too long to materialize");
  return images_.at(a);
}

const std::vector<Word>& Morphism::images() const {
  if (!has_images()) throw Error("morphism images are too long to materialize");
  return images_;
}

BigInt Morphism::runs(Letter a) const {
  BigInt r = lengths_.at(a);
  for (const auto& [p, c] : profile_.pairs.at(a))
    if (p.first == p.second) r -= c;
  return r;
}

RunImage Morphism::run_image(Letter a) const {
  if (has_images()) {
    RunImage r;
    for (Letter c : images_.at(a)) {
      if (!r.empty() && r.back().first == c) ++r.back().second;
      else r.emplace_back(c, 1);
    }
    return r;
  }
  if (profile_.run_images.empty()) throw Error("morphism has neither images nor run-length images");
  return profile_.run_images.at(a);
}

BigInt Morphism::total_length() const {
  BigInt s = 0;
  for (const BigInt& l : lengths_) s += l;
  return s;
}

Word Morphism::apply(WordView w) const {
  Word out;
  std::size_t n = 0;
  for (Letter a : w) n += image(a).size();
  out.reserve(n);
  for (Letter a : w) {
    const Word& im = images_[a];
    out.insert(out.end(), im.begin(), im.end());
  }
  return out;
}

bool Morphism::operator==(const Morphism& o) const {
  if (!(domain_ == o.domain_) || !(codomain_ == o.codomain_)) return false;
  if (has_images() && o.has_images()) return images_ == o.images_;
  return profile_.incidence == o.profile_.incidence && profile_.first == o.profile_.first &&
         profile_.last == o.profile_.last && profile_.pairs == o.profile_.pairs;
}

Morphism compose(const Morphism& outer, const Morphism& inner) {
  if (!(inner.codomain() == outer.domain())) throw Error("compose: alphabet mismatch");
  IncidenceMatrix inc = outer.incidence() * inner.incidence();
  BigInt total = 0;
  for (std::size_t a = 0; a < inc.cols(); ++a) total += inc.column_sum(a);
  if (outer.has_images() && inner.has_images() && total <= kExplicitLetterBudget) {
    std::vector<Word> imgs(inner.domain().size());
    for (std::size_t a = 0; a < imgs.size(); ++a) imgs[a] = outer.apply(inner.image(static_cast<Letter>(a)));
    return Morphism(inner.domain(), outer.codomain(), std::move(imgs));
  }
  Morphism::Profile p;
  p.incidence = std::move(inc);
  const std::size_t na = inner.domain().size();
  p.first.resize(na);
  p.last.resize(na);
  p.pairs.resize(na);
  for (std::size_t a = 0; a < na; ++a) {
    Letter la = static_cast<Letter>(a);
    p.first[a] = outer.first(inner.first(la));
    p.last[a] = outer.last(inner.last(la));
    std::map<std::pair<Letter, Letter>, BigInt> acc;
    for (std::size_t c = 0; c < inner.codomain().size(); ++c) {
      const BigInt& k = inner.incidence().at(c, a);
      if (k == 0) continue;
      for (const auto& [pr, cnt] : outer.pair_counts(static_cast<Letter>(c))) acc[pr] += k * cnt;
    }
    for (const auto& [pr, cnt] : inner.pair_counts(la)) acc[{outer.last(pr.first), outer.first(pr.second)}] += cnt;
    for (auto& [k, v] : acc) p.pairs[a].emplace_back(k, std::move(v));
  }
  return Morphism::from_profile(inner.domain(), outer.codomain(), std::move(p));
}

std::optional<Rational> d_ratio(const IncidenceMatrix& m) {
  if (!m.positive() || m.rows() == 0 || m.cols() == 0) return std::nullopt;
  Rational best = 0;
  for (std::size_t b = 0; b < m.rows(); ++b) {
    BigInt mx = m.at(b, 0), mn = m.at(b, 0);
    for (std::size_t a = 1; a < m.cols(); ++a) {
      mx = std::max(mx, m.at(b, a));
      mn = std::min(mn, m.at(b, a));
    }
    Rational r(mx, mn);
    if (r > best) best = r;
  }
  return best;
}

MorphismMetrics morphism_metrics(const Morphism& tau) {
  MorphismMetrics m;
  m.norm = 0;
  m.min_len = -1;
  m.r_comp = 0;
  for (std::size_t a = 0; a < tau.domain().size(); ++a) {
    const BigInt& l = tau.length(static_cast<Letter>(a));
    if (l > m.norm) m.norm = l;
    if (m.min_len < 0 || l < m.min_len) m.min_len = l;
    m.r_comp += tau.runs(static_cast<Letter>(a));
  }
  m.d_ratio = d_ratio(tau.incidence());
  return m;
}

MorphismFlags classify(const Morphism& tau) {
  MorphismFlags f;
  const std::size_t na = tau.domain().size();
  f.proper = true;
  for (std::size_t a = 1; a < na; ++a)
    if (tau.first(static_cast<Letter>(a)) != tau.first(0) || tau.last(static_cast<Letter>(a)) != tau.last(0)) f.proper = false;
  f.positive = tau.incidence().positive();
  // Hat: every codomain letter occurs at most once over all images.
  f.hat = true;
  const IncidenceMatrix& m = tau.incidence();
  for (std::size_t b = 0; b < m.rows() && f.hat; ++b) {
    BigInt s = 0;
    for (std::size_t a = 0; a < na; ++a) s += m.at(b, a);
    if (s > 1) f.hat = false;
  }
  // Left to right: some ordering b_1..b_k of B with tau(a) = b_1^+ ... b_k^+ for every a.
  // Each image then has exactly one block per codomain letter and all images share the
  // block sequence, which we test directly instead of enumerating orderings.
  if (!tau.has_images()) {
    f.left_to_right = Tri::Undetermined;
  } else {
    std::vector<Letter> order;
    bool ok = true;
    for (std::size_t a = 0; a < na && ok; ++a) {
      const Word& w = tau.image(static_cast<Letter>(a));
      std::vector<Letter> blocks;
      for (std::size_t i = 0; i < w.size(); ++i)
        if (i == 0 || w[i] != w[i - 1]) blocks.push_back(w[i]);
      if (blocks.size() != tau.codomain().size()) ok = false;
      if (a == 0) order = blocks;
      else if (blocks != order) ok = false;
    }
    if (ok) {
      std::vector<Letter> s = order;
      std::sort(s.begin(), s.end());
      ok = std::adjacent_find(s.begin(), s.end()) == s.end();
    }
    f.left_to_right = ok ? Tri::True : Tri::False;
  }
  return f;
}

Decomposition decompose_recognizable(const Morphism& tau) {
  const Alphabet& dom = tau.domain();
  std::vector<std::string> names;
  std::vector<Letter> psi_img;
  std::vector<Word> sigma_imgs(dom.size());
  for (std::size_t a = 0; a < dom.size(); ++a) {
    const Word& w = tau.image(static_cast<Letter>(a));
    for (std::size_t i = 0; i < w.size(); ++i) {
      sigma_imgs[a].push_back(static_cast<Letter>(names.size()));
      names.push_back("(" + std::to_string(i + 1) + "," + dom.symbol(static_cast<Letter>(a)) + ")");
      psi_img.push_back(w[i]);
    }
  }
  Alphabet mid(names);
  std::vector<Word> psi_imgs(mid.size());
  for (std::size_t e = 0; e < mid.size(); ++e) psi_imgs[e] = {psi_img[e]};
  return {Morphism(dom, mid, std::move(sigma_imgs)), Morphism(mid, tau.codomain(), std::move(psi_imgs))};
}

}  // namespace sadic
