#include "sadic/suite/paper_suite.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "sadic/asymptotics.hpp"
#include "sadic/bounds.hpp"
#include "sadic/bratteli.hpp"
#include "sadic/rauzy.hpp"
#include "sadic/suite/corpus.hpp"
#include "sadic/suite/oracles.hpp"

namespace sadic::suite {

namespace {

struct Outcome {
  bool ok = true;
  std::vector<std::string> details;

  void check(bool cond, const std::string& what) {
    if (!cond) ok = false;
    details.push_back(std::string(cond ? "ok   " : "FAIL ") + what);
  }
  void note(const std::string& what) { details.push_back("note " + what); }
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

using Examples = std::map<std::string, DirectiveSequence>;

Examples load(const std::string& dir) {
  Examples ex;
  for (auto& e : corpus::bundled_examples(dir)) ex.emplace(e.name, std::move(e.seq));
  return ex;
}

std::set<Word> as_set(std::vector<Word> v) { return {std::make_move_iterator(v.begin()), std::make_move_iterator(v.end())}; }

// ---------------------------------------------------------------------------

Outcome language_oracle(const Examples& ex) {
  Outcome o;
  for (const char* name : {"fibonacci", "thue_morse", "rank2"}) {
    const DirectiveSequence& s = ex.at(name);
    LanguageTable t = compute_language(s, 0, 12);
    auto ref = oracle::shorter_factors(oracle::stream_language(s, 0, 12), 12);
    std::size_t bad = 0;
    for (std::size_t l = 1; l <= 12; ++l)
      if (as_set(t.words(l)) != ref[l]) ++bad;
    o.check(bad == 0, fmt("%s: L_1..L_12 equal the streamed factor sets (p(12)=%zu)", name, ref[12].size()));
  }
  return o;
}

Outcome complexity_values(const Examples& ex) {
  Outcome o;
  auto p = compute_language(ex.at("fibonacci"), 0, 60).counts();
  bool fib = true;
  for (std::size_t n = 1; n <= 60; ++n) fib = fib && p[n] == n + 1;
  o.check(fib, "fibonacci: p(n) = n+1 for n <= 60");
  auto q = compute_language(ex.at("thue_morse"), 0, 5).counts();
  o.check(std::vector<std::uint64_t>(q.begin() + 1, q.end()) == std::vector<std::uint64_t>{2, 4, 6, 10, 12},
          fmt("thue_morse: p(1..5) = %llu,%llu,%llu,%llu,%llu", (unsigned long long)q[1], (unsigned long long)q[2],
              (unsigned long long)q[3], (unsigned long long)q[4], (unsigned long long)q[5]));
  return o;
}

Outcome rank2_example(const Examples& ex) {
  Outcome o;
  const DirectiveSequence& s = ex.at("rank2");
  Rank2CheckOptions opts;
  auto p = compute_language(s, 0, opts.horizon + 1).counts();
  std::uint64_t maxd = 0;
  std::size_t first_drop = 0;
  for (std::size_t n = 1; n + 1 < p.size(); ++n) {
    std::uint64_t d = p[n + 1] - p[n];
    maxd = std::max(maxd, d);
    if (n > 1 && d < p[n] - p[n - 1] && first_drop == 0) first_drop = n;
  }
  o.check(first_drop == 0 && maxd >= 6,
          first_drop == 0 ? fmt("first differences non-decreasing up to n=%zu, max %llu", opts.horizon, (unsigned long long)maxd)
                          : fmt("first differences drop at n=%zu (%llu -> %llu); max %llu within n <= %zu", first_drop,
                                (unsigned long long)(p[first_drop] - p[first_drop - 1]),
                                (unsigned long long)(p[first_drop + 1] - p[first_drop]), (unsigned long long)maxd, opts.horizon));

  Rank2Report r = rank2_paper_checks(s, opts);
  bool pre = std::all_of(r.prefixes.begin(), r.prefixes.end(), [](auto& x) { return x.ok; });
  o.check(pre, fmt("image prefixes of length C_n+1 match for n=1..%zu", opts.depth));
  std::size_t sp_ok = std::count_if(r.specials.begin(), r.specials.end(), [](auto& x) { return x.ok; });
  o.check(sp_ok == r.specials.size() && !r.specials.empty(), fmt("W_n(k) right special: %zu/%zu (n<=2, k<=4)", sp_ok, r.specials.size()));
  std::size_t br_ok = std::count_if(r.brackets.begin(), r.brackets.end(), [](auto& x) { return x.ok; });
  o.check(br_ok == r.brackets.size() && !r.brackets.empty(),
          fmt("right-special counts meet min(k, A_n/2B_n): %zu/%zu brackets up to N=%zu", br_ok, r.brackets.size(), opts.horizon));
  std::size_t cl_ok = std::count_if(r.claims.begin(), r.claims.end(), [](auto& x) { return x.ok; });
  std::string first_bad;
  for (auto& c : r.claims)
    if (!c.ok) {
      first_bad = fmt(" (first: m=%zu n=%llu comp=%llu > %s)", c.m, (unsigned long long)c.n, (unsigned long long)c.comp,
                      to_string(c.bound).c_str());
      break;
    }
  o.check(cl_ok == r.claims.size(), fmt("comp2 <= 6n/B_m: %zu/%zu rows%s", cl_ok, r.claims.size(), first_bad.c_str()));
  o.note(fmt("comp2 <= 6n/B_m on n >= B_m: %s; comp2 <= 6 ceil(n/B_m) everywhere: %s",
             r.claims_ok_in_used_range() ? "holds" : "fails", r.claims_ok_with_ceiling() ? "holds" : "fails"));
  for (auto& n : r.budget_notes) o.note(n);
  return o;
}

Outcome bound_verifiers() {
  Outcome o;
  auto inst = corpus::bound_instances(200);
  std::size_t two = 0, three = 0, props = 0, ceil_ok = 0, rows = 0;
  std::string first_two, first_three, first_props;
  for (const auto& c : inst) {
    BoundReport a = verify_two_morphism(c.tau, c.sigma);
    BoundReport b = verify_three_morphism(c.tau, c.sigma, c.phi);
    BoundReport r = verify_relcomp_props(c.sigma, c.tau);
    rows += a.rows.size() + b.rows.size() + r.rows.size();
    two += a.all_hold;
    three += b.all_hold;
    props += r.all_hold;
    bool ceil_row = std::all_of(r.rows.begin(), r.rows.end(), [](const BoundRow& x) { return !x.informational || x.ok; });
    ceil_ok += ceil_row;
    auto first = [](const BoundReport& rep, std::string& slot) {
      if (!rep.all_hold && slot.empty() && rep.counterexample)
        slot = fmt(" (first: n=%llu %s lhs=%s rhs=%s)", (unsigned long long)rep.counterexample->n, rep.counterexample->label.c_str(),
                   to_string(rep.counterexample->lhs).c_str(), rep.counterexample->rhs.c_str());
    };
    first(a, first_two);
    first(b, first_three);
    first(r, first_props);
  }
  o.check(two == inst.size(), fmt("two-morphism bound holds on %zu/%zu instances%s", two, inst.size(), first_two.c_str()));
  o.check(three == inst.size(), fmt("three-morphism bound holds on %zu/%zu instances%s", three, inst.size(), first_three.c_str()));
  o.check(props == inst.size(), fmt("relative-complexity properties hold on %zu/%zu instances%s", props, inst.size(), first_props.c_str()));
  o.note(fmt("two-letter bound with ceil(||sigma||/<sigma>) + 1 holds on %zu/%zu instances; %zu rows checked", ceil_ok,
             inst.size(), rows));
  return o;
}

Outcome dm_domination_check() {
  Outcome o;
  auto seqs = corpus::proper_sequences(200, 11);
  std::size_t good = 0, levels = 0;
  for (const auto& s : seqs) {
    auto rows = dm_domination(s, 11);
    levels += rows.size();
    good += rows.size() == 11 && std::all_of(rows.begin(), rows.end(), [](const DomRow& r) { return r.ok; });
  }
  o.check(good == seqs.size(), fmt("||tau_[0,n]|| / <tau_[0,n]> <= D(M_n) for n <= 10: %zu/%zu sequences (%zu levels)", good,
                                   seqs.size(), levels));
  return o;
}

Outcome rauzy_forest(const Examples& ex) {
  Outcome o;
  for (const auto& [name, s] : ex) {
    std::size_t good = 0;
    LanguageTable t = compute_language(s, 0, 15);
    for (std::size_t n = 1; n <= 14; ++n) {
      RauzyGraph g = build_rauzy(t, n);
      ForestReport f = forest_and_border_paths(g, g.right_special());
      good += f.is_directed_forest && f.bound_ok;
    }
    o.check(good == 14, fmt("%s: complement of the right-special set is a forest within the border-path bound, %zu/14", name.c_str(), good));
  }
  return o;
}

Outcome disjoint_factorizations(const Examples& ex) {
  Outcome o;
  const std::size_t lens[] = {8, 16, 32, 64, 128, 256, 400};
  for (const auto& [name, s] : ex) {
    WordSet W = WordSet::make(s.compose_range(0, 3).images());
    LanguageTable t = compute_language(s, 0, 400);
    std::size_t windows = 0, worst = 0;
    bool ok = true;
    for (std::size_t L : lens)
      for (const Word& w : t.words(L)) {
        ++windows;
        FactorizationReport r = enumerate_window_factorizations(w, W);
        worst = std::max(worst, r.disjoint_phase_count);
        if (r.truncated || !r.disjoint_exact || r.disjoint_phase_count > W.size()) ok = false;
      }
    o.check(ok, fmt("%s: disjoint factorizations <= |W| = %zu on %zu windows (max %zu)", name.c_str(), W.size(), windows, worst));
  }
  return o;
}

// tau_0 split as psi o sigma, so level 1 is the hat part.
DirectiveSequence split_first(const DirectiveSequence& s) {
  Decomposition d = decompose_recognizable(s.at(0));
  auto fn = [s, d](std::size_t n, const DirectiveSequence&) -> Morphism {
    if (n == 0) return d.psi;
    if (n == 1) return d.sigma;
    return s.at(n - 1);
  };
  return DirectiveSequence::generated({}, GeneratorSpec{"split_first", {}}, fn);
}

Outcome recognizability(const Examples& ex) {
  Outcome o;
  auto tm = recognizability_radius(ex.at("thue_morse"), 0);
  o.check(tm.status == RecogStatus::Certified && tm.radius <= 16, fmt("thue_morse: %s(R=%zu), R <= 16", to_string(tm.status), tm.radius));
  for (const char* name : {"fibonacci", "thue_morse", "rank2"}) {
    auto r = recognizability_radius(split_first(ex.at(name)), 1);
    o.check(r.status == RecogStatus::Certified && r.radius == 1, fmt("%s hat level: %s(R=%zu)", name, to_string(r.status), r.radius));
  }
  for (std::size_t n = 0; n <= 3; ++n) {
    auto r = recognizability_radius(ex.at("rank2"), n, {64, {}});
    o.check(r.status == RecogStatus::Certified,
            fmt("rank2 level %zu: %s(R=%zu)%s%s", n, to_string(r.status), r.radius, r.note.empty() ? "" : ": ", r.note.c_str()));
  }
  return o;
}

Outcome return_word_check(const Examples& ex) {
  Outcome o;
  const DirectiveSequence& fib = ex.at("fibonacci");
  ReturnWords rw = return_words(fib, 0, WordSet::make({Word{0}}));
  o.check(rw.returns.members == std::vector<Word>{Word{0}, Word{0, 1}} && rw.stabilized,
          fmt("fibonacci W={0}: %zu return words, stabilized=%d", rw.returns.size(), (int)rw.stabilized));
  std::mt19937_64 rng(corpus::kSeed);
  auto windows = compute_language(fib, 0, 64).words(64);
  std::size_t good = 0;
  for (int i = 0; i < 50; ++i) {
    const Word& w = windows[rng() % windows.size()];
    auto occ = occurrences(w, rw.W);
    Word back = rw.coding.apply(derive_window(w, rw));
    good += std::equal(back.begin(), back.end(), w.begin() + static_cast<std::ptrdiff_t>(occ.front()),
                       w.begin() + static_cast<std::ptrdiff_t>(occ.back())) &&
            back.size() == occ.back() - occ.front();
  }
  o.check(good == 50, fmt("derive then apply gives back the window between its first and last occurrence: %zu/50", good));
  return o;
}

Outcome bratteli_roundtrips(const Examples& ex) {
  Outcome o;
  const DirectiveSequence& r2 = ex.at("rank2");
  auto B = diagram_from_sequence(r2, 4);
  auto back = read_morphisms(B);
  bool same = back.finite_length() == 4;
  for (std::size_t i = 0; i < 4 && same; ++i) same = back.at(i) == r2.at(i);
  o.check(same, "rank2 depth 4: morphisms read on the diagram equal the input");

  auto B3 = diagram_from_sequence(r2, 3);
  bool tele = true;
  for (const std::vector<std::size_t>& cuts : {std::vector<std::size_t>{0, 2, 3}, {0, 1, 3}, {0, 3}}) {
    auto T = read_morphisms(telescope_diagram(B3, cuts));
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) tele = tele && T.at(k) == r2.compose_range(cuts[k], cuts[k + 1]);
  }
  o.check(tele, "telescoping the diagram commutes with composition (cuts 0,2,3 / 0,1,3 / 0,3)");

  for (const char* name : {"rank2", "fibonacci_proper"}) {
    const DirectiveSequence& s = ex.at(name);
    std::size_t depth = 1;
    while (s.min_len_range(0, depth) <= 501) ++depth;  // every tower is taller than the orbit
    auto D = diagram_from_sequence(s, depth);
    for (std::size_t level : {0, 1}) {
      Word w = vershik_orbit_coding(D, level, min_path(D, 0), 500);
      LanguageTable t = compute_language(s, level, 8);
      std::size_t bad = 0, total = 0;
      for (std::size_t l = 1; l <= 8; ++l)
        for (std::size_t i = 0; i + l <= w.size(); ++i, ++total)
          if (!t.contains(WordView(w).subspan(i, l))) ++bad;
      o.check(bad == 0 && w.size() >= 8,
              fmt("%s level %zu: orbit coding over 500 steps (%zu letters), %zu factors of length <= 8 in L", name, level, w.size(), total));
    }
  }
  return o;
}

Outcome asymptotics_check(const Examples& ex) {
  Outcome o;
  const std::pair<const char*, std::size_t> expect[] = {{"thue_morse", 2}, {"fibonacci", 1}, {"rank2", 1}};
  for (auto [name, want] : expect) {
    AsymptoticReport r = asymptotic_report(ex.at(name), 30);
    o.check(r.chains.chains.size() == want && r.two_letter_bound_ok.value_or(false) && r.chains.linking_ok,
            fmt("%s: %zu persistent chains at depth 30 (expected %zu)", name, r.chains.chains.size(), want));
  }
  std::mt19937_64 rng(corpus::kSeed + 11);
  std::size_t good = 0, drawn = 0;
  while (good + (drawn - good) < 100) {
    Word A(1 + rng() % 8), B(1 + rng() % 8);
    for (auto& c : A) c = static_cast<Letter>(rng() % 2);
    for (auto& c : B) c = static_cast<Letter>(rng() % 2);
    Word ab = A, ba = B;
    ab.insert(ab.end(), B.begin(), B.end());
    ba.insert(ba.end(), A.begin(), A.end());
    if (ab == ba) continue;  // powers of one word never diverge
    ++drawn;
    Word u = divergence_word(A, B);
    good += u.size() < A.size() + B.size() && divergence_holds(A, B, u);
  }
  o.check(good == drawn, fmt("divergence word verified exhaustively on %zu/%zu random pairs", good, drawn));
  return o;
}

Outcome tower_partition(const Examples& ex) {
  Outcome o;
  auto run = [&](const char* name, std::size_t cut) {
    const DirectiveSequence& s = ex.at(name);
    TowerReport r = verify_tower_partition(TowerPartitionSpec::from_images(s, cut), s, 200);
    o.check(r.ok, fmt("%s towers tau_[0,%zu)(A): %llu windows, %llu positions, ambiguous %llu, uncovered %llu (R=%zu)", name, cut,
                      (unsigned long long)r.windows, (unsigned long long)r.positions, (unsigned long long)r.ambiguous,
                      (unsigned long long)r.uncovered, r.radius));
  };
  run("thue_morse", 3);
  run("rank2", 1);
  run("rank2", 2);
  return o;
}

struct Criterion {
  int id;
  const char* title;
  double limit;
  std::function<Outcome(const Examples&)> fn;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> c{
      {1, "language equals brute-force factors (lengths <= 12)", 10, language_oracle},
      {2, "complexity values of Fibonacci and Thue-Morse", 5, complexity_values},
      {3, "rank-2 example: differences, right specials, brackets, comp2 claim", 60, rank2_example},
      {4, "bound verifiers over the random corpus", 120, [](const Examples&) { return bound_verifiers(); }},
      {5, "D(M) domination over proper sequences", 10, [](const Examples&) { return dm_domination_check(); }},
      {6, "Rauzy forest lemma for n <= 14", 30, rauzy_forest},
      {7, "disjoint factorizations at most |W|", 30, disjoint_factorizations},
      {8, "recognizability radii", 120, recognizability},
      {9, "return words and derivation roundtrip", 10, return_word_check},
      {10, "Bratteli roundtrips and orbit coding", 30, bratteli_roundtrips},
      {11, "asymptotic chains and divergence words", 60, asymptotics_check},
      {12, "tower partitions", 30, tower_partition},
  };
  return c;
}

}  // namespace

int criterion_count() { return static_cast<int>(criteria().size()); }

std::vector<CriterionResult> run_paper_suite(const SuiteOptions& opts, const std::function<void(const CriterionResult&)>& on_result) {
  Examples ex = load(opts.data_dir);
  std::vector<CriterionResult> out;
  for (const Criterion& c : criteria()) {
    if (!opts.only.empty() && std::find(opts.only.begin(), opts.only.end(), c.id) == opts.only.end()) continue;
    CriterionResult r;
    r.id = c.id;
    r.title = c.title;
    r.limit = c.limit;
    auto t0 = std::chrono::steady_clock::now();
    try {
      Outcome o = c.fn(ex);
      r.checks_passed = o.ok;
      r.details = std::move(o.details);
    } catch (const std::exception& e) {
      r.checks_passed = false;
      r.details.push_back(std::string("FAIL exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (r.seconds > r.limit) r.details.push_back(fmt("FAIL time %.2fs exceeds %.0fs", r.seconds, r.limit));
    if (on_result) on_result(r);
    out.push_back(std::move(r));
  }
  return out;
}

std::string summary_line(const CriterionResult& r) {
  return fmt("AC%-2d %s %s [%.2fs/%.0fs]", r.id, r.passed() ? "PASS" : "FAIL", r.title.c_str(), r.seconds, r.limit);
}

}  // namespace sadic::suite
