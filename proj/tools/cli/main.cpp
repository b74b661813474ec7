// sadic: command line front end over the core library.
// Exit codes: 0 ok, 1 a checked assertion failed, 2 usage or parse error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "sadic/asymptotics.hpp"
#include "sadic/bounds.hpp"
#include "sadic/bratteli.hpp"
#include "sadic/rauzy.hpp"
#include "sadic/specfile.hpp"
#include "sadic/suite/paper_suite.hpp"

namespace {

using namespace sadic;

struct Globals {
  std::string spec;
  std::size_t level = 0;
  LanguageOptions lang;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

DirectiveSequence load(const Globals& g) {
  if (g.spec.empty()) throw UsageError("--spec is required for this command");
  return load_spec(g.spec);
}

void write_out(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write " + path);
  f << text;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// Spec file text for a finite list of morphisms; alphabet A<i> is the domain of tau_{i-1}.
std::string finite_spec(const DirectiveSequence& seq, std::size_t count) {
  SpecFile f;
  auto letters = [&](std::size_t i, const Alphabet& a) { f.alphabets.push_back({"A" + std::to_string(i), a.symbols()}); };
  for (std::size_t i = 0; i < count; ++i) {
    const Morphism& t = seq.at(i);
    if (i == 0) letters(0, t.codomain());
    letters(i + 1, t.domain());
    SpecFile::MorphismBlock b{"tau" + std::to_string(i), "A" + std::to_string(i + 1), "A" + std::to_string(i), {}};
    for (Letter a = 0; a < t.domain().size(); ++a) {
      std::vector<std::string> img;
      for (Letter c : t.image(a)) img.push_back(t.codomain().symbol(c));
      b.images.emplace_back(t.domain().symbol(a), std::move(img));
    }
    f.morphisms.push_back(std::move(b));
  }
  return serialize_spec(f);
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& s) {
  auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      std::size_t v = std::stoul(s);
      return {v, v};
    }
    return {std::stoul(s.substr(0, dots)), std::stoul(s.substr(dots + 2))};
  } catch (const std::exception&) {
    throw UsageError("expected a level range a..b, got '" + s + "'");
  }
}

int report_exit(bool ok) { return ok ? 0 : 1; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations over S-adic subshifts and Bratteli-Vershik systems", "sadic"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--spec", g.spec, "Spec file describing the directive sequence");
  app.add_option("--level", g.level, "Level n of the language L^(n)")->capture_default_str();
  app.add_option("--seed-depth", g.lang.seed_depth, "Language seed depth beyond the expansion depth")->capture_default_str();
  app.add_option("--stability", g.lang.stability, "Consecutive agreeing seeds required")->capture_default_str();

  int status = 0;

  // complexity
  std::size_t cmax = 20;
  auto* complexity = app.add_subcommand("complexity", "CSV n,p,delta of the complexity function");
  complexity->add_option("--max", cmax, "Largest n")->capture_default_str();
  complexity->callback([&] { std::cout << complexity_csv(complexity_table(load(g), g.level, cmax, g.lang)); });

  // lang
  std::size_t llen = 5;
  auto* lang = app.add_subcommand("lang", "List the factors of one length");
  lang->add_option("--len", llen, "Word length")->capture_default_str();
  lang->callback([&] {
    DirectiveSequence s = load(g);
    LanguageTable t = compute_language(s, g.level, llen, g.lang);
    std::cout << "# level=" << g.level << " len=" << llen << " p=" << t.count(llen) << " certification=" << to_string(t.certification().status)
              << '\n';
    for (const Word& w : t.words(llen)) std::cout << format_word(w, t.alphabet()) << '\n';
  });

  // rauzy
  std::size_t rn = 3, rk = 0, rkp = 0;
  std::string rdot;
  bool rweak = false;
  auto* rauzy = app.add_subcommand("rauzy", "Rauzy graph G_n, forest lemma and deconnectability witness");
  rauzy->add_option("--n", rn, "Vertex length")->capture_default_str();
  rauzy->add_option("--dot", rdot, "Write the graph as DOT to this file ('-' for stdout)");
  rauzy->add_option("--K", rk, "Deconnectability: bound on |V'|");
  rauzy->add_option("--Kprime", rkp, "Deconnectability: path length factor");
  rauzy->add_flag("--weak", rweak, "Weak deconnectability (no forest requirement)");
  rauzy->callback([&] {
    DirectiveSequence s = load(g);
    RauzyGraph gr = build_rauzy(compute_language(s, g.level, rn + 1, g.lang), rn);
    auto rs = gr.right_special();
    ForestReport f = forest_and_border_paths(gr, rs);
    std::ostream& os = rdot == "-" ? std::cerr : std::cout;
    os << "n=" << rn << " vertices=" << gr.vertices.size() << " edges=" << gr.edges.size()
       << " strongly_connected=" << gr.strongly_connected << " right_special=" << rs.size() << '\n';
    os << "forest=" << f.is_directed_forest << " border_paths=" << f.border_paths.size() << " bound=" << f.bound
       << " bound_ok=" << f.bound_ok << '\n';
    bool ok = f.is_directed_forest && f.bound_ok;
    if (rk > 0) {
      DeconnectabilityOptions o;
      o.strong = !rweak;
      DeconnectabilityWitness w = deconnectability_witness(gr, rk, rkp, o);
      os << "witness=" << to_string(w.status) << " |V'|=" << w.vprime.size() << " longest_path=" << w.longest_path
         << " forest=" << w.forest << " complexity_inequality_ok=" << w.complexity_inequality_ok << '\n';
    }
    if (!rdot.empty()) write_out(rdot, rauzy_dot(gr, rs));
    status = report_exit(ok);
  });

  // returns
  std::vector<std::string> rwords;
  auto* returns = app.add_subcommand("returns", "Return words to a set W and the derived coding");
  returns->add_option("--w", rwords, "Members of W (comma separated)")->delimiter(',')->required();
  returns->callback([&] {
    DirectiveSequence s = load(g);
    const Alphabet& a = s.alphabet(g.level);
    std::vector<Word> ws;
    for (const auto& t : rwords) ws.push_back(parse_word(t, a));
    ReturnWords rw = return_words(s, g.level, WordSet::make(std::move(ws)));
    std::cout << "returns=" << rw.returns.size() << " stabilized=" << rw.stabilized << " scan_depth=" << rw.scan_depth << '\n';
    for (std::size_t i = 0; i < rw.returns.size(); ++i)
      std::cout << i + 1 << " = " << format_word(rw.returns.members[i], a) << '\n';
    status = report_exit(rw.stabilized);
  });

  // recognize
  std::string rlevels = "0..0";
  std::size_t rmax = 64;
  auto* recognize = app.add_subcommand("recognize", "Recognizability radius per level");
  recognize->add_option("--levels", rlevels, "Levels a..b")->capture_default_str();
  recognize->add_option("--rmax", rmax, "Largest radius tried")->capture_default_str();
  recognize->callback([&] {
    DirectiveSequence s = load(g);
    auto [lo, hi] = parse_range(rlevels);
    for (std::size_t n = lo; n <= hi; ++n) {
      RecognizabilityResult r = recognizability_radius(s, n, {rmax, g.lang});
      std::cout << "level " << n << ": " << to_string(r.status) << " R=" << r.radius;
      if (!r.note.empty()) std::cout << " (" << r.note << ')';
      std::cout << '\n';
      if (r.status == RecogStatus::Counterexample) {
        std::cout << "  window " << format_word(r.window, s.alphabet(n)) << '\n';
        if (r.witness)
          std::cout << "  centers (k=" << r.witness->first.k << ", y0=" << s.alphabet(n + 1).symbol(r.witness->first.y0)
                    << ") and (k=" << r.witness->second.k << ", y0=" << s.alphabet(n + 1).symbol(r.witness->second.y0) << ")\n";
      }
    }
  });

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Complexity bounds for morphisms read at --level");
  bounds->require_subcommand(1);
  auto run_bound = [&](auto fn) {
    return [&, fn] {
      BoundReport r = fn(load(g));
      std::cout << format_report(r);
      status = report_exit(r.all_hold);
    };
  };
  bounds->add_subcommand("two", "sigma = tau_n, tau = tau_{n+1}")
      ->callback(run_bound([&](const DirectiveSequence& s) { return verify_two_morphism(s.at(g.level + 1), s.at(g.level)); }));
  bounds->add_subcommand("three", "phi = tau_n, sigma = tau_{n+1}, tau = tau_{n+2}")
      ->callback(run_bound([&](const DirectiveSequence& s) {
        return verify_three_morphism(s.at(g.level + 2), s.at(g.level + 1), s.at(g.level));
      }));
  bounds->add_subcommand("relprops", "Relative complexity at ||sigma||, sigma = tau_n, tau = tau_{n+1}")
      ->callback(run_bound([&](const DirectiveSequence& s) { return verify_relcomp_props(s.at(g.level), s.at(g.level + 1)); }));
  std::uint64_t pmax = 200;
  auto* profiles = bounds->add_subcommand("profiles", "Growth profile CSV and D(M) domination");
  profiles->add_option("--max", pmax, "Largest n")->capture_default_str();
  profiles->callback([&] {
    ComplexityProfile p = growth_profiles(load(g), pmax);
    std::cout << profile_csv(p);
    status = report_exit(p.domination_ok);
  });
  auto* rank2 = bounds->add_subcommand("rank2", "Checks of the rank-2 superlinear construction");
  Rank2CheckOptions r2opts;
  rank2->add_option("--horizon", r2opts.horizon, "Language length for the bracket check")->capture_default_str();
  rank2->callback([&] {
    Rank2Report r = rank2_paper_checks(load(g), r2opts);
    std::size_t ok = 0;
    for (auto& p : r.prefixes) ok += p.ok;
    std::cout << "prefixes " << ok << '/' << r.prefixes.size() << '\n';
    ok = 0;
    for (auto& p : r.specials) ok += p.ok;
    std::cout << "right_special " << ok << '/' << r.specials.size() << '\n';
    ok = 0;
    for (auto& p : r.brackets) ok += p.ok;
    std::cout << "brackets " << ok << '/' << r.brackets.size() << '\n';
    ok = 0;
    for (auto& p : r.claims) ok += p.ok;
    std::cout << "claims " << ok << '/' << r.claims.size() << " used_range=" << r.claims_ok_in_used_range()
              << " ceiling=" << r.claims_ok_with_ceiling() << '\n';
    for (auto& c : r.claims)
      if (!c.ok) std::cout << "  claim m=" << c.m << " n=" << c.n << " comp=" << c.comp << " bound=" << to_string(c.bound) << '\n';
    for (auto& n : r.budget_notes) std::cout << "note " << n << '\n';
    status = report_exit(r.all_ok());
  });

  // bratteli
  std::size_t bdepth = 3, bsteps = 100, btop = 0;
  bool braw = false;
  std::string bout, bfrom;
  auto* bratteli = app.add_subcommand("bratteli", "Ordered Bratteli diagrams");
  bratteli->require_subcommand(1);
  auto* bbuild = bratteli->add_subcommand("build", "Diagram text form (or read one back with --from)");
  bbuild->add_option("--depth", bdepth, "Number of levels")->capture_default_str();
  bbuild->add_option("--out", bout, "Output file");
  bbuild->add_option("--from", bfrom, "Read a diagram text file and print its morphisms as a spec file");
  bbuild->callback([&] {
    if (!bfrom.empty()) {
      OrderedBratteliDiagram B = parse_diagram_text(read_file(bfrom));
      write_out(bout, finite_spec(read_morphisms(B), B.depth()));
      return;
    }
    write_out(bout, diagram_text(diagram_from_sequence(load(g), bdepth)));
  });
  auto* bdot = bratteli->add_subcommand("dot", "Diagram as DOT");
  bdot->add_option("--depth", bdepth, "Number of levels")->capture_default_str();
  bdot->add_option("--out", bout, "Output file");
  bdot->callback([&] { write_out(bout, diagram_dot(diagram_from_sequence(load(g), bdepth))); });
  auto* borbit = bratteli->add_subcommand("orbit", "Vershik orbit coding from a minimal path, at --level");
  auto* orbit_depth = borbit->add_option("--depth", bdepth, "Number of levels (default: tall enough for --steps)");
  borbit->add_option("--steps", bsteps, "Vershik steps")->capture_default_str();
  borbit->add_option("--top", btop, "Index of the top vertex of the minimal start path")->capture_default_str();
  borbit->add_flag("--raw", braw, "Record r(x_n) after every step");
  borbit->callback([&] {
    DirectiveSequence s = load(g);
    if (orbit_depth->count() == 0) {
      // Smallest depth whose shortest tower outlasts the walk.
      bdepth = std::max<std::size_t>(1, g.level);
      while (!(s.is_finite() && bdepth >= s.finite_length()) && s.min_len_range(0, bdepth) <= bsteps + 1) ++bdepth;
    }
    OrderedBratteliDiagram B = diagram_from_sequence(s, bdepth);
    const Alphabet& out = g.level == 0 ? B.level0_coding.codomain() : B.vertices.at(g.level);
    try {
      Word w = vershik_orbit_coding(B, g.level, min_path(B, static_cast<Letter>(btop)), bsteps,
                                    braw ? OrbitCoding::Raw : OrbitCoding::TowerEntries);
      std::cout << format_word(w, out) << '\n';
    } catch (const MaxPathReached& e) {
      std::cout << format_word(e.partial, out) << '\n';
      std::cerr << "maximal path reached after " << e.completed_steps << " steps\n";
      status = 1;
    }
  });

  // asymptotic
  std::size_t adepth = 30;
  auto* asym = app.add_subcommand("asymptotic", "Right-special chains and divergence letters");
  asym->add_option("--depth", adepth, "Chain depth")->capture_default_str();
  asym->callback([&] {
    DirectiveSequence s = load(g);
    ChainOptions o;
    o.language = g.lang;
    AsymptoticReport r = asymptotic_report(s, adepth, o);
    std::cout << format_asymptotic(r, s.alphabet(0));
    status = report_exit(r.two_letter_bound_ok.value_or(true) && r.chains.linking_ok);
  });

  // gen
  Rank2Params gp;
  std::string gout;
  auto* gen = app.add_subcommand("gen", "Write spec files for built-in families");
  gen->require_subcommand(1);
  auto* grank2 = gen->add_subcommand("rank2", "The rank-2 superlinear-complexity sequence");
  grank2->add_option("--a0", gp.a0, "First exponent")->capture_default_str();
  grank2->add_option("--margin", gp.margin, "Added to each later exponent")->capture_default_str();
  grank2->add_option("--out", gout, "Output file");
  grank2->callback([&] {
    SpecFile f;
    f.tail = SpecFile::Tail::Generator;
    f.generator = "rank2_superlinear";
    f.params = {{"a0", std::to_string(gp.a0)}, {"margin", std::to_string(gp.margin)}};
    std::string text = serialize_spec(f);
    parse_spec(text).at(0);  // validates the parameters
    write_out(gout, text);
  });

  // verify
  suite::SuiteOptions sopts;
  sopts.data_dir = SADIC_DATA_DIR;
  bool verbose = false;
  auto* verify = app.add_subcommand("verify", "Acceptance checks");
  verify->require_subcommand(1);
  auto* ps = verify->add_subcommand("paper-suite", "Run every acceptance criterion");
  ps->add_option("--data", sopts.data_dir, "Directory with the bundled spec files")->capture_default_str();
  ps->add_option("--only", sopts.only, "Criterion numbers to run")->delimiter(',');
  ps->add_flag("-v,--verbose", verbose, "Print every check");
  ps->callback([&] {
    bool all = true;
    suite::run_paper_suite(sopts, [&](const suite::CriterionResult& r) {
      std::cout << suite::summary_line(r) << '\n';
      if (verbose || !r.passed())
        for (const auto& d : r.details) std::cout << "    " << d << '\n';
      std::cout.flush();
      all = all && r.passed();
    });
    status = report_exit(all);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    if (e.get_exit_code() != 0) std::cerr << app.help();
    return e.get_exit_code() == 0 ? 0 : 2;
  } catch (const SpecError& e) {
    std::cerr << "sadic: " << g.spec << ": " << e.what() << '\n';
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "sadic: " << e.what() << '\n';
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "sadic: precondition: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "sadic: " << e.what() << '\n';
    return 1;
  }
  return status;
}
