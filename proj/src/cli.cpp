#include "pcanon/cli.hpp"

#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "pcanon/diagram.hpp"
#include "pcanon/error.hpp"
#include "pcanon/io.hpp"
#include "pcanon/patterns.hpp"
#include "pcanon/realization.hpp"
#include "pcanon/recursion.hpp"
#include "pcanon/verify.hpp"

namespace pcanon {

namespace {

struct Session {
  std::string type = "A1";
  std::string cartan;
  std::vector<std::int64_t> norms;
  std::int64_t p = 3;
  std::vector<std::string> words;
  std::size_t maxlen = 4;
  unsigned seed = 1;
  std::string format = "json";
  std::string out_path;
  std::size_t bruhat_cap = 16;

  bool type_given = false;
  bool cartan_given = false;
  bool p_given = false;
};

class Context {
 public:
  Context(Session& s, std::ostream& out, std::ostream& err) : s_(s), out_(out), err_(err) {}

  GroupPtr group(const std::string& fallback_type = "") {
    if (group_) return group_;
    RootDatumSpec spec;
    if (s_.cartan_given) {
      nlohmann::json j{{"cartan", nlohmann::json::parse(s_.cartan)}};
      if (!s_.norms.empty()) j["norms"] = s_.norms;
      spec = root_datum_spec_from_json(j);
    } else if (!s_.type_given && !fallback_type.empty()) {
      spec = RootDatumSpec::of_type(fallback_type);
    } else {
      spec = RootDatumSpec::of_type(s_.type);
    }
    auto g = std::make_shared<AffineWeylGroup>(build_root_datum(spec));
    g->set_bruhat_cap(s_.bruhat_cap);
    group_ = g;
    return group_;
  }

  std::int64_t p() {
    if (s_.p < 2) throw InvalidInput("p must be at least 2");
    if (s_.p == 2 && !warned_) {
      err_ << "warning: p = 2 is outside the range of the categorical results; the algebra computations still apply\n";
      warned_ = true;
    }
    return s_.p;
  }

  TablePtr table(const std::string& fallback_type = "") {
    if (!table_) table_ = CosetTable::create(group(fallback_type), p());
    return table_;
  }

  AffineWeylElement word_element(std::size_t i) {
    if (i >= s_.words.size()) throw InvalidInput("missing --word argument");
    return group()->from_word(parse_word(s_.words[i]));
  }

  Word word(std::size_t i) const {
    if (i >= s_.words.size()) throw InvalidInput("missing --word argument");
    return parse_word(s_.words[i]);
  }

  bool text() const { return s_.format == "text"; }

  void emit(const std::string& text) {
    if (s_.out_path.empty()) {
      out_ << text;
      return;
    }
    std::ofstream f(s_.out_path, std::ios::binary);
    if (!f) throw InvalidInput("cannot write " + s_.out_path);
    f << text;
  }

  void emit(const nlohmann::json& j) { emit(j.dump(2) + "\n"); }

  std::ostream& err() { return err_; }
  Session& session() { return s_; }

 private:
  Session& s_;
  std::ostream& out_;
  std::ostream& err_;
  GroupPtr group_;
  TablePtr table_;
  bool warned_ = false;
};

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InvalidInput("cannot read " + path);
  try {
    return nlohmann::json::parse(f);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

// A target file is either a bare group ring array or {"v1": [...], ...}.
const nlohmann::json& target_terms(const nlohmann::json& j) { return j.is_object() ? j.at("v1") : j; }

std::string type_hint(const nlohmann::json& j) {
  return j.is_object() && j.contains("type") ? j.at("type").get<std::string>() : std::string{};
}

void add_datum_options(CLI::App* app, Session& s) {
  app->add_option_function<std::string>(
      "--type", [&s](const std::string& v) { s.type = v, s.type_given = true; }, "Cartan type such as A2, B3, G2");
  app->add_option_function<std::string>(
      "--cartan", [&s](const std::string& v) { s.cartan = v, s.cartan_given = true; },
      "Cartan matrix as JSON, e.g. [[2,-1],[-1,2]]");
  app->add_option("--norms", s.norms, "Squared root lengths (with --cartan)")->delimiter(',');
  app->add_option("--bruhat-cap", s.bruhat_cap, "Longest element accepted by Bruhat comparisons");
  app->add_option("--format", s.format, "Output format")->check(CLI::IsMember({"json", "text", "svg"}));
  app->add_option("--out", s.out_path, "Write the output to a file");
}

void add_p_option(CLI::App* app, Session& s) {
  app->add_option_function<std::int64_t>("--p", [&s](std::int64_t v) { s.p = v, s.p_given = true; }, "The prime p");
}

void add_word_option(CLI::App* app, Session& s) {
  app->add_option("--word", s.words, "Comma separated generator indices; 0 is the affine generator")
      ->allow_extra_args(false);
}

std::string word_text(const Word& w) { return w.empty() ? "e" : format_word(w); }

// ----- group -----

void cmd_group(Context& c, const std::string& op, bool inverse_frob) {
  auto g = c.group();
  if (op == "mul") {
    AffineWeylElement x = g->identity();
    for (std::size_t i = 0; i < c.session().words.size(); ++i) x = g->mul(x, c.word_element(i));
    const Word rex = g->canonical_rex(x);
    c.text() ? c.emit(word_text(rex) + "\n") : c.emit(nlohmann::json(rex));
  } else if (op == "inv") {
    const Word rex = g->canonical_rex(g->inv(c.word_element(0)));
    c.text() ? c.emit(word_text(rex) + "\n") : c.emit(nlohmann::json(rex));
  } else if (op == "length") {
    c.emit(std::to_string(g->length(c.word_element(0))) + "\n");
  } else if (op == "rex") {
    const Word rex = g->canonical_rex(c.word_element(0));
    c.text() ? c.emit(word_text(rex) + "\n") : c.emit(nlohmann::json(rex));
  } else if (op == "bruhat") {
    c.emit(std::string(g->bruhat_leq(c.word_element(0), c.word_element(1)) ? "true" : "false") + "\n");
  } else if (op == "coset") {
    const auto t = c.table();
    const CosetDecomposition d = t->decompose(c.word_element(0));
    const Word xbar = g->canonical_rex(d.xbar), w = g->canonical_rex(t->rep(d.rep_index));
    if (c.text()) {
      c.emit("xbar " + word_text(xbar) + "\nw    " + word_text(w) + "\n");
    } else {
      c.emit(nlohmann::ordered_json{{"xbar", xbar}, {"w", w}}.dump() + "\n");
    }
  } else if (op == "frobenius") {
    const std::int64_t p = c.p();
    const auto x = c.word_element(0);
    const Word rex = g->canonical_rex(inverse_frob ? g->frobenius_inv(x, p) : g->frobenius(x, p));
    c.text() ? c.emit(word_text(rex) + "\n") : c.emit(nlohmann::json(rex));
  } else if (op == "cosets") {
    const auto t = c.table();
    nlohmann::json reps = nlohmann::json::array();
    for (std::size_t w = 0; w < t->size(); ++w) {
      nlohmann::json steps = nlohmann::json::array();
      for (Generator s = 0; s < static_cast<Generator>(g->num_generators()); ++s) {
        const CosetStep& st = t->step(w, s);
        steps.push_back(st.stay ? nlohmann::json{{"stay", st.target}} : nlohmann::json{{"move", st.target}});
      }
      reps.push_back({{"word", g->canonical_rex(t->rep(w))}, {"action", steps}});
    }
    c.emit(nlohmann::json{{"p", t->p()}, {"reps", reps}});
  }
}

// ----- realization -----

int cmd_realization(Context& c) {
  const auto t = c.table();
  const auto& g = t->group();
  const Realization rlz(t->group_ptr());
  nlohmann::json rows = nlohmann::json::array();
  bool ok = true;
  std::string text = "w        s  coeff  divisible  same_coset  wall  image\n";
  for (const auto& rec : rlzcoefs_table(rlz, *t)) {
    ok = ok && rec.consistent();
    nlohmann::json row{{"w", g.canonical_rex(t->rep(rec.w))},
                       {"s", rec.s},
                       {"coeff_of_a_tilde", rec.coeff_of_a_tilde},
                       {"divisible", rec.divisible},
                       {"same_coset", rec.same_coset},
                       {"consistent", rec.consistent()}};
    if (rec.wall_generator) row["wall_generator"] = *rec.wall_generator;
    if (rec.image_matches) row["image_matches"] = *rec.image_matches;
    rows.push_back(row);
    std::ostringstream line;
    line << std::left << std::setw(9) << element_label(g, t->rep(rec.w)) << std::setw(3) << rec.s << std::setw(7)
         << rec.coeff_of_a_tilde << std::setw(11) << (rec.divisible ? "yes" : "no") << std::setw(12)
         << (rec.same_coset ? "yes" : "no") << std::setw(6)
         << (rec.wall_generator ? std::to_string(*rec.wall_generator) : "-")
         << (rec.image_matches ? (*rec.image_matches ? "yes" : "no") : "-") << "\n";
    text += line.str();
  }
  if (c.text()) {
    c.emit(text + (ok ? "all consistent\n" : "INCONSISTENT\n"));
  } else {
    c.emit(nlohmann::json{{"p", t->p()}, {"cases", rows.size()}, {"consistent", ok}, {"records", rows}});
  }
  return ok ? kOk : kVerifyFailed;
}

// ----- pattern -----

void cmd_pattern(Context& c, const std::string& w_text, const std::string& types, const std::string& match_text) {
  auto g = c.group();
  Pattern r;
  r.expr = c.word(0);
  r.types = Pattern::parse_types(types);
  if (r.types.size() != r.expr.size()) throw InvalidInput("pattern and expression lengths differ");
  Match m{r, Match::parse_types(match_text)};
  const AffineWeylElement w = g->from_word(parse_word(w_text));
  const DecoratedMatch d = twisted_stroll(*g, m, w);
  auto label = [&](const AffineWeylElement& x) { return x.is_identity() ? std::string("id") : element_label(*g, x); };
  if (c.text()) {
    auto row = [](const std::string& name, const std::vector<std::string>& cells) {
      std::string line = name;
      line.resize(12, ' ');
      for (std::size_t i = 0; i < cells.size(); ++i) line += (i ? " " : "") + cells[i];
      return line + "\n";
    };
    std::vector<std::string> expr, pat, mat, stroll, dec;
    const std::string ts = r.type_string(), ms = m.type_string();
    for (std::size_t i = 0; i < r.size(); ++i) {
      expr.push_back(std::to_string(r.expr[i]));
      pat.push_back(std::string(1, ts[i]));
      mat.push_back(std::string(1, ms[i]));
    }
    for (const auto& x : d.stroll) stroll.push_back(label(x));
    for (auto x : d.decorations) dec.push_back(to_string(x));
    c.emit(row("expression", expr) + row("pattern", pat) + row("match", mat) + row("stroll", stroll) +
           row("decorated", dec) + "defect      " + std::to_string(d.defect) + "\n");
    return;
  }
  nlohmann::json stroll = nlohmann::json::array(), dec = nlohmann::json::array();
  for (const auto& x : d.stroll) stroll.push_back(label(x));
  for (auto x : d.decorations) dec.push_back(to_string(x));
  c.emit(nlohmann::json{{"expr", r.expr},
                        {"w", g->canonical_rex(w)},
                        {"pattern", r.type_string()},
                        {"match", m.type_string()},
                        {"stroll", stroll},
                        {"decorations", dec},
                        {"defect", d.defect}});
}

// ----- verify -----

int cmd_verify(Context& c, const std::string& suite) {
  VerifyReport r;
  if (suite == "deodhar") {
    r = verify_deodhar(*c.group(), c.session().maxlen);
  } else if (suite == "past") {
    r = verify_past(*c.table(), c.session().maxlen);
  } else if (suite == "toral") {
    r = verify_toral(*c.table(), c.session().seed);
  } else if (suite == "rlzcoefs") {
    r = verify_rlzcoefs(*c.table());
  } else {
    r = verify_xi(*c.table(), c.session().seed);
  }
  if (c.text()) {
    std::string text = r.suite + ": " + (r.passed() ? "pass" : "FAIL") + ", " + std::to_string(r.cases) +
                       " cases, " + std::to_string(r.failures) + " failures\n";
    for (const auto& ce : r.counterexamples) text += "  counterexample: " + ce + "\n";
    c.emit(text);
  } else {
    c.emit(r.to_json());
  }
  return r.passed() ? kOk : kVerifyFailed;
}

// ----- recursion -----

void cmd_xi(Context& c, bool stats) {
  const auto t = c.table();
  const auto& g = t->group();
  const AffineWeylElement y = c.word_element(0);
  const XiMatrix m = xi(*t, y);
  nlohmann::json reps = nlohmann::json::array();
  for (const auto& r : t->reps()) reps.push_back(g.canonical_rex(r));
  if (c.text()) {
    std::vector<std::vector<std::string>> cells(t->size(), std::vector<std::string>(t->size()));
    std::size_t width = 1;
    for (std::size_t w = 0; w < t->size(); ++w)
      for (std::size_t z = 0; z < t->size(); ++z) {
        std::string s;
        for (const auto& [x, k] : m[w][z].terms())
          s += (s.empty() ? "" : "+") + (k == 1 ? "" : std::to_string(k)) + element_label(g, x);
        cells[w][z] = s.empty() ? "." : s;
        width = std::max(width, cells[w][z].size());
      }
    std::string text;
    for (const auto& row : cells) {
      std::string line;
      for (const auto& cell : row) line += cell + std::string(width + 1 - cell.size(), ' ');
      while (!line.empty() && line.back() == ' ') line.pop_back();
      text += line + "\n";
    }
    c.emit(text);
    return;
  }
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : m) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& e : row) r.push_back(group_alg_to_json(g, e));
    rows.push_back(r);
  }
  nlohmann::json out{{"p", t->p()}, {"y", g.canonical_rex(y)}, {"reps", reps}, {"matrix", rows}};
  if (stats) {
    nlohmann::json st = nlohmann::json::array();
    for (const auto& row : xi_size_stats(*t, y))
      st.push_back({{"w", g.canonical_rex(t->rep(row.w))},
                    {"z", g.canonical_rex(t->rep(row.z))},
                    {"entry", g.canonical_rex(row.entry)},
                    {"norm_at_origin", row.norm},
                    {"reference", row.bound}});
    out["size_statistic"] = st;
  }
  c.emit(out);
}

void cmd_psi(Context& c, Generator s) {
  const auto t = c.table();
  const auto& g = t->group();
  const PsiReport r = psi_generator_crosscheck(*t, s);
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : r.entries) {
    if (e.kind == PsiEntryKind::Zero && e.agrees) continue;
    entries.push_back({{"w", g.canonical_rex(t->rep(e.w))},
                       {"z", g.canonical_rex(t->rep(e.z))},
                       {"kind", e.kind == PsiEntryKind::Move ? "move" : e.kind == PsiEntryKind::Zero ? "zero" : "stay"},
                       {"literal", e.literal},
                       {"action", e.from_rho},
                       {"status", e.kind == PsiEntryKind::StayDiagonal ? "flagged" : e.agrees ? "agree" : "differ"}});
  }
  c.emit(nlohmann::json{{"s", s},
                        {"zero_pattern_agrees", r.zero_pattern_agrees},
                        {"move_entries_agree", r.move_entries_agree},
                        {"flagged", r.flagged},
                        {"entries", entries}});
}

// ----- bound / diagram -----

struct BoundInputs {
  TablePtr table;
  GroupAlgElt target;
  CanonicalLibrary library;
  AffineWeylElement x;
};

BoundInputs load_bound(Context& c, const std::string& target_path, const std::string& library_path,
                       const std::string& x_text) {
  const nlohmann::json lib_json = read_json_file(library_path);
  const nlohmann::json target_json = read_json_file(target_path);
  std::string hint = type_hint(lib_json);
  if (hint.empty()) hint = type_hint(target_json);
  if (!c.session().p_given && lib_json.contains("p")) c.session().p = lib_json.at("p").get<std::int64_t>();
  BoundInputs in;
  in.table = c.table(hint);
  const auto& g = in.table->group();
  in.library = library_from_json(g, lib_json);
  in.target = group_alg_from_json(g, target_terms(target_json));
  if (!x_text.empty()) {
    in.x = g.from_word(parse_word(x_text));
  } else if (target_json.is_object() && target_json.contains("x")) {
    in.x = element_from_json(g, target_json.at("x"));
  } else {
    throw InvalidInput("bound check needs --x or an \"x\" entry in the target");
  }
  return in;
}

void cmd_bound(Context& c, const std::string& target_path, const std::string& library_path, const std::string& x_text,
               const std::string& svg_path) {
  const BoundInputs in = load_bound(c, target_path, library_path, x_text);
  const BoundResult r = check_lower_bound(*in.table, in.x, in.target, in.library);
  const auto& g = in.table->group();
  if (!svg_path.empty() && r.feasible) {
    const DiagramColoring coloring = coloring_from_witness(*in.table, r);
    std::ofstream f(svg_path, std::ios::binary);
    if (!f) throw InvalidInput("cannot write " + svg_path);
    f << render_svg(build_weight_diagram(g, in.target, &coloring));
  }
  if (!c.text()) {
    c.emit(bound_result_to_json(*in.table, r));
    return;
  }
  std::string text = r.feasible ? "feasible\n" : "infeasible\n";
  for (const auto& t : r.witness)
    text += "  " + std::to_string(t.multiplicity) + " x (y=" + element_label(g, t.y) +
            ", w=" + element_label(g, in.table->rep(t.w)) + ")\n";
  if (!r.feasible) {
    text += "  certificate: " + to_string(r.certificate.kind);
    if (r.certificate.element) text += " at " + element_label(g, *r.certificate.element);
    text += "\n";
  }
  c.emit(text);
}

void cmd_diagram(Context& c, const std::string& input, const std::string& svg_path) {
  const nlohmann::json j = read_json_file(input);
  auto g = c.group(type_hint(j));
  const GroupAlgElt t = group_alg_from_json(*g, target_terms(j));
  const WeightDiagram d = build_weight_diagram(*g, t);
  std::string format = c.session().format;
  if (!svg_path.empty()) format = "svg";
  if (format == "svg" && d.rank > 2) {
    c.err() << "SVG output needs rank at most 2; writing JSON instead\n";
    c.emit(render_json(*g, d));
    return;
  }
  if (format == "svg") {
    const std::string svg = render_svg(d);
    if (svg_path.empty()) {
      c.emit(svg);
    } else {
      std::ofstream f(svg_path, std::ios::binary);
      if (!f) throw InvalidInput("cannot write " + svg_path);
      f << svg;
    }
  } else if (format == "text") {
    c.emit(render_text(d));
  } else {
    c.emit(render_json(*g, d));
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Session s;
  CLI::App app{"Affine Weyl group, Hecke algebra and p-canonical bound toolkit", "pcanon"};
  app.require_subcommand(1);

  std::function<int(Context&)> action;
  auto bind = [&](CLI::App* sub, std::function<int(Context&)> f) {
    sub->callback([&action, f] { action = f; });
  };

  // group
  auto* group = app.add_subcommand("group", "Element arithmetic");
  group->require_subcommand(1);
  bool inverse_frob = false;
  for (const char* op : {"mul", "inv", "length", "rex", "bruhat", "coset", "cosets", "frobenius"}) {
    auto* sub = group->add_subcommand(op);
    add_datum_options(sub, s);
    add_word_option(sub, s);
    if (std::string(op) == "coset" || std::string(op) == "frobenius" || std::string(op) == "cosets")
      add_p_option(sub, s);
    if (std::string(op) == "frobenius") sub->add_flag("--inverse", inverse_frob, "Apply F^{-1} instead");
    const std::string name = op;
    bind(sub, [&, name](Context& c) {
      cmd_group(c, name, inverse_frob);
      return int{kOk};
    });
  }

  // realization
  auto* realization = app.add_subcommand("realization", "Realization coefficients");
  realization->require_subcommand(1);
  auto* rcheck = realization->add_subcommand("check", "Report the coefficient table for every (w, s)");
  add_datum_options(rcheck, s);
  add_p_option(rcheck, s);
  bind(rcheck, [](Context& c) { return cmd_realization(c); });

  // pattern
  auto* pattern = app.add_subcommand("pattern", "Patterns and matches");
  pattern->require_subcommand(1);
  auto* stroll = pattern->add_subcommand("stroll", "Twisted Bruhat stroll of a match");
  std::string w_text, types, match_text;
  add_datum_options(stroll, s);
  add_word_option(stroll, s);
  stroll->add_option("--w", w_text, "Twisting element as a word");
  stroll->add_option("--pattern", types, "Pattern type such as 1**1111*")->required();
  stroll->add_option("--match", match_text, "Match type such as -01----0")->required();
  bind(stroll, [&](Context& c) {
    cmd_pattern(c, w_text, types, match_text);
    return int{kOk};
  });

  // verify and the past alias
  std::string suite;
  auto* verify = app.add_subcommand("verify", "Exhaustive and randomized checks");
  verify->add_option("suite", suite, "Suite name")
      ->required()
      ->check(CLI::IsMember({"deodhar", "past", "toral", "rlzcoefs", "xi"}));
  auto add_verify_options = [&](CLI::App* sub) {
    add_datum_options(sub, s);
    add_p_option(sub, s);
    sub->add_option("--maxlen", s.maxlen, "Longest expression to enumerate");
    sub->add_option("--seed", s.seed, "Seed for randomized suites");
  };
  add_verify_options(verify);
  bind(verify, [&](Context& c) { return cmd_verify(c, suite); });
  auto* past = app.add_subcommand("past", "Bimodule product formulas");
  past->require_subcommand(1);
  auto* past_verify = past->add_subcommand("verify", "Same as verify past");
  add_verify_options(past_verify);
  bind(past_verify, [](Context& c) { return cmd_verify(c, "past"); });

  // recursion
  auto* recursion = app.add_subcommand("recursion", "Matrix recursion");
  recursion->require_subcommand(1);
  auto* rxi = recursion->add_subcommand("xi", "Matrix of an element");
  bool stats = false;
  add_datum_options(rxi, s);
  add_p_option(rxi, s);
  add_word_option(rxi, s);
  rxi->add_flag("--stats", stats, "Add the |x(0)| size statistic");
  bind(rxi, [&](Context& c) {
    cmd_xi(c, stats);
    return int{kOk};
  });
  auto* rpsi = recursion->add_subcommand("psi", "Compare the generator formula with the action matrix");
  Generator psi_s = 0;
  add_datum_options(rpsi, s);
  add_p_option(rpsi, s);
  rpsi->add_option("--s", psi_s, "Generator")->required();
  bind(rpsi, [&](Context& c) {
    cmd_psi(c, psi_s);
    return int{kOk};
  });

  // bound
  auto* bound = app.add_subcommand("bound", "p-canonical lower bounds");
  bound->require_subcommand(1);
  auto* bcheck = bound->add_subcommand("check", "Decide membership in the cone of admissible vectors");
  std::string target_path, library_path, x_text, svg_path;
  add_datum_options(bcheck, s);
  add_p_option(bcheck, s);
  bcheck->add_option("--target", target_path, "Target JSON")->required();
  bcheck->add_option("--library", library_path, "Library JSON")->required();
  bcheck->add_option("--x", x_text, "Upper element as a word");
  bcheck->add_option("--svg", svg_path, "Also write the witness-colored diagram");
  bind(bcheck, [&](Context& c) {
    cmd_bound(c, target_path, library_path, x_text, svg_path);
    return int{kOk};
  });

  // diagram
  auto* diagram = app.add_subcommand("diagram", "Weight diagram of a group ring element");
  std::string input;
  add_datum_options(diagram, s);
  diagram->add_option("--input", input, "Element JSON")->required();
  diagram->add_option("--svg", svg_path, "Write SVG to this path");
  bind(diagram, [&](Context& c) {
    cmd_diagram(c, input, svg_path);
    return int{kOk};
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kUsage;
  }

  Context ctx(s, out, err);
  try {
    return action ? action(ctx) : int{kUsage};
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace pcanon
