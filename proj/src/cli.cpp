#include "garside/cli.hpp"

#include <CLI11.hpp>
#include <functional>
#include <ostream>

#include "garside/io.hpp"

namespace garside {
namespace {

constexpr int exit_ok = 0;
constexpr int exit_negative = 1;
constexpr int exit_input = 2;

struct Options {
  std::string system_path;
  std::string format = "text";
  std::string word;
  std::string word2;
  std::string kind;
  std::string side = "left";
  std::string parabolic;
  std::string atom;
  bool tilde = false;
  std::size_t level = 6;
  std::string presentation_path;
};

struct Context {
  const GarsideSystem& sys;
  const Options& opt;
  std::ostream& out;
  bool json() const { return opt.format == "json"; }
  void emit(const Json& j) const { out << j.dump(2) << '\n'; }
};

Positive parse_positive(const GarsideSystem& sys, const std::string& text) { return normalize(sys, parse_word(sys, text)); }

AtomId parse_atom(const GarsideSystem& sys, const std::string& name) {
  auto a = sys.find_atom(name);
  if (!a) throw Error(ErrorKind::invalid_input, "unknown atom \"" + name + "\"");
  return *a;
}

int cmd_nf(const Context& c) {
  const GroupEl g = parse_group_word(c.sys, c.opt.word);
  if (c.json()) c.emit(Json{{"input", c.opt.word}, {"result", group_json(c.sys, g)}});
  else c.out << format_group(c.sys, g) << '\n';
  return exit_ok;
}

int cmd_op(const Context& c) {
  const Positive x = parse_positive(c.sys, c.opt.word);
  const Positive y = parse_positive(c.sys, c.opt.word2);
  const LatticeOp op = c.opt.kind == "lcm" ? LatticeOp::join : LatticeOp::meet;
  const Side side = c.opt.side == "left" ? Side::left : Side::right;
  const Positive r = lattice(c.sys, x, y, op, side);
  if (c.json()) c.emit(Json{{"kind", c.opt.kind}, {"side", c.opt.side}, {"result", letters_json(c.sys, r)}});
  else c.out << format_normal_form(c.sys, r) << '\n';
  return exit_ok;
}

int cmd_tau(const Context& c) {
  const Positive g = parse_positive(c.sys, c.opt.word);
  if (g.empty()) throw Error(ErrorKind::invalid_input, "tau needs a nonempty word");
  const Positive t = tau(c.sys, g);
  if (c.json()) c.emit(Json{{"result", letters_json(c.sys, t)}, {"word", word_json(c.sys, t)}});
  else c.out << format_normal_form(c.sys, t) << '\n';
  return exit_ok;
}

int cmd_qz_basis(const Context& c) {
  const QZBasis qz = qz_basis(c.sys);
  if (c.json()) {
    Json basis = Json::array();
    for (const Positive& b : qz.basis) basis.push_back(word_json(c.sys, b));
    Json map = Json::object();
    for (const auto& [atom, index] : qz.atom_map) map[c.sys.atom_name(atom)] = index;
    c.emit(Json{{"basis", basis}, {"atom_map", map}});
  } else {
    for (const Positive& b : qz.basis) c.out << format_word(c.sys, b) << '\n';
  }
  return exit_ok;
}

int cmd_nu(const Context& c) {
  const AtomSet x = parse_atomset(c.sys, c.opt.parabolic);
  make_parabolic(c.sys, x);
  const NuAtom a = nu(c.sys, x, parse_atom(c.sys, c.opt.atom), c.opt.tilde ? NuVariant::tilde : NuVariant::plain);
  if (c.json()) {
    Json j = nu_atom_json(c.sys, a);
    j["variant"] = c.opt.tilde ? "tilde" : "plain";
    c.emit(j);
  } else {
    c.out << format_word(c.sys, a.element) << " : " << format_atomset(c.sys, a.source) << " -> "
          << format_atomset(c.sys, a.target) << " (" << (a.kind == NuKind::tau ? "tau" : "nu") << ")\n";
  }
  return exit_ok;
}

int cmd_quiver(const Context& c) {
  const Quiver q = atom_quiver(c.sys);
  if (c.json()) {
    Json objects = Json::array();
    for (AtomSet x : q.objects) objects.push_back(atomset_json(c.sys, x));
    Json edges = Json::array();
    for (std::size_t i = 0; i < q.edges.size(); ++i) {
      Json e = nu_atom_json(c.sys, q.edges[i]);
      e["id"] = i;
      edges.push_back(std::move(e));
    }
    c.emit(Json{{"objects", objects}, {"edges", edges}});
  } else {
    Presentation p{q, {}};
    const std::string text = presentation_text(c.sys, p);
    c.out << text.substr(0, text.find("relations ("));
  }
  return exit_ok;
}

int cmd_presentation(const Context& c) {
  const Presentation p = presentation(c.sys);
  if (c.opt.format == "json") c.emit(presentation_json(c.sys, p));
  else if (c.opt.format == "rewriting") c.out << presentation_rewriting(c.sys, p);
  else c.out << presentation_text(c.sys, p);
  return exit_ok;
}

int cmd_shakers(const Context& c) {
  const AtomSet x = parse_atomset(c.sys, c.opt.parabolic);
  make_parabolic(c.sys, x);
  const Quiver q = atom_quiver(c.sys);
  const Shakers sh = shakers(c.sys, q, x);
  const auto checks = shaker_garside_check(c.sys, q, x);
  bool all_ok = std::all_of(checks.begin(), checks.end(), [](const CheckLine& l) { return l.ok; });
  if (c.json()) {
    Json edges = Json::array();
    for (std::size_t e : sh.sh_edges) edges.push_back(nu_atom_json(c.sys, q.edges[e]));
    Json report = Json::array();
    for (const CheckLine& l : checks) report.push_back(Json{{"check", l.name}, {"ok", l.ok}, {"detail", l.detail}});
    c.emit(Json{{"parabolic", atomset_json(c.sys, x)},
                {"SH", edges},
                {"sh", atomset_json(c.sys, sh.sh)},
                {"sh_tilde", atomset_json(c.sys, sh.sh_tilde)},
                {"matrix", sh.matrix ? Json(*sh.matrix) : Json(nullptr)},
                {"checks", report}});
  } else {
    c.out << "SH(" << format_atomset(c.sys, x) << "):";
    for (std::size_t i = 0; i < sh.sh_edges.size(); ++i)
      c.out << (i ? ", " : " ") << format_word(c.sys, q.edges[sh.sh_edges[i]].element);
    c.out << "\nsh: " << format_atomset(c.sys, sh.sh) << "\nsh~: " << format_atomset(c.sys, sh.sh_tilde) << '\n';
    if (sh.matrix) {
      c.out << "matrix:\n";
      for (const auto& row : *sh.matrix) {
        c.out << ' ';
        for (int v : row) c.out << ' ' << v;
        c.out << '\n';
      }
    } else {
      c.out << "matrix: none\n";
    }
    for (const CheckLine& l : checks)
      c.out << (l.ok ? "pass " : "FAIL ") << l.name << (l.detail.empty() ? "" : ": " + l.detail) << '\n';
  }
  return all_ok ? exit_ok : exit_negative;
}

int cmd_conjugate(const Context& c) {
  const AtomSet x = parse_atomset(c.sys, c.opt.parabolic);
  make_parabolic(c.sys, x);
  const GroupEl g = parse_group_word(c.sys, c.opt.word);
  const Quiver q = atom_quiver(c.sys);
  const auto d = conj_decompose(c.sys, q, g, x);
  if (!d) {
    if (c.json()) c.emit(Json{{"result", nullptr}});
    else c.out << "result: null (the element does not conjugate " << format_atomset(c.sys, x) << " onto a parabolic)\n";
    return exit_negative;
  }
  if (c.json()) {
    c.emit(Json{{"result",
                 {{"a", group_json(c.sys, d->a)},
                  {"r",
                   {{"source", atomset_json(c.sys, d->r.source)},
                    {"target", atomset_json(c.sys, d->r.target)},
                    {"element", group_json(c.sys, d->r.element)},
                    {"numerator", letters_json(c.sys, d->numerator)},
                    {"denominator", letters_json(c.sys, d->denominator)}}}}}});
  } else {
    c.out << "a = " << format_group(c.sys, d->a) << "\nr = " << format_normal_form(c.sys, d->numerator) << " / "
          << format_normal_form(c.sys, d->denominator) << " : " << format_atomset(c.sys, d->r.source) << " -> "
          << format_atomset(c.sys, d->r.target) << '\n';
  }
  return exit_ok;
}

int cmd_verify(const Context& c) {
  Json report = Json::object();
  bool ok = true;
  std::vector<std::string> lines;

  const auto invariants = c.sys.check_invariants();
  ok = ok && invariants.empty();
  report["simple_invariants"] = {{"ok", invariants.empty()}, {"failures", invariants}};
  lines.push_back(std::string(invariants.empty() ? "pass" : "FAIL") + " simple invariants" +
                  (invariants.empty() ? "" : ": " + invariants.front()));

  const auto violations = verify_nu_axioms(c.sys, c.opt.level);
  Json vj = Json::array();
  for (const NuViolation& v : violations)
    vj.push_back(Json{{"axiom", v.axiom},
                      {"variant", v.variant == NuVariant::tilde ? "tilde" : "plain"},
                      {"parabolic", atomset_json(c.sys, v.object)},
                      {"s", c.sys.atom_name(v.s)},
                      {"t", v.t ? Json(c.sys.atom_name(*v.t)) : Json(nullptr)},
                      {"detail", v.detail}});
  ok = ok && violations.empty();
  report["nu_axioms"] = {{"ok", violations.empty()}, {"level", c.opt.level}, {"violations", vj}};
  lines.push_back(std::string(violations.empty() ? "pass" : "FAIL") + " nu axioms at level " +
                  std::to_string(c.opt.level) +
                  (violations.empty() ? "" : ": " + std::to_string(violations.size()) + " violations, first axiom " +
                                                 std::to_string(violations.front().axiom) + " at " +
                                                 format_atomset(c.sys, violations.front().object) + " atom " +
                                                 c.sys.atom_name(violations.front().s)));

  std::string qz_problem;
  try {
    qz_basis(c.sys);
  } catch (const std::exception& e) {
    qz_problem = e.what();
  }
  ok = ok && qz_problem.empty();
  report["qz_basis"] = {{"ok", qz_problem.empty()}, {"detail", qz_problem}};
  lines.push_back(std::string(qz_problem.empty() ? "pass" : "FAIL") + " qz basis" +
                  (qz_problem.empty() ? "" : ": " + qz_problem));

  // The presentation is only meaningful once the ν values are sound.
  if (violations.empty()) {
    const Presentation p =
        c.opt.presentation_path.empty() ? presentation(c.sys) : load_presentation(c.sys, c.opt.presentation_path);
    const VerifyReport r = verify_presentation(c.sys, p, c.opt.level);
    const bool pass = r.sound && r.complete;
    ok = ok && pass;
    Json pj = {{"ok", pass}, {"level", r.level}, {"horizon", r.horizon}, {"paths", r.paths}, {"classes", r.classes},
               {"sound", r.sound}, {"complete", r.complete}};
    std::string line = std::string(pass ? "pass" : "FAIL") + " presentation at level " + std::to_string(r.level) + " (closure length " +
                       std::to_string(r.horizon) + ", " + std::to_string(r.paths) + " paths, " + std::to_string(r.classes) + " classes)";
    if (r.counterexample) {
      auto path_json = [&](const RootedPath& rp) { return Json{{"start", atomset_json(c.sys, rp.start)}, {"edges", rp.edges}}; };
      pj["counterexample"] = {path_json(r.counterexample->first), path_json(r.counterexample->second)};
      pj["detail"] = r.detail;
      line += ": " + r.detail;
    }
    report["presentation"] = pj;
    lines.push_back(line);
  } else {
    report["presentation"] = {{"ok", false}, {"detail", "skipped because the nu axioms fail"}};
    lines.push_back("FAIL presentation: skipped because the nu axioms fail");
    ok = false;
  }

  report["ok"] = ok;
  if (c.json()) c.emit(report);
  else
    for (const std::string& l : lines) c.out << l << '\n';
  return ok ? exit_ok : exit_negative;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Garside monoid and ribbon groupoid engine", "garside"};
  app.require_subcommand(1, 1);
  app.add_option("--system", opt.system_path, "System definition file (JSON)")->envname("GARSIDE_SYSTEM");
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json", "rewriting"}));

  std::map<CLI::App*, std::function<int(const Context&)>> handlers;
  auto sub = [&](const char* name, const char* help, std::function<int(const Context&)> fn) {
    CLI::App* s = app.add_subcommand(name, help);
    s->fallthrough();
    handlers[s] = std::move(fn);
    return s;
  };

  sub("nf", "Greedy normal form of a word (group words allowed)", cmd_nf)
      ->add_option("word", opt.word, "Word in atom names")
      ->required();
  CLI::App* op = sub("op", "Lattice operation on two positive words", cmd_op);
  op->add_option("--kind", opt.kind, "lcm or gcd")->required()->check(CLI::IsMember({"lcm", "gcd"}));
  op->add_option("--side", opt.side, "left or right")->check(CLI::IsMember({"left", "right"}));
  op->add_option("w1", opt.word, "First word")->required();
  op->add_option("w2", opt.word2, "Second word")->required();
  sub("tau", "Least quasi-central multiple of a positive word", cmd_tau)
      ->add_option("word", opt.word, "Word in atom names")
      ->required();
  sub("qz-basis", "Free basis of the quasi-centralizer", cmd_qz_basis);
  CLI::App* nu_cmd = sub("nu", "ν or ν̃ value at a parabolic", cmd_nu);
  nu_cmd->add_option("--parabolic", opt.parabolic, "Comma-separated atoms")->required();
  nu_cmd->add_option("--atom", opt.atom, "Atom name")->required();
  nu_cmd->add_flag("--tilde", opt.tilde, "Use ν̃");
  sub("quiver", "Ribbon atom quiver", cmd_quiver);
  sub("presentation", "Groupoid presentation (--format text|json|rewriting)", cmd_presentation);
  sub("shakers", "Shaker vertex group at a parabolic", cmd_shakers)
      ->add_option("--parabolic", opt.parabolic, "Comma-separated atoms")
      ->required();
  CLI::App* conj = sub("conjugate", "Split a conjugating element as (A_X part)·(ν ribbon)", cmd_conjugate);
  conj->add_option("--parabolic", opt.parabolic, "Comma-separated atoms")->required();
  conj->add_option("word", opt.word, "Group word")->required();
  CLI::App* verify = sub("verify", "Axiom and presentation checks", cmd_verify);
  verify->add_option("--level", opt.level, "Path length bound");
  verify->add_option("--presentation", opt.presentation_path, "Presentation file to check instead of the generated one");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_input;
  }

  CLI::App* chosen = app.get_subcommands().front();
  if (opt.format == "rewriting" && chosen->get_name() != "presentation") {
    err << "error: --format rewriting applies to the presentation subcommand only\n";
    return exit_input;
  }
  if (opt.system_path.empty()) {
    err << "error: no system given (use --system or GARSIDE_SYSTEM)\n";
    return exit_input;
  }
  try {
    const GarsideSystem sys = load_system(opt.system_path);
    return handlers.at(chosen)(Context{sys, opt, out});
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::not_a_ribbon) {
      if (opt.format == "json") out << Json{{"result", nullptr}, {"error", e.what()}}.dump(2) << '\n';
      err << "error: " << e.what() << '\n';
      return exit_negative;
    }
    err << "error: " << e.what() << '\n';
    return exit_input;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return exit_input;
  }
}

}  // namespace garside
