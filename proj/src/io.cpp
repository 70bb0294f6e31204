#include "garside/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace garside {
namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::invalid_input, what); }

const Json& field(const Json& doc, const char* name) {
  if (!doc.contains(name)) bad(std::string("missing field \"") + name + "\"");
  return doc.at(name);
}

std::vector<std::string> string_list(const Json& v, const std::string& where) {
  if (!v.is_array()) bad(where + " must be an array of strings");
  std::vector<std::string> out;
  for (const Json& e : v) {
    if (!e.is_string()) bad(where + " must be an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

NuTableSpec nu_table_from_json(const Json& v, const std::string& where) {
  if (!v.is_object()) bad(where + " must be an object");
  NuTableSpec out;
  for (const auto& [key, row] : v.items()) {
    if (!row.is_object()) bad(where + "[\"" + key + "\"] must be an object");
    for (const auto& [atom, word] : row.items())
      out[key][atom] = string_list(word, where + "[\"" + key + "\"][\"" + atom + "\"]");
  }
  return out;
}

bool single_char_names(const GarsideSystem& sys) {
  const auto& names = sys.atom_names();
  return std::all_of(names.begin(), names.end(), [](const std::string& n) { return n.size() == 1; });
}

std::vector<std::string> tokens(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

std::vector<AtomId> parse_token(const GarsideSystem& sys, const std::string& token) {
  if (auto a = sys.find_atom(token)) return {*a};
  if (single_char_names(sys)) {
    std::vector<AtomId> out;
    for (char c : token) {
      auto a = sys.find_atom(std::string(1, c));
      if (!a) bad("unknown atom \"" + token + "\"");
      out.push_back(*a);
    }
    return out;
  }
  bad("unknown atom \"" + token + "\"");
}

std::string simple_text(const GarsideSystem& sys, SimpleId s, bool compact) {
  std::string out;
  for (AtomId a : sys.simple_word(s)) {
    if (!out.empty() && !compact) out += '*';
    out += sys.atom_name(a);
  }
  return out;
}

const char* kind_name(NuKind k) { return k == NuKind::tau ? "tau" : "nu"; }

std::string path_text(const Path& p) {
  std::string out;
  for (std::size_t e : p) out += (out.empty() ? "g" : " g") + std::to_string(e);
  return out;
}

// Validates generator data read back from a file and builds the quiver edge.
NuAtom read_generator(const GarsideSystem& sys, AtomSet source, const std::string& label, const Positive& element,
                      AtomSet target, const std::string& kind, std::size_t id) {
  const std::string where = "generator " + std::to_string(id);
  auto a = sys.find_atom(label);
  if (!a) bad(where + ": unknown label \"" + label + "\"");
  if (kind != "tau" && kind != "nu") bad(where + ": kind must be \"tau\" or \"nu\"");
  if (element.empty() || is_positive_ribbon(sys, element, source) != std::optional<AtomSet>(target))
    bad(where + ": element is not a ribbon from its source to its target");
  return NuAtom{source, *a, element, target, kind == "tau" ? NuKind::tau : NuKind::nu};
}

void check_relations(const Presentation& p) {
  for (std::size_t i = 0; i < p.relations.size(); ++i) {
    const Relation& r = p.relations[i];
    const std::string where = "relation " + std::to_string(i);
    if (r.lhs.empty() || r.rhs.empty()) bad(where + ": empty side");
    if (!path_composes(p.quiver, r.source, r.lhs) || !path_composes(p.quiver, r.source, r.rhs))
      bad(where + ": a side is not a path from its source");
    if (path_target(p.quiver, r.source, r.lhs) != path_target(p.quiver, r.source, r.rhs))
      bad(where + ": sides end at different objects");
  }
}

}  // namespace

CoxeterSpec coxeter_spec_from_json(const Json& doc) {
  CoxeterSpec spec;
  spec.atoms = string_list(field(doc, "atoms"), "atoms");
  const Json& m = field(doc, "coxeter_matrix");
  if (!m.is_array()) bad("coxeter_matrix must be an array of rows");
  for (const Json& row : m) {
    if (!row.is_array()) bad("coxeter_matrix must be an array of rows");
    std::vector<int> r;
    for (const Json& e : row) {
      if (e.is_string() && (e == "inf" || e == "∞")) r.push_back(0);
      else if (e.is_number_integer()) r.push_back(e.get<int>());
      else bad("coxeter_matrix entries must be integers or \"inf\"");
    }
    spec.matrix.push_back(std::move(r));
  }
  return spec;
}

TableSpec table_spec_from_json(const Json& doc) {
  TableSpec spec;
  spec.atoms = string_list(field(doc, "atoms"), "atoms");
  const Json& simples = field(doc, "simples");
  if (!simples.is_array()) bad("simples must be an array");
  for (const Json& rec : simples) {
    if (!rec.is_object()) bad("simples entries must be objects");
    const Json& id = field(rec, "id");
    SimpleRecord r;
    if (id.is_string()) r.id = id.get<std::string>();
    else if (id.is_number_integer()) r.id = std::to_string(id.get<long long>());
    else bad("simple id must be a string or an integer");
    r.word = string_list(field(rec, "word"), "simple word");
    spec.simples.push_back(std::move(r));
  }
  const Json& delta = field(doc, "delta");
  if (delta.is_string()) spec.delta = delta.get<std::string>();
  else if (delta.is_number_integer()) spec.delta = std::to_string(delta.get<long long>());
  else bad("delta must be a simple id");
  if (doc.contains("nu_table")) spec.nu_table = nu_table_from_json(doc.at("nu_table"), "nu_table");
  if (doc.contains("nu_tilde_table")) spec.nu_tilde_table = nu_table_from_json(doc.at("nu_tilde_table"), "nu_tilde_table");
  if (doc.contains("parabolics")) {
    const Json& list = doc.at("parabolics");
    if (!list.is_array()) bad("parabolics must be an array");
    std::vector<ParabolicDecl> decls;
    for (const Json& e : list) {
      ParabolicDecl d;
      if (e.is_array()) {
        d.atoms = string_list(e, "parabolic");
      } else if (e.is_object()) {
        d.atoms = string_list(field(e, "atoms"), "parabolic atoms");
        if (e.contains("components")) {
          std::vector<std::vector<std::string>> comps;
          for (const Json& c : e.at("components")) comps.push_back(string_list(c, "parabolic component"));
          d.components = std::move(comps);
        }
      } else {
        bad("parabolics entries must be arrays or objects");
      }
      decls.push_back(std::move(d));
    }
    spec.parabolics = std::move(decls);
  }
  return spec;
}

GarsideSystem system_from_json(const Json& doc) {
  if (!doc.is_object()) bad("system definition must be a JSON object");
  const Json& kind = field(doc, "kind");
  if (kind == "coxeter") return GarsideSystem::from_coxeter(coxeter_spec_from_json(doc));
  if (kind == "table") return GarsideSystem::from_table(table_spec_from_json(doc));
  bad("kind must be \"coxeter\" or \"table\"");
}

GarsideSystem load_system(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open system file " + path);
  Json doc;
  try {
    in >> doc;
  } catch (const Json::parse_error& e) {
    bad("system file " + path + " is not valid JSON: " + e.what());
  }
  return system_from_json(doc);
}

std::vector<AtomId> parse_word(const GarsideSystem& sys, std::string_view text) {
  std::vector<AtomId> out;
  for (const std::string& t : tokens(text)) {
    if (t == "1") continue;
    auto part = parse_token(sys, t);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

GroupEl parse_group_word(const GarsideSystem& sys, std::string_view text) {
  std::vector<GroupLetter> word;
  for (std::string t : tokens(text)) {
    bool inverse = false;
    if (t.size() > 3 && t.ends_with("^-1")) {
      inverse = true;
      t.resize(t.size() - 3);
    }
    if (t == "DELTA") {
      word.push_back({std::nullopt, inverse});
    } else if (t == "1" && !inverse) {
      continue;
    } else {
      auto atoms = parse_token(sys, t);
      if (inverse)
        for (auto it = atoms.rbegin(); it != atoms.rend(); ++it) word.push_back({*it, true});
      else
        for (AtomId a : atoms) word.push_back({a, false});
    }
  }
  return g_normalize(sys, word);
}

AtomSet parse_atomset(const GarsideSystem& sys, std::string_view text) {
  AtomSet out;
  std::string s(text);
  std::erase_if(s, [](char c) { return c == ' ' || c == '{' || c == '}'; });
  if (s.empty()) return out;
  std::istringstream in(s);
  for (std::string name; std::getline(in, name, ',');) {
    auto a = sys.find_atom(name);
    if (!a) bad("unknown atom \"" + name + "\" in parabolic");
    out.insert(*a);
  }
  return out;
}

std::string format_normal_form(const GarsideSystem& sys, const Positive& p) {
  if (p.empty()) return "1";
  const bool compact = single_char_names(sys);
  std::string out;
  for (SimpleId s : p.letters()) {
    if (!out.empty()) out += " . ";
    out += simple_text(sys, s, compact);
  }
  return out;
}

std::string format_group(const GarsideSystem& sys, const GroupEl& g) {
  // Positive elements print as plain normal forms; only Δ⁻ⁿ needs a prefix.
  if (g.exponent >= 0)
    return format_normal_form(sys, multiply(sys, delta_power(sys, static_cast<std::size_t>(g.exponent)), g.body));
  std::string out = "DELTA^" + std::to_string(g.exponent);
  if (!g.body.empty()) out += " . " + format_normal_form(sys, g.body);
  return out;
}

std::string format_word(const GarsideSystem& sys, const Positive& p) {
  const auto w = atom_word(sys, p);
  if (w.empty()) return "1";
  std::string out;
  for (AtomId a : w) out += (out.empty() ? "" : " ") + sys.atom_name(a);
  return out;
}

std::string format_atomset(const GarsideSystem& sys, AtomSet x) {
  std::string out = "{";
  for (AtomId a : x.members()) out += (out.size() > 1 ? "," : "") + sys.atom_name(a);
  return out + "}";
}

Json atomset_json(const GarsideSystem& sys, AtomSet x) {
  Json out = Json::array();
  for (AtomId a : x.members()) out.push_back(sys.atom_name(a));
  return out;
}

Json letters_json(const GarsideSystem& sys, const Positive& p) {
  Json out = Json::array();
  for (SimpleId s : p.letters()) {
    Json letter = Json::array();
    for (AtomId a : sys.simple_word(s)) letter.push_back(sys.atom_name(a));
    out.push_back(std::move(letter));
  }
  return out;
}

Json word_json(const GarsideSystem& sys, const Positive& p) {
  Json out = Json::array();
  for (AtomId a : atom_word(sys, p)) out.push_back(sys.atom_name(a));
  return out;
}

Json group_json(const GarsideSystem& sys, const GroupEl& g) {
  return Json{{"exponent", g.exponent}, {"letters", letters_json(sys, g.body)}};
}

Json nu_atom_json(const GarsideSystem& sys, const NuAtom& a) {
  return Json{{"source", atomset_json(sys, a.source)},
              {"label", sys.atom_name(a.label)},
              {"element", word_json(sys, a.element)},
              {"target", atomset_json(sys, a.target)},
              {"kind", kind_name(a.kind)}};
}

Json presentation_json(const GarsideSystem& sys, const Presentation& p) {
  Json objects = Json::array();
  for (AtomSet x : p.quiver.objects) objects.push_back(atomset_json(sys, x));
  Json generators = Json::array();
  for (std::size_t i = 0; i < p.quiver.edges.size(); ++i) {
    Json g = nu_atom_json(sys, p.quiver.edges[i]);
    g["id"] = i;
    generators.push_back(std::move(g));
  }
  Json relations = Json::array();
  for (const Relation& r : p.relations)
    relations.push_back(Json{{"kind", r.kind}, {"source", atomset_json(sys, r.source)}, {"lhs", r.lhs}, {"rhs", r.rhs}});
  return Json{{"objects", objects}, {"generators", generators}, {"relations", relations}};
}

std::string presentation_text(const GarsideSystem& sys, const Presentation& p) {
  std::ostringstream out;
  out << "objects (" << p.quiver.objects.size() << "):";
  for (AtomSet x : p.quiver.objects) out << ' ' << format_atomset(sys, x);
  out << "\ngenerators (" << p.quiver.edges.size() << "):\n";
  for (std::size_t i = 0; i < p.quiver.edges.size(); ++i) {
    const NuAtom& a = p.quiver.edges[i];
    out << "  g" << i << " = " << (a.kind == NuKind::tau ? "tau(" : "nu(") << format_atomset(sys, a.source) << ", "
        << sys.atom_name(a.label) << ") = " << format_word(sys, a.element) << " : " << format_atomset(sys, a.source)
        << " -> " << format_atomset(sys, a.target) << '\n';
  }
  out << "relations (" << p.relations.size() << "):\n";
  for (const Relation& r : p.relations)
    out << "  [" << r.kind << "] at " << format_atomset(sys, r.source) << ": " << path_text(r.lhs) << " = "
        << path_text(r.rhs) << '\n';
  return out.str();
}

std::string presentation_rewriting(const GarsideSystem& sys, const Presentation& p) {
  std::ostringstream out;
  for (AtomSet x : p.quiver.objects) out << "object " << format_atomset(sys, x) << '\n';
  for (std::size_t i = 0; i < p.quiver.edges.size(); ++i) {
    const NuAtom& a = p.quiver.edges[i];
    out << "generator " << i << ' ' << format_atomset(sys, a.source) << " -> " << format_atomset(sys, a.target) << ' '
        << kind_name(a.kind) << ' ' << sys.atom_name(a.label) << " : " << format_word(sys, a.element) << '\n';
  }
  for (const Relation& r : p.relations) {
    out << "relation " << r.kind << ' ' << format_atomset(sys, r.source) << " :";
    for (std::size_t e : r.lhs) out << ' ' << e;
    out << " =";
    for (std::size_t e : r.rhs) out << ' ' << e;
    out << '\n';
  }
  return out.str();
}

Presentation presentation_from_json(const GarsideSystem& sys, const Json& doc) {
  if (!doc.is_object()) bad("presentation must be a JSON object");
  auto atomset = [&](const Json& v, const std::string& where) {
    AtomSet out;
    for (const std::string& name : string_list(v, where)) {
      auto a = sys.find_atom(name);
      if (!a) bad(where + ": unknown atom \"" + name + "\"");
      out.insert(*a);
    }
    return out;
  };
  Presentation p;
  for (const Json& o : field(doc, "objects")) p.quiver.objects.push_back(atomset(o, "object"));
  const Json& gens = field(doc, "generators");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const Json& g = gens[i];
    if (g.contains("id") && g.at("id") != i) bad("generator ids must be 0, 1, 2, ... in order");
    std::vector<AtomId> word;
    for (const std::string& name : string_list(field(g, "element"), "generator element")) {
      auto a = sys.find_atom(name);
      if (!a) bad("generator element: unknown atom \"" + name + "\"");
      word.push_back(*a);
    }
    if (!field(g, "label").is_string() || !field(g, "kind").is_string()) bad("generator label and kind must be strings");
    p.quiver.edges.push_back(read_generator(sys, atomset(field(g, "source"), "generator source"),
                                            g.at("label").get<std::string>(), normalize(sys, word),
                                            atomset(field(g, "target"), "generator target"),
                                            g.at("kind").get<std::string>(), i));
  }
  for (const Json& r : field(doc, "relations")) {
    Relation rel;
    try {
      rel.kind = field(r, "kind").get<int>();
      rel.lhs = field(r, "lhs").get<Path>();
      rel.rhs = field(r, "rhs").get<Path>();
    } catch (const Json::exception&) {
      bad("relation fields kind, lhs, rhs must be an integer and two arrays of generator ids");
    }
    rel.source = atomset(field(r, "source"), "relation source");
    p.relations.push_back(std::move(rel));
  }
  check_relations(p);
  return p;
}

Presentation presentation_from_rewriting(const GarsideSystem& sys, std::string_view text) {
  Presentation p;
  std::istringstream in{std::string(text)};
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    const auto t = tokens(line);
    if (t.empty() || t[0].starts_with('#')) continue;
    const std::string where = "line " + std::to_string(line_no);
    if (t[0] == "object" && t.size() == 2) {
      p.quiver.objects.push_back(parse_atomset(sys, t[1]));
    } else if (t[0] == "generator" && t.size() >= 8 && t[3] == "->" && t[7] == ":") {
      if (t[1] != std::to_string(p.quiver.edges.size())) bad(where + ": generator ids must be 0, 1, 2, ... in order");
      std::string element;
      for (std::size_t i = 8; i < t.size(); ++i) element += t[i] + ' ';
      p.quiver.edges.push_back(read_generator(sys, parse_atomset(sys, t[2]), t[6],
                                              normalize(sys, parse_word(sys, element)), parse_atomset(sys, t[4]), t[5],
                                              p.quiver.edges.size()));
    } else if (t[0] == "relation" && t.size() >= 4 && t[3] == ":") {
      Relation r;
      try {
        r.kind = std::stoi(t[1]);
        bool rhs = false;
        for (std::size_t i = 4; i < t.size(); ++i) {
          if (t[i] == "=") {
            rhs = true;
            continue;
          }
          (rhs ? r.rhs : r.lhs).push_back(std::stoul(t[i]));
        }
      } catch (const std::exception&) {
        bad(where + ": malformed relation");
      }
      r.source = parse_atomset(sys, t[2]);
      p.relations.push_back(std::move(r));
    } else {
      bad(where + ": unrecognized line");
    }
  }
  check_relations(p);
  return p;
}

Presentation load_presentation(const GarsideSystem& sys, const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open presentation file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    try {
      return presentation_from_json(sys, Json::parse(text));
    } catch (const Json::parse_error& e) {
      bad("presentation file " + path + " is not valid JSON: " + e.what());
    }
  }
  return presentation_from_rewriting(sys, text);
}

}  // namespace garside
