// Construction of a Garside system from declared simples.
//
// Every record {id, word} declares a word for a simple; records sharing an
// id declare equal words, and these equalities are the defining relations.
// Products of simples are decided by a bounded congruence closure over all
// words of length at most twice the longest declared word. Beyond that
// bound the monoid is assumed noetherian and cancellative.

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

#include "detail.hpp"

namespace garside {

namespace {

constexpr std::size_t max_table_simples = 256;
constexpr std::size_t max_closure_words = 4'000'000;

std::string key_of(const std::vector<AtomId>& w) { return std::string(w.begin(), w.end()); }

class UnionFind {
public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

private:
  std::vector<std::size_t> parent_;
};

AtomSet parse_atom_set(const std::vector<std::string>& names, const std::vector<std::string>& atoms, const std::string& ctx) {
  AtomSet set;
  for (const auto& n : names) {
    auto it = std::find(atoms.begin(), atoms.end(), n);
    if (it == atoms.end()) throw Error(ErrorKind::invalid_input, "unknown atom '" + n + "' in " + ctx);
    set.insert(static_cast<AtomId>(it - atoms.begin()));
  }
  return set;
}

std::vector<std::string> split_key(const std::string& key) {
  std::vector<std::string> out;
  if (key.empty()) return out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = key.find(',', start);
    std::string part = key.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    part.erase(0, part.find_first_not_of(' '));
    part.erase(part.find_last_not_of(' ') + 1);
    if (!part.empty()) out.push_back(part);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

GarsideSystem TableBuilder::build(const TableSpec& spec) {
  const auto& atoms = spec.atoms;
  const std::size_t k = atoms.size();
  if (k == 0) throw Error(ErrorKind::invalid_input, "table system needs at least one atom");
  if (k > AtomSet::max_atoms) throw Error(ErrorKind::invalid_input, "too many atoms");
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (atoms[i] == atoms[j]) throw Error(ErrorKind::invalid_input, "duplicate atom name '" + atoms[i] + "'");

  // Group records by id in declaration order.
  std::vector<std::string> ids;
  std::vector<std::vector<std::vector<AtomId>>> words;
  for (const auto& rec : spec.simples) {
    std::vector<AtomId> w;
    for (const auto& name : rec.word) {
      auto it = std::find(atoms.begin(), atoms.end(), name);
      if (it == atoms.end()) throw Error(ErrorKind::invalid_input, "unknown atom '" + name + "' in simple '" + rec.id + "'");
      w.push_back(static_cast<AtomId>(it - atoms.begin()));
    }
    auto pos = std::find(ids.begin(), ids.end(), rec.id);
    if (pos == ids.end()) {
      ids.push_back(rec.id);
      words.push_back({std::move(w)});
    } else {
      words[pos - ids.begin()].push_back(std::move(w));
    }
  }
  const std::size_t n = ids.size();
  if (n == 0 || !words[0][0].empty() || words[0].size() != 1)
    throw Error(ErrorKind::invalid_input, "the first simple must be the identity with the empty word only");
  if (n > max_table_simples) throw Error(ErrorKind::invalid_input, "too many simples (max " + std::to_string(max_table_simples) + ")");
  for (std::size_t i = 1; i < n; ++i)
    for (const auto& w : words[i])
      if (w.empty()) throw Error(ErrorKind::invalid_input, "simple '" + ids[i] + "' has an empty word");

  auto delta_pos = std::find(ids.begin(), ids.end(), spec.delta);
  if (delta_pos == ids.end()) throw Error(ErrorKind::invalid_input, "delta '" + spec.delta + "' is not a declared simple");
  const auto delta = static_cast<SimpleId>(delta_pos - ids.begin());

  std::size_t max_len = 0;
  for (const auto& ws : words)
    for (const auto& w : ws) max_len = std::max(max_len, w.size());
  std::size_t delta_len = 0;
  for (const auto& w : words[delta]) delta_len = std::max(delta_len, w.size());
  if (delta_len != max_len) throw Error(ErrorKind::invalid_input, "delta must have the longest declared word");

  // Relations: first word of each simple against its other words.
  std::vector<std::pair<std::vector<AtomId>, std::vector<AtomId>>> relations;
  for (const auto& ws : words)
    for (std::size_t j = 1; j < ws.size(); ++j) relations.emplace_back(ws[0], ws[j]);

  // Bounded congruence closure on all words of length <= bound.
  const std::size_t bound = 2 * max_len;
  std::vector<std::vector<AtomId>> all{{}};
  std::unordered_map<std::string, std::size_t> index{{key_of({}), 0}};
  for (std::size_t begin = 0, len = 0; len < bound; ++len) {
    std::size_t end = all.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (AtomId a = 0; a < k; ++a) {
        auto w = all[i];
        w.push_back(a);
        index.emplace(key_of(w), all.size());
        all.push_back(std::move(w));
        if (all.size() > max_closure_words) throw Error(ErrorKind::invalid_input, "table too large for bounded closure");
      }
    }
    begin = end;
  }
  UnionFind uf(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    const auto& w = all[i];
    for (const auto& [l, r] : relations) {
      for (int dir = 0; dir < 2; ++dir) {
        const auto& from = dir == 0 ? l : r;
        const auto& to = dir == 0 ? r : l;
        if (from.size() > w.size() || w.size() - from.size() + to.size() > bound) continue;
        for (std::size_t p = 0; p + from.size() <= w.size(); ++p) {
          if (!std::equal(from.begin(), from.end(), w.begin() + static_cast<std::ptrdiff_t>(p))) continue;
          std::vector<AtomId> v(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
          v.insert(v.end(), to.begin(), to.end());
          v.insert(v.end(), w.begin() + static_cast<std::ptrdiff_t>(p + from.size()), w.end());
          uf.unite(i, index.at(key_of(v)));
        }
      }
    }
  }

  std::map<std::size_t, SimpleId> class_simple;
  for (SimpleId s = 0; s < n; ++s) {
    for (const auto& w : words[s]) {
      std::size_t c = uf.find(index.at(key_of(w)));
      auto [it, inserted] = class_simple.emplace(c, s);
      if (!inserted && it->second != s)
        throw Error(ErrorKind::invalid_input, "simples '" + ids[it->second] + "' and '" + ids[s] + "' are equal under the declared relations");
    }
  }
  auto lookup = [&](const std::vector<AtomId>& w) -> std::int32_t {
    auto it = class_simple.find(uf.find(index.at(key_of(w))));
    return it == class_simple.end() ? -1 : static_cast<std::int32_t>(it->second);
  };

  std::vector<SimpleId> atom_simple(k);
  for (AtomId a = 0; a < k; ++a) {
    std::int32_t s = lookup({a});
    if (s < 0) throw Error(ErrorKind::invalid_input, "atom '" + atoms[a] + "' is not declared as a simple");
    atom_simple[a] = static_cast<SimpleId>(s);
  }
  // Divisors of simples must be simple.
  for (SimpleId s = 0; s < n; ++s) {
    for (const auto& w : words[s]) {
      for (std::size_t p = 1; p < w.size(); ++p) {
        std::vector<AtomId> prefix(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
        std::vector<AtomId> suffix(w.begin() + static_cast<std::ptrdiff_t>(p), w.end());
        if (lookup(prefix) < 0 || lookup(suffix) < 0)
          throw Error(ErrorKind::invalid_input, "a divisor of simple '" + ids[s] + "' is not declared as a simple");
      }
    }
  }

  auto data = std::make_unique<detail::TableData>();
  auto& t = *data;
  t.n = n;
  t.product.assign(n * n, -1);
  t.quot_left.assign(n * n, -1);
  t.quot_right.assign(n * n, -1);
  for (SimpleId a = 0; a < n; ++a) {
    for (SimpleId b = 0; b < n; ++b) {
      auto w = words[a][0];
      w.insert(w.end(), words[b][0].begin(), words[b][0].end());
      std::int32_t c = lookup(w);
      t.product[a * n + b] = c;
      if (c < 0) continue;
      auto cc = static_cast<SimpleId>(c);
      if (t.quot_left[a * n + cc] >= 0 && t.quot_left[a * n + cc] != static_cast<std::int32_t>(b))
        throw Error(ErrorKind::cancellation_failure,
                    "'" + ids[a] + "' times '" + ids[b] + "' equals '" + ids[a] + "' times '" + ids[t.quot_left[a * n + cc]] + "'");
      if (t.quot_right[b * n + cc] >= 0 && t.quot_right[b * n + cc] != static_cast<std::int32_t>(a))
        throw Error(ErrorKind::cancellation_failure,
                    "'" + ids[a] + "' times '" + ids[b] + "' equals '" + ids[t.quot_right[b * n + cc]] + "' times '" + ids[b] + "'");
      t.quot_left[a * n + cc] = static_cast<std::int32_t>(b);
      t.quot_right[b * n + cc] = static_cast<std::int32_t>(a);
    }
  }

  t.comp_left.resize(n);
  t.comp_right.resize(n);
  for (SimpleId a = 0; a < n; ++a) {
    std::int32_t l = t.quot_left[a * n + delta];
    std::int32_t r = t.quot_right[a * n + delta];
    if (l < 0) throw Error(ErrorKind::complement_missing, "no simple c with '" + ids[a] + "' * c = '" + ids[delta] + "'");
    if (r < 0) throw Error(ErrorKind::complement_missing, "no simple c with c * '" + ids[a] + "' = '" + ids[delta] + "'");
    t.comp_left[a] = static_cast<SimpleId>(l);
    t.comp_right[a] = static_cast<SimpleId>(r);
  }

  auto lattice = [&](const std::vector<std::int32_t>& quot, bool meet, std::vector<SimpleId>& out, const char* side) {
    out.assign(n * n, 0);
    for (SimpleId a = 0; a < n; ++a) {
      for (SimpleId b = 0; b < n; ++b) {
        std::vector<SimpleId> bounds;
        for (SimpleId c = 0; c < n; ++c) {
          bool ok = meet ? (quot[c * n + a] >= 0 && quot[c * n + b] >= 0) : (quot[a * n + c] >= 0 && quot[b * n + c] >= 0);
          if (ok) bounds.push_back(c);
        }
        std::int32_t best = -1;
        for (SimpleId c : bounds) {
          bool extremal = std::all_of(bounds.begin(), bounds.end(),
                                      [&](SimpleId d) { return meet ? quot[d * n + c] >= 0 : quot[c * n + d] >= 0; });
          if (extremal) {
            best = static_cast<std::int32_t>(c);
            break;
          }
        }
        if (best < 0)
          throw Error(ErrorKind::not_a_lattice, std::string("no ") + side + (meet ? " gcd" : " lcm") + " for '" + ids[a] + "' and '" + ids[b] + "'");
        out[a * n + b] = static_cast<SimpleId>(best);
      }
    }
  };
  lattice(t.quot_left, true, t.meet_left, "left");
  lattice(t.quot_right, true, t.meet_right, "right");
  lattice(t.quot_left, false, t.join_left, "left");
  lattice(t.quot_right, false, t.join_right, "right");

  GarsideSystem sys;
  sys.provenance_ = Provenance::table;
  sys.atom_names_ = atoms;
  sys.words_.resize(n);
  for (SimpleId s = 0; s < n; ++s) sys.words_[s] = words[s][0];
  sys.atom_simple_ = atom_simple;
  sys.delta_ = delta;
  sys.phi_.resize(n);
  sys.phi_inv_.assign(n, 0);
  std::vector<bool> hit(n, false);
  for (SimpleId a = 0; a < n; ++a) {
    // (a\Δ)\Δ = Δ⁻¹·a·Δ
    sys.phi_[a] = t.comp_left[t.comp_left[a]];
    if (hit[sys.phi_[a]]) throw Error(ErrorKind::invalid_input, "Delta-conjugation is not injective on simples");
    hit[sys.phi_[a]] = true;
    sys.phi_inv_[sys.phi_[a]] = a;
  }
  for (AtomId a = 0; a < k; ++a)
    if (words[sys.phi_[atom_simple[a]]][0].size() != 1 || lookup(words[sys.phi_[atom_simple[a]]][0]) < 0 ||
        std::find(atom_simple.begin(), atom_simple.end(), sys.phi_[atom_simple[a]]) == atom_simple.end())
      throw Error(ErrorKind::invalid_input, "Delta-conjugation does not map atom '" + atoms[a] + "' to an atom");

  const AtomSet full = AtomSet::first(k);
  if (spec.parabolics) {
    std::vector<AtomSet> list;
    for (const auto& decl : *spec.parabolics) {
      AtomSet x = parse_atom_set(decl.atoms, atoms, "parabolic declaration");
      if (std::find(list.begin(), list.end(), x) != list.end()) throw Error(ErrorKind::invalid_input, "duplicate parabolic declaration");
      list.push_back(x);
      if (decl.components) {
        std::vector<AtomSet> comps;
        AtomSet covered;
        for (const auto& c : *decl.components) {
          AtomSet cs = parse_atom_set(c, atoms, "component declaration");
          if (!(cs & covered).empty() || !cs.is_subset_of(x)) throw Error(ErrorKind::invalid_input, "components must partition their parabolic");
          covered = covered | cs;
          comps.push_back(cs);
        }
        if (covered != x) throw Error(ErrorKind::invalid_input, "components must partition their parabolic");
        sys.components_[x] = comps;
      }
    }
    std::sort(list.begin(), list.end(), object_less);
    sys.parabolics_ = list;
  } else {
    sys.parabolics_ = std::vector<AtomSet>{AtomSet{}, full};
  }
  sys.components_.emplace(AtomSet{}, std::vector<AtomSet>{});

  auto resolve_nu = [&](const NuTableSpec& table) {
    NuValues values;
    for (const auto& [key, row] : table) {
      AtomSet x = parse_atom_set(split_key(key), atoms, "nu table key '" + key + "'");
      auto& entry = values[x];
      entry.assign(k, std::nullopt);
      for (const auto& [atom, word] : row) {
        auto it = std::find(atoms.begin(), atoms.end(), atom);
        if (it == atoms.end()) throw Error(ErrorKind::invalid_input, "unknown atom '" + atom + "' in nu table");
        std::vector<AtomId> w;
        for (const auto& name : word) {
          auto jt = std::find(atoms.begin(), atoms.end(), name);
          if (jt == atoms.end()) throw Error(ErrorKind::invalid_input, "unknown atom '" + name + "' in nu table");
          w.push_back(static_cast<AtomId>(jt - atoms.begin()));
        }
        entry[it - atoms.begin()] = std::move(w);
      }
    }
    return values;
  };
  if (spec.nu_table) sys.nu_plain_ = resolve_nu(*spec.nu_table);
  if (spec.nu_tilde_table) sys.nu_tilde_ = resolve_nu(*spec.nu_tilde_table);

  sys.table_ = std::move(data);
  return sys;
}

}  // namespace garside
