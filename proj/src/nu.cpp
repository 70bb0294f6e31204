#include "garside/nu.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace garside {
namespace {

// The atom y with x·p = p·y (left side) or p·x = y·p (right side).
std::optional<AtomId> conjugate_atom(const GarsideSystem& sys, const Positive& p, AtomId x, Side side) {
  const Positive a = atom_element(sys, x);
  const Positive moved = side == Side::left ? multiply(sys, a, p) : multiply(sys, p, a);
  auto rest = try_quotient(sys, p, moved, side);
  if (!rest || rest->size() != 1) return std::nullopt;
  return sys.simple_atom(rest->head());
}

std::optional<AtomSet> conjugate_positive(const GarsideSystem& sys, const Positive& p, AtomSet x, Side side) {
  AtomSet out;
  for (AtomId a : x.members()) {
    auto y = conjugate_atom(sys, p, a, side);
    if (!y) return std::nullopt;
    out.insert(*y);
  }
  if (out.size() != x.size() || !is_parabolic(sys, out)) return std::nullopt;
  return out;
}

std::string set_name(const GarsideSystem& sys, AtomSet x) {
  std::string out = "{";
  for (AtomId a : x.members()) out += (out.size() > 1 ? "," : "") + sys.atom_name(a);
  return out + "}";
}

Positive component_delta(const GarsideSystem& sys, AtomSet x, AtomId s) {
  for (AtomSet comp : components(sys, x))
    if (comp.contains(s)) return delta_of(sys, comp);
  throw Error(ErrorKind::invalid_input, "atom not in any component");
}

}  // namespace

std::optional<AtomSet> is_positive_ribbon(const GarsideSystem& sys, const Positive& p, AtomSet x) {
  return conjugate_positive(sys, p, x, Side::left);
}

std::optional<AtomSet> ribbon_source(const GarsideSystem& sys, const Positive& p, AtomSet x) {
  return conjugate_positive(sys, p, x, Side::right);
}

Positive nu_element(const GarsideSystem& sys, AtomSet x, AtomId s, NuVariant variant) {
  if (s >= sys.atom_count()) throw Error(ErrorKind::invalid_input, "atom index out of range");
  const bool tilde = variant == NuVariant::tilde;
  if (sys.provenance() == Provenance::coxeter) {
    if (x.contains(s)) return component_delta(sys, x, s);
    AtomSet xs = x;
    xs.insert(s);
    const Positive dx = delta_of(sys, x);
    const Positive dxs = delta_of(sys, xs);
    return quotient(sys, dx, dxs, tilde ? Side::right : Side::left);
  }
  make_parabolic(sys, x);
  const auto& table = sys.nu_table(tilde);
  const std::string which = tilde ? "nu_tilde_table" : "nu_table";
  if (!table) throw Error(ErrorKind::nu_table_missing, "system declares no " + which);
  auto row = table->find(x);
  if (row == table->end() || !row->second.at(s))
    throw Error(ErrorKind::nu_table_missing,
                which + " has no entry for " + set_name(sys, x) + " and atom " + sys.atom_name(s));
  return normalize(sys, *row->second.at(s));
}

NuAtom nu(const GarsideSystem& sys, AtomSet x, AtomId s, NuVariant variant) {
  NuAtom out;
  out.label = s;
  out.element = nu_element(sys, x, s, variant);
  std::optional<AtomSet> other;
  if (variant == NuVariant::plain) {
    out.source = x;
    other = is_positive_ribbon(sys, out.element, x);
    if (other) out.target = *other;
  } else {
    out.target = x;
    other = ribbon_source(sys, out.element, x);
    if (other) out.source = *other;
  }
  if (!other || out.element.empty())
    throw Error(ErrorKind::invalid_nu_value, "value at " + set_name(sys, x) + " for atom " + sys.atom_name(s) +
                                                 " is not a nontrivial ribbon");
  // A τ atom at X lies in A⁺_X, where it fixes the set X.
  const ParabolicSet px = make_parabolic(sys, x);
  out.kind = contains(sys, px, out.element) ? NuKind::tau : NuKind::nu;
  if (out.kind == NuKind::tau && out.source != out.target)
    throw Error(ErrorKind::invalid_nu_value, "τ value at " + set_name(sys, x) + " does not fix the parabolic");
  return out;
}

std::vector<NuAtom> classify(const GarsideSystem& sys, AtomSet x, NuVariant variant) {
  std::vector<NuAtom> out;
  for (AtomId s = 0; s < sys.atom_count(); ++s) {
    NuAtom a = nu(sys, x, s, variant);
    bool seen = std::any_of(out.begin(), out.end(), [&](const NuAtom& b) { return b.element == a.element; });
    if (!seen) out.push_back(std::move(a));
  }
  return out;
}

std::vector<NuViolation> verify_nu_axioms(const GarsideSystem& sys, std::size_t level) {
  std::vector<NuViolation> out;
  const std::vector<Positive> all = enumerate_elements(sys, level);
  const std::size_t n = sys.atom_count();

  for (AtomSet x : parabolic_objects(sys)) {
    for (NuVariant variant : {NuVariant::plain, NuVariant::tilde}) {
      const bool tilde = variant == NuVariant::tilde;
      const Side side = tilde ? Side::right : Side::left;
      const char* name = tilde ? "ν̃" : "ν";
      auto is_ribbon = [&](const Positive& p) {
        return tilde ? ribbon_source(sys, p, x).has_value() : is_positive_ribbon(sys, p, x).has_value();
      };
      auto report = [&](int axiom, AtomId s, std::optional<AtomId> t, std::string detail) {
        out.push_back(NuViolation{axiom, variant, x, s, t, std::move(detail)});
      };

      std::vector<std::optional<Positive>> values(n);
      for (AtomId s = 0; s < n; ++s) {
        try {
          values[s] = nu_element(sys, x, s, variant);
        } catch (const Error& e) {
          report(1, s, std::nullopt, e.what());
        }
      }

      // 1: the value is a ribbon with no proper nontrivial ribbon divisor on its side.
      for (AtomId s = 0; s < n; ++s) {
        if (!values[s]) continue;
        const Positive& e = *values[s];
        if (e.empty() || !is_ribbon(e)) {
          report(1, s, std::nullopt, std::string(name) + " value is not a nontrivial ribbon");
          continue;
        }
        for (const Positive& d : divisors(sys, e, side)) {
          if (d.empty() || d == e) continue;
          if (is_ribbon(d)) {
            report(1, s, std::nullopt, std::string(name) + " value has a proper ribbon divisor");
            break;
          }
        }
      }

      // 2: every ribbon divisible by s is divisible by the value of s.
      for (const Positive& g : all) {
        if (g.empty() || !is_ribbon(g)) continue;
        for (AtomId s = 0; s < n; ++s) {
          if (!values[s] || !divides(sys, atom_element(sys, s), g, side)) continue;
          if (!divides(sys, *values[s], g, side)) {
            report(2, s, std::nullopt, std::string(name) + " value does not divide a ribbon divisible by the atom");
          }
        }
      }

      // 3: joins of two values are ribbons.
      for (AtomId s = 0; s < n; ++s) {
        for (AtomId t = s + 1; t < n; ++t) {
          if (!values[s] || !values[t]) continue;
          if (!is_ribbon(join(sys, *values[s], *values[t], side)))
            report(3, s, t, std::string(name) + " values have a join that is not a ribbon");
        }
      }
    }
  }
  // One report per (axiom, variant, object, s, t) is enough.
  auto key = [](const NuViolation& v) {
    return std::tuple(v.axiom, static_cast<int>(v.variant), v.object.bits(), v.s, v.t.value_or(~AtomId{0}));
  };
  std::stable_sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
  out.erase(std::unique(out.begin(), out.end(), [&](const auto& a, const auto& b) { return key(a) == key(b); }),
            out.end());
  return out;
}

}  // namespace garside
