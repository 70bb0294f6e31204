#include "garside/parabolic.hpp"

#include <algorithm>

namespace garside {

bool is_parabolic(const GarsideSystem& sys, AtomSet x) {
  if (!x.is_subset_of(sys.all_atoms())) return false;
  const auto& declared = sys.declared_parabolics();
  if (!declared) return true;
  return std::find(declared->begin(), declared->end(), x) != declared->end();
}

SimpleId atom_join(const GarsideSystem& sys, AtomSet x, Side side) {
  SimpleId acc = GarsideSystem::identity();
  for (AtomId a : x.members()) acc = sys.join(acc, sys.atom_simple(a), side);
  return acc;
}

ParabolicSet make_parabolic(const GarsideSystem& sys, AtomSet x) {
  if (!is_parabolic(sys, x)) {
    std::string names;
    for (AtomId a : x.members()) names += (names.empty() ? "" : ",") + (a < sys.atom_count() ? sys.atom_name(a) : "?");
    throw Error(ErrorKind::not_a_parabolic, "{" + names + "} is not a declared parabolic");
  }
  return ParabolicSet{x, atom_join(sys, x, Side::left)};
}

std::vector<AtomSet> parabolic_objects(const GarsideSystem& sys) {
  std::vector<AtomSet> out;
  if (const auto& declared = sys.declared_parabolics()) {
    out = *declared;
  } else {
    const std::uint64_t count = std::uint64_t{1} << sys.atom_count();
    for (std::uint64_t bits = 0; bits < count; ++bits) out.emplace_back(bits);
  }
  std::sort(out.begin(), out.end(), object_less);
  return out;
}

Positive delta_of(const GarsideSystem& sys, AtomSet x) { return from_simple(sys, make_parabolic(sys, x).delta); }

bool contains(const GarsideSystem& sys, const ParabolicSet& x, const Positive& p) {
  return std::all_of(p.letters().begin(), p.letters().end(),
                     [&](SimpleId s) { return sys.divides(s, x.delta, Side::left); });
}

Positive max_divisor_in(const GarsideSystem& sys, const ParabolicSet& x, const Positive& p, Side side) {
  // The head of the maximal X-divisor of r is Δ_X ∧ (head of r).
  Positive acc;
  Positive rest = p;
  while (!rest.empty()) {
    SimpleId head = side == Side::left ? rest.head() : right_greedy(sys, rest).back();
    SimpleId m = sys.meet(x.delta, head, side);
    if (m == GarsideSystem::identity()) break;
    Positive piece = from_simple(sys, m);
    rest = quotient(sys, piece, rest, side);
    acc = side == Side::left ? multiply(sys, acc, piece) : multiply(sys, piece, acc);
  }
  return acc;
}

std::vector<AtomSet> components(const GarsideSystem& sys, AtomSet x) {
  if (const auto& m = sys.coxeter_matrix()) {
    std::vector<AtomSet> out;
    AtomSet left = x;
    while (!left.empty()) {
      AtomSet comp = AtomSet::single(left.members().front());
      bool grown = true;
      while (grown) {
        grown = false;
        for (AtomId a : comp.members())
          for (AtomId b : left.members())
            if (!comp.contains(b) && (*m)[a][b] >= 3) {
              comp.insert(b);
              grown = true;
            }
      }
      out.push_back(comp);
      left = AtomSet(left.bits() & ~comp.bits());
    }
    return out;
  }
  if (x.empty()) return {};
  auto declared = sys.declared_components(x);
  if (!declared) throw Error(ErrorKind::components_undeclared, "no component declaration for this parabolic");
  return *declared;
}

Positive global_nabla(const GarsideSystem& sys, const ParabolicSet& x) {
  return from_simple(sys, sys.quotient(x.delta, sys.delta(), Side::left));
}

}  // namespace garside
