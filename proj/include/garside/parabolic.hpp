#ifndef GARSIDE_PARABOLIC_HPP
#define GARSIDE_PARABOLIC_HPP

#include <vector>

#include "garside/elements.hpp"

namespace garside {

/// A standard parabolic submonoid A⁺_X with its Garside element Δ_X.
struct ParabolicSet {
  AtomSet atoms;
  SimpleId delta;

  friend bool operator==(const ParabolicSet& a, const ParabolicSet& b) { return a.atoms == b.atoms; }
};

/// Every subset for Coxeter systems; the declared subsets for table systems.
bool is_parabolic(const GarsideSystem& sys, AtomSet x);
/// Throws NotAParabolic for undeclared subsets of table systems.
ParabolicSet make_parabolic(const GarsideSystem& sys, AtomSet x);
/// All parabolic objects, smallest first, then lexicographic in atom indices.
std::vector<AtomSet> parabolic_objects(const GarsideSystem& sys);

Positive delta_of(const GarsideSystem& sys, AtomSet x);
/// Join of the atoms of X on the given side, a simple.
SimpleId atom_join(const GarsideSystem& sys, AtomSet x, Side side);

/// True iff every greedy letter of p left-divides Δ_X.
bool contains(const GarsideSystem& sys, const ParabolicSet& x, const Positive& p);
/// The maximal left (right) divisor of p lying in A⁺_X.
Positive max_divisor_in(const GarsideSystem& sys, const ParabolicSet& x, const Positive& p, Side side);
/// Indecomposable components of X.
std::vector<AtomSet> components(const GarsideSystem& sys, AtomSet x);
/// The ∇ with Δ_X·∇ = Δ.
Positive global_nabla(const GarsideSystem& sys, const ParabolicSet& x);

}  // namespace garside

#endif
