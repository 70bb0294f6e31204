#ifndef GARSIDE_QUASICENTER_HPP
#define GARSIDE_QUASICENTER_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "garside/elements.hpp"

namespace garside {

// Every function here works inside the submonoid generated by `scope`
// (a parabolic), which defaults to the whole monoid.

/// Left: the least x with g |_L x and x |_L s·x for every atom s.
/// Right: the mirror, g |_R x and x |_R x·s.
Positive delta_g(const GarsideSystem& sys, const Positive& g, Side side);
Positive delta_g(const GarsideSystem& sys, const Positive& g, Side side, AtomSet scope);

/// Alternates left and right saturation starting on `first` until stable.
Positive tau_sequence(const GarsideSystem& sys, const Positive& g, Side first, AtomSet scope);
/// The least quasi-central multiple of g. Both alternation orders are
/// computed and required to agree.
Positive tau(const GarsideSystem& sys, const Positive& g);
Positive tau(const GarsideSystem& sys, const Positive& g, AtomSet scope);

/// x·G⁺ = G⁺·x, tested on atoms: x |_L s·x and x |_R x·s for all s.
bool is_quasi_central(const GarsideSystem& sys, const Positive& x);
bool is_quasi_central(const GarsideSystem& sys, const Positive& x, AtomSet scope);

struct QZBasis {
  std::vector<Positive> basis;
  std::map<AtomId, std::size_t> atom_map;
};

/// Distinct τ_s for the atoms of the scope, ordered by first atom.
QZBasis qz_basis(const GarsideSystem& sys);
QZBasis qz_basis(const GarsideSystem& sys, AtomSet scope);
/// Failures of the basis invariants; empty when sound.
std::vector<std::string> check_qz_basis(const GarsideSystem& sys, const QZBasis& qz, AtomSet scope);

/// Sorted multiset of basis indices whose product is g, or empty optional
/// when g is not quasi-central.
std::optional<std::vector<std::size_t>> qz_decompose(const GarsideSystem& sys, const QZBasis& qz, const Positive& g);

}  // namespace garside

#endif
