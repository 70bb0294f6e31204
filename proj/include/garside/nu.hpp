#ifndef GARSIDE_NU_HPP
#define GARSIDE_NU_HPP

#include <optional>
#include <string>
#include <vector>

#include "garside/parabolic.hpp"

namespace garside {

enum class NuVariant { plain, tilde };
enum class NuKind { tau, nu };

/// A ribbon atom. Plain atoms ν_X(s) leave X; tilde atoms ν̃_X(s) enter X.
struct NuAtom {
  AtomSet source;
  AtomId label = 0;
  Positive element;
  AtomSet target;
  NuKind kind = NuKind::nu;

  friend bool operator==(const NuAtom&, const NuAtom&) = default;
};

/// Target Y of p as a positive ribbon out of X (p⁻¹Xp = Y, Y parabolic).
std::optional<AtomSet> is_positive_ribbon(const GarsideSystem& sys, const Positive& p, AtomSet x);
/// Source Y of p as a positive ribbon into X (pXp⁻¹ = Y, Y parabolic).
std::optional<AtomSet> ribbon_source(const GarsideSystem& sys, const Positive& p, AtomSet x);

/// The raw ν value: computed for Coxeter systems, looked up for tables.
/// Throws NuTableMissing when a table lacks the entry.
Positive nu_element(const GarsideSystem& sys, AtomSet x, AtomId s, NuVariant variant);

/// ν_X(s) or ν̃_X(s) with endpoints and kind. Throws InvalidNuValue if a
/// table value is not a ribbon with the right endpoint.
NuAtom nu(const GarsideSystem& sys, AtomSet x, AtomId s, NuVariant variant);

/// Distinct atoms at X, by first label. Plain atoms start at X, tilde atoms end there.
std::vector<NuAtom> classify(const GarsideSystem& sys, AtomSet x, NuVariant variant = NuVariant::plain);

struct NuViolation {
  int axiom = 0;  // 1 atomicity, 2 divisibility absorption, 3 join closure
  NuVariant variant = NuVariant::plain;
  AtomSet object;
  AtomId s = 0;
  std::optional<AtomId> t;
  std::string detail;
};

/// Checks the three ν-function axioms (and their ν̃ mirrors) on every
/// parabolic, using all ribbons of atom-length at most `level`.
std::vector<NuViolation> verify_nu_axioms(const GarsideSystem& sys, std::size_t level);

}  // namespace garside

#endif
