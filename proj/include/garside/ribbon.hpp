#ifndef GARSIDE_RIBBON_HPP
#define GARSIDE_RIBBON_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "garside/nu.hpp"
#include "garside/quasicenter.hpp"

namespace garside {

struct RibbonMorphism {
  AtomSet source;
  GroupEl element;
  AtomSet target;
};

/// Objects are the parabolics in presentation order; edges are the plain ν
/// atoms grouped by source in that order. Edge indices are generator ids.
struct Quiver {
  std::vector<AtomSet> objects;
  std::vector<NuAtom> edges;

  std::vector<std::size_t> edges_from(AtomSet x) const;
};

using Path = std::vector<std::size_t>;

Quiver atom_quiver(const GarsideSystem& sys);

/// Product of the edge elements; the empty path evaluates to the identity.
Positive evaluate_path(const GarsideSystem& sys, const Quiver& q, const Path& path);
/// Whether consecutive edges compose, starting at `start`.
bool path_composes(const Quiver& q, AtomSet start, const Path& path);
AtomSet path_target(const Quiver& q, AtomSet start, const Path& path);

/// p = g₁·g₂ with g₁ in QZ(A⁺_X) and g₂ a product of ν-type atoms.
/// Throws NotARibbon when p is not a positive ribbon out of X.
std::pair<Positive, Positive> factor_qz_nu(const GarsideSystem& sys, const Quiver& q, const Positive& p, AtomSet x);

/// All edge paths from `start` whose product is `target`, in lexicographic
/// edge order. With nu_only, τ-type edges are skipped.
std::vector<Path> representing_paths(const GarsideSystem& sys, const Quiver& q, AtomSet start, const Positive& target,
                                     bool nu_only = true);

/// Factorizations of ν(X,s) ∨ ν(X,t) into ν-type atoms out of X. Requires
/// both atoms to be ν-type and distinct (InvalidInput otherwise).
std::vector<Path> ribbon_join_paths(const GarsideSystem& sys, const Quiver& q, AtomSet x, AtomId s, AtomId t);

/// Edge paths of any kind evaluating to ν(X,s) ∨ ν(X,t) from X.
std::size_t count_representing_paths(const GarsideSystem& sys, const Quiver& q, AtomSet x, AtomId s, AtomId t);

struct Relation {
  Path lhs;
  Path rhs;
  int kind = 0;  // 1 τ commutation, 2 τ passing a ν atom, 3 ν join
  AtomSet source;
};

struct Presentation {
  Quiver quiver;
  std::vector<Relation> relations;
};

/// Every relation is validated by evaluation; a failure is a logic error.
Presentation presentation(const GarsideSystem& sys);
/// The same presentation without its relations of the given kind.
Presentation without_kind(const Presentation& p, int kind);

struct Shakers {
  std::vector<std::size_t> sh_edges;  // edge ids of the self-loops at X
  AtomSet sh;                         // labels s with ν_X(s) a shaker
  AtomSet sh_tilde;                   // labels s with ν̃_X(s) a shaker
  /// M[u][v] over sh_edges: length of the shortest shaker path from u to
  /// the join of u and v. Present when sh = s̃h and sh is parabolic.
  std::optional<std::vector<std::vector<int>>> matrix;
};

Shakers shakers(const GarsideSystem& sys, const Quiver& q, AtomSet x);

struct CheckLine {
  std::string name;
  bool ok = false;
  std::string detail;
};

/// Garside checks on the shaker vertex group, with the product split tested
/// on all shaker paths of length at most `level`.
std::vector<CheckLine> shaker_garside_check(const GarsideSystem& sys, const Quiver& q, AtomSet x, std::size_t level = 4);

struct ConjDecomposition {
  GroupEl a;                 // in A_X
  RibbonMorphism r;          // r.element = numerator · denominator⁻¹
  Positive numerator;        // ν path out of X
  Positive denominator;      // ν path out of r.target
};

/// g = a·r with a in A_X and r a ν-ribbon, when g conjugates X onto a parabolic.
std::optional<ConjDecomposition> conj_decompose(const GarsideSystem& sys, const Quiver& q, const GroupEl& g, AtomSet x);

/// True iff both parts of the left fraction of g lie in A⁺_X.
bool in_parabolic_group(const GarsideSystem& sys, const GroupEl& g, AtomSet x);

}  // namespace garside

#endif
