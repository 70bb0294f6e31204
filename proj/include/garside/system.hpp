#ifndef GARSIDE_SYSTEM_HPP
#define GARSIDE_SYSTEM_HPP

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "garside/core.hpp"

namespace garside {

/// Coxeter matrix input. An entry of 0 stands for infinity and is rejected.
struct CoxeterSpec {
  std::vector<std::string> atoms;
  std::vector<std::vector<int>> matrix;
};

/// One declared word of a simple. Several records may share an id; their
/// words are then equal in the monoid, which is how relations are given.
struct SimpleRecord {
  std::string id;
  std::vector<std::string> word;
};

struct ParabolicDecl {
  std::vector<std::string> atoms;
  std::optional<std::vector<std::vector<std::string>>> components;
};

/// parabolic key ("a,b", "" for the empty set) -> atom -> element word
using NuTableSpec = std::map<std::string, std::map<std::string, std::vector<std::string>>>;

struct TableSpec {
  std::vector<std::string> atoms;
  std::vector<SimpleRecord> simples;
  std::string delta;
  std::optional<NuTableSpec> nu_table;
  std::optional<NuTableSpec> nu_tilde_table;
  std::optional<std::vector<ParabolicDecl>> parabolics;
};

enum class Provenance { coxeter, table };

/// Resolved per-parabolic ν values: entry [atom] is the element word, if declared.
using NuValues = std::map<AtomSet, std::vector<std::optional<std::vector<AtomId>>>, AtomSetKeyLess>;

namespace detail {
struct CoxeterData;
struct TableData;
}  // namespace detail

/// The finite combinatorial core of a Garside monoid: simples, Δ, both
/// divisibility lattices on simples, complements and the Δ-conjugation
/// automorphism. Immutable after construction.
class GarsideSystem {
public:
  static GarsideSystem from_coxeter(const CoxeterSpec& spec, std::size_t cap = 50000);
  static GarsideSystem from_table(const TableSpec& spec);

  GarsideSystem(GarsideSystem&&) noexcept;
  GarsideSystem& operator=(GarsideSystem&&) noexcept;
  ~GarsideSystem();

  Provenance provenance() const { return provenance_; }

  std::size_t atom_count() const { return atom_names_.size(); }
  const std::string& atom_name(AtomId a) const { return atom_names_.at(a); }
  const std::vector<std::string>& atom_names() const { return atom_names_; }
  std::optional<AtomId> find_atom(std::string_view name) const;
  AtomSet all_atoms() const { return AtomSet::first(atom_count()); }

  std::size_t simple_count() const { return words_.size(); }
  static constexpr SimpleId identity() { return 0; }
  SimpleId delta() const { return delta_; }
  SimpleId atom_simple(AtomId a) const { return atom_simple_.at(a); }
  /// The atom a simple stands for, if it is one.
  std::optional<AtomId> simple_atom(SimpleId s) const;
  /// Canonical word (ShortLex for Coxeter systems, first declared word for tables).
  const std::vector<AtomId>& simple_word(SimpleId s) const { return words_.at(s); }
  std::size_t simple_length(SimpleId s) const { return words_.at(s).size(); }

  /// a·b when it is simple.
  std::optional<SimpleId> product(SimpleId a, SimpleId b) const;
  bool divides(SimpleId a, SimpleId b, Side side) const;
  /// Left: c with a·c = b. Right: c with c·a = b. Requires divides(a, b, side).
  SimpleId quotient(SimpleId a, SimpleId b, Side side) const;
  SimpleId meet(SimpleId a, SimpleId b, Side side) const;
  SimpleId join(SimpleId a, SimpleId b, Side side) const;
  /// Left: a\Δ. Right: Δ/a.
  SimpleId complement(SimpleId a, Side side) const;
  /// Δ⁻¹·a·Δ.
  SimpleId phi(SimpleId a) const { return phi_.at(a); }
  SimpleId phi_inverse(SimpleId a) const { return phi_inv_.at(a); }

  /// Finds the simple spelled by a word, if the word spells one.
  std::optional<SimpleId> simple_from_word(std::span<const AtomId> word) const;

  const std::optional<std::vector<std::vector<int>>>& coxeter_matrix() const { return coxeter_matrix_; }

  /// Declared parabolic subsets (table systems); empty optional for Coxeter systems.
  const std::optional<std::vector<AtomSet>>& declared_parabolics() const { return parabolics_; }
  /// Declared components of a parabolic (table systems).
  std::optional<std::vector<AtomSet>> declared_components(AtomSet x) const;
  const std::optional<NuValues>& nu_table(bool tilde) const { return tilde ? nu_tilde_ : nu_plain_; }

  /// Exhaustive check of the simple-level invariants. Returns the list of
  /// failures, empty when the structure is sound. Cubic in simple_count().
  std::vector<std::string> check_invariants() const;

private:
  GarsideSystem();

  Provenance provenance_ = Provenance::table;
  std::vector<std::string> atom_names_;
  std::vector<std::vector<AtomId>> words_;
  std::vector<SimpleId> atom_simple_;
  SimpleId delta_ = 0;
  std::vector<SimpleId> phi_;
  std::vector<SimpleId> phi_inv_;
  std::optional<std::vector<std::vector<int>>> coxeter_matrix_;
  std::optional<std::vector<AtomSet>> parabolics_;
  std::map<AtomSet, std::vector<AtomSet>, AtomSetKeyLess> components_;
  std::optional<NuValues> nu_plain_;
  std::optional<NuValues> nu_tilde_;
  std::unique_ptr<detail::CoxeterData> coxeter_;
  std::unique_ptr<detail::TableData> table_;

  friend class CoxeterBuilder;
  friend class TableBuilder;
};

}  // namespace garside

#endif
