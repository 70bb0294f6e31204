#ifndef GARSIDE_CORE_HPP
#define GARSIDE_CORE_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace garside {

/// Dense index of an atom, from 0.
using AtomId = std::uint32_t;

/// Canonical id of a simple element. Id 0 is always the identity.
using SimpleId = std::uint32_t;

enum class Side { left, right };

constexpr Side opposite(Side side) { return side == Side::left ? Side::right : Side::left; }

/// A set of atoms, at most 64 per system.
class AtomSet {
public:
  static constexpr std::size_t max_atoms = 64;

  constexpr AtomSet() = default;
  constexpr explicit AtomSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr AtomSet single(AtomId a) { return AtomSet(std::uint64_t{1} << a); }
  static constexpr AtomSet first(std::size_t n) {
    return AtomSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static AtomSet of(const std::vector<AtomId>& atoms) {
    AtomSet s;
    for (AtomId a : atoms) s.insert(a);
    return s;
  }

  constexpr bool contains(AtomId a) const { return (bits_ >> a) & 1u; }
  constexpr void insert(AtomId a) { bits_ |= std::uint64_t{1} << a; }
  constexpr void erase(AtomId a) { bits_ &= ~(std::uint64_t{1} << a); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool is_subset_of(AtomSet other) const { return (bits_ & ~other.bits_) == 0; }

  std::vector<AtomId> members() const {
    std::vector<AtomId> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<AtomId>(std::countr_zero(b)));
    return out;
  }

  friend constexpr AtomSet operator|(AtomSet a, AtomSet b) { return AtomSet(a.bits_ | b.bits_); }
  friend constexpr AtomSet operator&(AtomSet a, AtomSet b) { return AtomSet(a.bits_ & b.bits_); }
  friend constexpr bool operator==(AtomSet a, AtomSet b) = default;

private:
  std::uint64_t bits_ = 0;
};

/// Presentation order for parabolic objects: by size, then lexicographically by member indices.
inline bool object_less(AtomSet a, AtomSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.members() < b.members();
}

/// Ordering usable as a std::map key (not the presentation order).
struct AtomSetKeyLess {
  bool operator()(AtomSet a, AtomSet b) const { return a.bits() < b.bits(); }
};

enum class ErrorKind {
  invalid_input,
  group_too_large,
  not_spherical,
  not_a_lattice,
  complement_missing,
  cancellation_failure,
  not_a_divisor,
  not_a_parabolic,
  components_undeclared,
  nu_table_missing,
  invalid_nu_value,
  not_a_ribbon,
  iteration_cap_exceeded,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

}  // namespace garside

#endif
