#ifndef GARSIDE_ELEMENTS_HPP
#define GARSIDE_ELEMENTS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "garside/system.hpp"

namespace garside {

/// A positive monoid element in left-greedy normal form: a sequence of
/// non-identity simples (u, v) with u = Δ ∧_L u·v for each adjacent pair.
class Positive {
public:
  Positive() = default;

  const std::vector<SimpleId>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }
  SimpleId head() const { return letters_.front(); }

  friend bool operator==(const Positive&, const Positive&) = default;
  friend auto operator<=>(const Positive&, const Positive&) = default;

private:
  explicit Positive(std::vector<SimpleId> letters) : letters_(std::move(letters)) {}
  std::vector<SimpleId> letters_;

  friend Positive from_simples(const GarsideSystem&, std::span<const SimpleId>);
  friend Positive from_greedy_unchecked(std::vector<SimpleId>);
};

/// Wraps letters the caller already knows to be in left-greedy form.
Positive from_greedy_unchecked(std::vector<SimpleId> letters);

/// Δⁿ·body with n maximal, so Δ never left-divides body. Identity is (0, []).
struct GroupEl {
  std::int64_t exponent = 0;
  Positive body;

  friend bool operator==(const GroupEl&, const GroupEl&) = default;
  friend auto operator<=>(const GroupEl&, const GroupEl&) = default;
};

/// One token of a group word: an atom or Δ, with exponent ±1.
struct GroupLetter {
  std::optional<AtomId> atom;  // empty means Δ
  bool inverse = false;
};

Positive normalize(const GarsideSystem& sys, std::span<const AtomId> word);
Positive from_simples(const GarsideSystem& sys, std::span<const SimpleId> simples);
Positive from_simple(const GarsideSystem& sys, SimpleId s);
Positive atom_element(const GarsideSystem& sys, AtomId a);
Positive delta_power(const GarsideSystem& sys, std::size_t n);

/// Atom word obtained by spelling each greedy letter.
std::vector<AtomId> atom_word(const GarsideSystem& sys, const Positive& x);
std::size_t atom_length(const GarsideSystem& sys, const Positive& x);

Positive multiply(const GarsideSystem& sys, const Positive& x, const Positive& y);
bool is_left_weighted(const GarsideSystem& sys, SimpleId u, SimpleId v);

/// Left: ∃c, x·c = y. Right: ∃c, c·x = y.
bool divides(const GarsideSystem& sys, const Positive& x, const Positive& y, Side side);
std::optional<Positive> try_quotient(const GarsideSystem& sys, const Positive& x, const Positive& y, Side side);
/// Left: c with x·c = y. Right: c with c·x = y. Throws NotADivisor.
Positive quotient(const GarsideSystem& sys, const Positive& x, const Positive& y, Side side);

Positive meet(const GarsideSystem& sys, const Positive& x, const Positive& y, Side side);
Positive join(const GarsideSystem& sys, const Positive& x, const Positive& y, Side side);

enum class LatticeOp { meet, join };
Positive lattice(const GarsideSystem& sys, const Positive& x, const Positive& y, LatticeOp op, Side side);

/// φᵏ applied letterwise (k may be negative).
Positive phi_power(const GarsideSystem& sys, const Positive& x, std::int64_t k);

/// Right-greedy letters of x, read left to right.
std::vector<SimpleId> right_greedy(const GarsideSystem& sys, const Positive& x);

GroupEl to_group(const GarsideSystem& sys, const Positive& x);
/// The element as a positive one, when its canonical exponent is non-negative.
std::optional<Positive> as_positive(const GarsideSystem& sys, const GroupEl& g);
GroupEl canonical(const GarsideSystem& sys, std::int64_t exponent, const Positive& body);
GroupEl g_multiply(const GarsideSystem& sys, const GroupEl& x, const GroupEl& y);
GroupEl g_invert(const GarsideSystem& sys, const GroupEl& x);
GroupEl g_normalize(const GarsideSystem& sys, std::span<const GroupLetter> word);
GroupEl g_delta(std::int64_t n);
GroupEl g_atom(const GarsideSystem& sys, AtomId a);

/// Left: (u, v) with g = u⁻¹·v and u ∧_L v = 1.
/// Right: (v₁, v₂) with g = v₁·v₂⁻¹ and v₁ ∧_R v₂ = 1.
std::pair<Positive, Positive> fraction(const GarsideSystem& sys, const GroupEl& g, Side side);

/// Y with g⁻¹·x·g an atom for every x ∈ X, if it exists.
std::optional<AtomSet> conjugate_atomset(const GarsideSystem& sys, const GroupEl& g, AtomSet x);

/// All distinct positive elements having a word of length at most max_len,
/// in breadth-first order.
std::vector<Positive> enumerate_elements(const GarsideSystem& sys, std::size_t max_len);

/// All left (or right) divisors of x.
std::vector<Positive> divisors(const GarsideSystem& sys, const Positive& x, Side side);

}  // namespace garside

#endif
