#include "garside/system.hpp"

#include <algorithm>
#include <sstream>

#include "detail.hpp"

namespace garside {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_input: return "InvalidInput";
    case ErrorKind::group_too_large: return "GroupTooLarge";
    case ErrorKind::not_spherical: return "NotSpherical";
    case ErrorKind::not_a_lattice: return "NotALattice";
    case ErrorKind::complement_missing: return "ComplementMissing";
    case ErrorKind::cancellation_failure: return "CancellationFailure";
    case ErrorKind::not_a_divisor: return "NotADivisor";
    case ErrorKind::not_a_parabolic: return "NotAParabolic";
    case ErrorKind::components_undeclared: return "ComponentsUndeclared";
    case ErrorKind::nu_table_missing: return "NuTableMissing";
    case ErrorKind::invalid_nu_value: return "InvalidNuValue";
    case ErrorKind::not_a_ribbon: return "NotARibbon";
    case ErrorKind::iteration_cap_exceeded: return "IterationCapExceeded";
  }
  return "Unknown";
}

GarsideSystem::GarsideSystem() = default;
GarsideSystem::GarsideSystem(GarsideSystem&&) noexcept = default;
GarsideSystem& GarsideSystem::operator=(GarsideSystem&&) noexcept = default;
GarsideSystem::~GarsideSystem() = default;

GarsideSystem GarsideSystem::from_coxeter(const CoxeterSpec& spec, std::size_t cap) {
  return CoxeterBuilder::build(spec, cap);
}

GarsideSystem GarsideSystem::from_table(const TableSpec& spec) { return TableBuilder::build(spec); }

std::optional<AtomId> GarsideSystem::find_atom(std::string_view name) const {
  for (AtomId a = 0; a < atom_names_.size(); ++a)
    if (atom_names_[a] == name) return a;
  return std::nullopt;
}

std::optional<AtomId> GarsideSystem::simple_atom(SimpleId s) const {
  if (words_.at(s).size() != 1) return std::nullopt;
  AtomId a = words_[s][0];
  if (atom_simple_[a] != s) return std::nullopt;
  return a;
}

std::optional<SimpleId> GarsideSystem::product(SimpleId a, SimpleId b) const {
  if (coxeter_) {
    const auto& c = *coxeter_;
    SimpleId ab = c.multiply(a, b, words_);
    if (c.length[ab] != c.length[a] + c.length[b]) return std::nullopt;
    return ab;
  }
  std::int32_t r = table_->at(table_->product, a, b);
  if (r < 0) return std::nullopt;
  return static_cast<SimpleId>(r);
}

bool GarsideSystem::divides(SimpleId a, SimpleId b, Side side) const {
  if (coxeter_) {
    const auto& c = *coxeter_;
    SimpleId q = side == Side::left ? c.multiply(c.inverse[a], b, words_) : c.multiply(b, c.inverse[a], words_);
    return c.length[q] + c.length[a] == c.length[b];
  }
  const auto& t = side == Side::left ? table_->quot_left : table_->quot_right;
  return table_->at(t, a, b) >= 0;
}

SimpleId GarsideSystem::quotient(SimpleId a, SimpleId b, Side side) const {
  if (coxeter_) {
    const auto& c = *coxeter_;
    SimpleId q = side == Side::left ? c.multiply(c.inverse[a], b, words_) : c.multiply(b, c.inverse[a], words_);
    if (c.length[q] + c.length[a] != c.length[b])
      throw Error(ErrorKind::not_a_divisor, "simple " + std::to_string(a) + " does not divide " + std::to_string(b));
    return q;
  }
  const auto& t = side == Side::left ? table_->quot_left : table_->quot_right;
  std::int32_t r = table_->at(t, a, b);
  if (r < 0)
    throw Error(ErrorKind::not_a_divisor, "simple " + std::to_string(a) + " does not divide " + std::to_string(b));
  return static_cast<SimpleId>(r);
}

SimpleId GarsideSystem::meet(SimpleId a, SimpleId b, Side side) const {
  if (table_) return side == Side::left ? table_->meet_left[a * table_->n + b] : table_->meet_right[a * table_->n + b];
  // Strip common descents one atom at a time.
  const auto& c = *coxeter_;
  SimpleId acc = 0;
  bool progress = true;
  while (progress) {
    progress = false;
    for (AtomId s = 0; s < c.rank; ++s) {
      if (side == Side::left && c.left_descent(a, s) && c.left_descent(b, s)) {
        acc = c.times_atom(acc, s);
        a = c.atom_times(s, a);
        b = c.atom_times(s, b);
        progress = true;
        break;
      }
      if (side == Side::right && c.right_descent(a, s) && c.right_descent(b, s)) {
        acc = c.atom_times(s, acc);
        a = c.times_atom(a, s);
        b = c.times_atom(b, s);
        progress = true;
        break;
      }
    }
  }
  return acc;
}

SimpleId GarsideSystem::join(SimpleId a, SimpleId b, Side side) const {
  if (table_) return side == Side::left ? table_->join_left[a * table_->n + b] : table_->join_right[a * table_->n + b];
  // Complements reverse the orders: a ≤_L b iff b\Δ ≤_R a\Δ.
  if (side == Side::left)
    return complement(meet(complement(a, Side::left), complement(b, Side::left), Side::right), Side::right);
  return complement(meet(complement(a, Side::right), complement(b, Side::right), Side::left), Side::left);
}

SimpleId GarsideSystem::complement(SimpleId a, Side side) const {
  if (table_) return side == Side::left ? table_->comp_left[a] : table_->comp_right[a];
  const auto& c = *coxeter_;
  return side == Side::left ? c.multiply(c.inverse[a], c.longest, words_) : c.multiply(c.longest, c.inverse[a], words_);
}

std::optional<SimpleId> GarsideSystem::simple_from_word(std::span<const AtomId> word) const {
  SimpleId acc = identity();
  for (AtomId a : word) {
    if (a >= atom_count()) return std::nullopt;
    auto next = product(acc, atom_simple_[a]);
    if (!next) return std::nullopt;
    acc = *next;
  }
  return acc;
}

std::optional<std::vector<AtomSet>> GarsideSystem::declared_components(AtomSet x) const {
  auto it = components_.find(x);
  if (it == components_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> GarsideSystem::check_invariants() const {
  std::vector<std::string> failures;
  const std::size_t n = simple_count();
  auto fail = [&](const std::string& msg) {
    if (failures.size() < 50) failures.push_back(msg);
  };
  auto pair_name = [](SimpleId a, SimpleId b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; };

  for (SimpleId a = 0; a < n; ++a) {
    if (!divides(identity(), a, Side::left) || !divides(a, delta_, Side::left)) fail("left order bounds at " + std::to_string(a));
    if (!divides(identity(), a, Side::right) || !divides(a, delta_, Side::right)) fail("right order bounds at " + std::to_string(a));
    auto l = product(a, complement(a, Side::left));
    if (!l || *l != delta_) fail("left complement of " + std::to_string(a));
    auto r = product(complement(a, Side::right), a);
    if (!r || *r != delta_) fail("right complement of " + std::to_string(a));
  }

  for (Side side : {Side::left, Side::right}) {
    const char* tag = side == Side::left ? "left" : "right";
    for (SimpleId a = 0; a < n; ++a) {
      for (SimpleId b = 0; b < n; ++b) {
        SimpleId m = meet(a, b, side);
        SimpleId j = join(a, b, side);
        if (m != meet(b, a, side) || j != join(b, a, side)) fail(std::string(tag) + " lattice not commutative at " + pair_name(a, b));
        if (!divides(m, a, side) || !divides(m, b, side)) fail(std::string(tag) + " meet not a lower bound at " + pair_name(a, b));
        if (!divides(a, j, side) || !divides(b, j, side)) fail(std::string(tag) + " join not an upper bound at " + pair_name(a, b));
        if ((meet(a, b, side) == a) != divides(a, b, side)) fail(std::string(tag) + " meet/divides mismatch at " + pair_name(a, b));
        if (meet(a, j, side) != a || join(a, m, side) != a) fail(std::string(tag) + " absorption fails at " + pair_name(a, b));
        for (SimpleId c = 0; c < n; ++c) {
          if (divides(c, a, side) && divides(c, b, side) && !divides(c, m, side))
            fail(std::string(tag) + " meet not greatest at " + pair_name(a, b));
          if (divides(a, c, side) && divides(b, c, side) && !divides(j, c, side))
            fail(std::string(tag) + " join not least at " + pair_name(a, b));
        }
      }
    }
  }

  for (SimpleId a = 0; a < n; ++a) {
    for (SimpleId b = 0; b < n; ++b) {
      auto ab = product(a, b);
      if (!ab) continue;
      auto img = product(phi(a), phi(b));
      if (!img || *img != phi(*ab)) fail("phi not multiplicative at " + pair_name(a, b));
      for (SimpleId c = b + 1; c < n; ++c) {
        auto ac = product(a, c);
        if (ac && *ac == *ab) fail("left cancellation fails at " + pair_name(a, b));
        auto ca = product(c, a);
        auto ba = product(b, a);
        if (ca && ba && *ca == *ba) fail("right cancellation fails at " + pair_name(b, a));
      }
    }
  }

  AtomSet image;
  for (AtomId s = 0; s < atom_count(); ++s) {
    auto img = simple_atom(phi(atom_simple(s)));
    if (!img) fail("phi does not map atom " + atom_names_[s] + " to an atom");
    else image.insert(*img);
  }
  if (image != all_atoms()) fail("phi is not a bijection of atoms");
  if (phi(delta_) != delta_) fail("phi does not fix delta");
  for (SimpleId a = 0; a < n; ++a)
    if (phi_inverse(phi(a)) != a) fail("phi_inverse mismatch at " + std::to_string(a));
  return failures;
}

}  // namespace garside
