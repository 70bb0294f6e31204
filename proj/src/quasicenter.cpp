#include "garside/quasicenter.hpp"

#include <algorithm>
#include <stdexcept>

namespace garside {
namespace {

constexpr std::size_t saturation_cap = 100000;

}  // namespace

Positive delta_g(const GarsideSystem& sys, const Positive& g, Side side, AtomSet scope) {
  // Left fixpoint of x ← x ∨ ⋁_s s\(s ∨ x); every iterate divides Δ_g.
  Positive x = g;
  for (std::size_t iter = 0; iter < saturation_cap; ++iter) {
    Positive next = x;
    for (AtomId s : scope.members()) {
      const Positive a = atom_element(sys, s);
      const Positive j = join(sys, a, x, side);
      next = join(sys, next, quotient(sys, a, j, side), side);
    }
    if (next == x) return x;
    x = std::move(next);
  }
  throw Error(ErrorKind::iteration_cap_exceeded, "delta_g saturation did not stabilize");
}

Positive delta_g(const GarsideSystem& sys, const Positive& g, Side side) {
  return delta_g(sys, g, side, sys.all_atoms());
}

Positive tau_sequence(const GarsideSystem& sys, const Positive& g, Side first, AtomSet scope) {
  Positive current = g;
  Side side = first;
  for (std::size_t iter = 0; iter < saturation_cap; ++iter) {
    Positive next = delta_g(sys, current, side, scope);
    // After the first step, current already came out of the other saturation.
    if (next == current && iter > 0) return current;
    current = std::move(next);
    side = opposite(side);
  }
  throw Error(ErrorKind::iteration_cap_exceeded, "tau sequence did not stabilize");
}

Positive tau(const GarsideSystem& sys, const Positive& g, AtomSet scope) {
  Positive left_first = tau_sequence(sys, g, Side::left, scope);
  Positive right_first = tau_sequence(sys, g, Side::right, scope);
  if (left_first != right_first) throw std::logic_error("tau and tau-tilde disagree");
  return left_first;
}

Positive tau(const GarsideSystem& sys, const Positive& g) { return tau(sys, g, sys.all_atoms()); }

bool is_quasi_central(const GarsideSystem& sys, const Positive& x, AtomSet scope) {
  for (AtomId s : scope.members()) {
    const Positive a = atom_element(sys, s);
    if (!divides(sys, x, multiply(sys, a, x), Side::left)) return false;
    if (!divides(sys, x, multiply(sys, x, a), Side::right)) return false;
  }
  return true;
}

bool is_quasi_central(const GarsideSystem& sys, const Positive& x) { return is_quasi_central(sys, x, sys.all_atoms()); }

std::vector<std::string> check_qz_basis(const GarsideSystem& sys, const QZBasis& qz, AtomSet scope) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < qz.basis.size(); ++i) {
    const Positive& u = qz.basis[i];
    if (!is_quasi_central(sys, u, scope)) out.push_back("basis element " + std::to_string(i) + " is not quasi-central");
    for (std::size_t j = i + 1; j < qz.basis.size(); ++j) {
      const Positive& v = qz.basis[j];
      if (u == v) out.push_back("basis elements " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
      const Positive uv = multiply(sys, u, v);
      if (uv != multiply(sys, v, u))
        out.push_back("basis elements " + std::to_string(i) + " and " + std::to_string(j) + " do not commute");
      if (join(sys, u, v, Side::left) != uv)
        out.push_back("join of basis elements " + std::to_string(i) + " and " + std::to_string(j) +
                      " is not their product");
    }
  }
  return out;
}

QZBasis qz_basis(const GarsideSystem& sys, AtomSet scope) {
  QZBasis qz;
  for (AtomId s : scope.members()) {
    Positive t = tau(sys, atom_element(sys, s), scope);
    auto it = std::find(qz.basis.begin(), qz.basis.end(), t);
    if (it == qz.basis.end()) {
      qz.atom_map[s] = qz.basis.size();
      qz.basis.push_back(std::move(t));
    } else {
      qz.atom_map[s] = static_cast<std::size_t>(it - qz.basis.begin());
    }
  }
  if (auto bad = check_qz_basis(sys, qz, scope); !bad.empty()) throw std::logic_error("QZ basis invariant: " + bad.front());
  return qz;
}

QZBasis qz_basis(const GarsideSystem& sys) { return qz_basis(sys, sys.all_atoms()); }

std::optional<std::vector<std::size_t>> qz_decompose(const GarsideSystem& sys, const QZBasis& qz, const Positive& g) {
  AtomSet scope;
  for (const auto& [atom, index] : qz.atom_map) scope.insert(atom);
  if (!is_quasi_central(sys, g, scope)) return std::nullopt;
  std::vector<std::size_t> out;
  Positive rest = g;
  while (!rest.empty()) {
    bool found = false;
    for (std::size_t i = 0; i < qz.basis.size() && !found; ++i) {
      if (auto q = try_quotient(sys, qz.basis[i], rest, Side::left)) {
        rest = std::move(*q);
        out.push_back(i);
        found = true;
      }
    }
    if (!found) return std::nullopt;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace garside
