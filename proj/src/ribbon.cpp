#include "garside/ribbon.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <stdexcept>
#include <tuple>

namespace garside {
namespace {

using EdgePredicate = std::function<bool(std::size_t)>;

// Depth-first search for edge paths from `start` multiplying to `target`.
// Stops after `limit` paths.
void dfs_paths(const GarsideSystem& sys, const Quiver& q, AtomSet at, const Positive& residual,
               const EdgePredicate& allowed, Path& prefix, std::vector<Path>& out, std::size_t limit) {
  if (out.size() >= limit) return;
  if (residual.empty()) {
    out.push_back(prefix);
    return;
  }
  for (std::size_t e : q.edges_from(at)) {
    if (!allowed(e)) continue;
    auto rest = try_quotient(sys, q.edges[e].element, residual, Side::left);
    if (!rest) continue;
    prefix.push_back(e);
    dfs_paths(sys, q, q.edges[e].target, *rest, allowed, prefix, out, limit);
    prefix.pop_back();
    if (out.size() >= limit) return;
  }
}

std::vector<Path> find_paths(const GarsideSystem& sys, const Quiver& q, AtomSet start, const Positive& target,
                             const EdgePredicate& allowed,
                             std::size_t limit = std::numeric_limits<std::size_t>::max()) {
  std::vector<Path> out;
  Path prefix;
  dfs_paths(sys, q, start, target, allowed, prefix, out, limit);
  return out;
}

bool has_path(const GarsideSystem& sys, const Quiver& q, AtomSet start, const Positive& target,
              const EdgePredicate& allowed) {
  return !find_paths(sys, q, start, target, allowed, 1).empty();
}

std::size_t object_index(const Quiver& q, AtomSet x) {
  auto it = std::find(q.objects.begin(), q.objects.end(), x);
  if (it == q.objects.end()) throw Error(ErrorKind::not_a_parabolic, "object not in the quiver");
  return static_cast<std::size_t>(it - q.objects.begin());
}

// The quiver stores one edge per distinct element; find the one ν_X(s) maps to.
std::size_t edge_of(const GarsideSystem& sys, const Quiver& q, AtomSet x, AtomId s) {
  const Positive e = nu_element(sys, x, s, NuVariant::plain);
  for (std::size_t i : q.edges_from(x))
    if (q.edges[i].element == e) return i;
  throw std::logic_error("ν value missing from the quiver");
}

}  // namespace

std::vector<std::size_t> Quiver::edges_from(AtomSet x) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (edges[i].source == x) out.push_back(i);
  return out;
}

Quiver atom_quiver(const GarsideSystem& sys) {
  Quiver q;
  q.objects = parabolic_objects(sys);
  for (AtomSet x : q.objects)
    for (NuAtom& a : classify(sys, x, NuVariant::plain)) q.edges.push_back(std::move(a));
  return q;
}

Positive evaluate_path(const GarsideSystem& sys, const Quiver& q, const Path& path) {
  Positive out;
  for (std::size_t e : path) out = multiply(sys, out, q.edges.at(e).element);
  return out;
}

bool path_composes(const Quiver& q, AtomSet start, const Path& path) {
  AtomSet at = start;
  for (std::size_t e : path) {
    if (e >= q.edges.size() || q.edges[e].source != at) return false;
    at = q.edges[e].target;
  }
  return true;
}

AtomSet path_target(const Quiver& q, AtomSet start, const Path& path) {
  AtomSet at = start;
  for (std::size_t e : path) at = q.edges.at(e).target;
  return at;
}

std::pair<Positive, Positive> factor_qz_nu(const GarsideSystem& sys, const Quiver& q, const Positive& p, AtomSet x) {
  if (!is_positive_ribbon(sys, p, x)) throw Error(ErrorKind::not_a_ribbon, "element is not a positive ribbon out of X");
  std::vector<std::size_t> taus;
  for (std::size_t e : q.edges_from(x))
    if (q.edges[e].kind == NuKind::tau) taus.push_back(e);

  // τ atoms at X commute and no A⁺_X element divides a ν path, so greedy division is exact.
  Positive g1;
  Positive rest = p;
  for (bool progress = true; progress;) {
    progress = false;
    for (std::size_t e : taus) {
      if (auto r = try_quotient(sys, q.edges[e].element, rest, Side::left)) {
        g1 = multiply(sys, g1, q.edges[e].element);
        rest = std::move(*r);
        progress = true;
      }
    }
  }
  auto nu_edge = [&](std::size_t e) { return q.edges[e].kind == NuKind::nu; };
  if (!has_path(sys, q, x, rest, nu_edge)) throw std::logic_error("ribbon remainder is not a ν path");
  return {g1, rest};
}

std::vector<Path> representing_paths(const GarsideSystem& sys, const Quiver& q, AtomSet start, const Positive& target,
                                     bool nu_only) {
  return find_paths(sys, q, start, target,
                    [&](std::size_t e) { return !nu_only || q.edges[e].kind == NuKind::nu; });
}

std::vector<Path> ribbon_join_paths(const GarsideSystem& sys, const Quiver& q, AtomSet x, AtomId s, AtomId t) {
  const std::size_t es = edge_of(sys, q, x, s);
  const std::size_t et = edge_of(sys, q, x, t);
  if (es == et) throw Error(ErrorKind::invalid_input, "the two ν atoms coincide");
  if (q.edges[es].kind != NuKind::nu || q.edges[et].kind != NuKind::nu)
    throw Error(ErrorKind::invalid_input, "both atoms must be ν-type");
  const Positive m = join(sys, q.edges[es].element, q.edges[et].element, Side::left);
  return representing_paths(sys, q, x, m, true);
}

std::size_t count_representing_paths(const GarsideSystem& sys, const Quiver& q, AtomSet x, AtomId s, AtomId t) {
  const std::size_t es = edge_of(sys, q, x, s);
  const std::size_t et = edge_of(sys, q, x, t);
  if (es == et) throw Error(ErrorKind::invalid_input, "the two ν atoms coincide");
  if (q.edges[es].kind != NuKind::nu || q.edges[et].kind != NuKind::nu)
    throw Error(ErrorKind::invalid_input, "both atoms must be ν-type");
  const Positive m = join(sys, q.edges[es].element, q.edges[et].element, Side::left);
  return representing_paths(sys, q, x, m, false).size();
}

Presentation presentation(const GarsideSystem& sys) {
  Presentation p;
  p.quiver = atom_quiver(sys);
  const Quiver& q = p.quiver;

  for (AtomSet x : q.objects) {
    std::vector<std::size_t> taus, nus;
    for (std::size_t e : q.edges_from(x)) (q.edges[e].kind == NuKind::tau ? taus : nus).push_back(e);

    for (std::size_t i = 0; i < taus.size(); ++i)
      for (std::size_t j = i + 1; j < taus.size(); ++j)
        p.relations.push_back({{taus[i], taus[j]}, {taus[j], taus[i]}, 1, x});

    for (std::size_t t : taus) {
      for (std::size_t v : nus) {
        const Positive& nv = q.edges[v].element;
        const Positive moved = quotient(sys, nv, multiply(sys, q.edges[t].element, nv), Side::left);
        std::optional<std::size_t> partner;
        for (std::size_t e : q.edges_from(q.edges[v].target))
          if (q.edges[e].kind == NuKind::tau && q.edges[e].element == moved) partner = e;
        if (!partner) throw std::logic_error("conjugated τ atom is not a τ atom of the target");
        p.relations.push_back({{t, v}, {v, *partner}, 2, x});
      }
    }

    for (std::size_t i = 0; i < nus.size(); ++i) {
      for (std::size_t j = i + 1; j < nus.size(); ++j) {
        const Positive m = join(sys, q.edges[nus[i]].element, q.edges[nus[j]].element, Side::left);
        std::optional<Path> from_i, from_j;
        for (Path& path : representing_paths(sys, q, x, m, true)) {
          if (path.front() == nus[i] && !from_i) from_i = path;
          if (path.front() == nus[j] && !from_j) from_j = path;
        }
        if (!from_i || !from_j) throw std::logic_error("join of two ν atoms has no ν path through one of them");
        p.relations.push_back({*from_i, *from_j, 3, x});
      }
    }
  }

  for (const Relation& r : p.relations) {
    if (!path_composes(q, r.source, r.lhs) || !path_composes(q, r.source, r.rhs) ||
        path_target(q, r.source, r.lhs) != path_target(q, r.source, r.rhs) ||
        evaluate_path(sys, q, r.lhs) != evaluate_path(sys, q, r.rhs))
      throw std::logic_error("generated relation does not hold");
  }
  std::stable_sort(p.relations.begin(), p.relations.end(), [&](const Relation& a, const Relation& b) {
    return std::tuple(a.kind, object_index(q, a.source), a.lhs, a.rhs) <
           std::tuple(b.kind, object_index(q, b.source), b.lhs, b.rhs);
  });
  return p;
}

Presentation without_kind(const Presentation& p, int kind) {
  Presentation out;
  out.quiver = p.quiver;
  for (const Relation& r : p.relations)
    if (r.kind != kind) out.relations.push_back(r);
  return out;
}

Shakers shakers(const GarsideSystem& sys, const Quiver& q, AtomSet x) {
  Shakers out;
  for (std::size_t e : q.edges_from(x))
    if (q.edges[e].target == x) out.sh_edges.push_back(e);
  for (AtomId s = 0; s < sys.atom_count(); ++s) {
    const Positive plain = nu_element(sys, x, s, NuVariant::plain);
    const Positive tilde = nu_element(sys, x, s, NuVariant::tilde);
    for (std::size_t e : out.sh_edges) {
      if (q.edges[e].element == plain) out.sh.insert(s);
      if (q.edges[e].element == tilde) out.sh_tilde.insert(s);
    }
  }
  if (out.sh != out.sh_tilde || !is_parabolic(sys, out.sh)) return out;

  auto is_shaker = [&](std::size_t e) {
    return std::find(out.sh_edges.begin(), out.sh_edges.end(), e) != out.sh_edges.end();
  };
  const std::size_t n = out.sh_edges.size();
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const std::size_t u = out.sh_edges[i];
      const std::size_t v = out.sh_edges[j];
      const Positive target = join(sys, q.edges[u].element, q.edges[v].element, Side::left);
      int best = 0;
      for (const Path& path : find_paths(sys, q, x, target, is_shaker))
        if (path.front() == u && (best == 0 || static_cast<int>(path.size()) < best)) best = static_cast<int>(path.size());
      m[i][j] = best;
    }
  }
  out.matrix = std::move(m);
  return out;
}

std::vector<CheckLine> shaker_garside_check(const GarsideSystem& sys, const Quiver& q, AtomSet x, std::size_t level) {
  std::vector<CheckLine> out;
  const Shakers sh = shakers(sys, q, x);
  std::vector<std::size_t> tau_sh, nu_sh;
  for (std::size_t e : sh.sh_edges) (q.edges[e].kind == NuKind::tau ? tau_sh : nu_sh).push_back(e);
  auto member = [](const std::vector<std::size_t>& set) {
    return [&set](std::size_t e) { return std::find(set.begin(), set.end(), e) != set.end(); };
  };

  const bool hyp = sh.sh == sh.sh_tilde && is_parabolic(sys, sh.sh);
  out.push_back({"hypotheses", hyp, hyp ? "sh(X) = s̃h(X) and A⁺_sh(X) is parabolic" : "sh(X) ≠ s̃h(X) or sh(X) not parabolic"});
  if (!hyp) return out;

  const Positive dsh = delta_of(sys, sh.sh);

  bool divides_ok = true;
  for (std::size_t e : sh.sh_edges)
    divides_ok = divides_ok && divides(sys, q.edges[e].element, dsh, Side::left) &&
                 divides(sys, q.edges[e].element, dsh, Side::right);
  out.push_back({"shakers divide Δ_sh", divides_ok, ""});

  // Δ_sh is a shaker path and conjugation by it permutes the shakers.
  bool perm_ok = is_positive_ribbon(sys, dsh, x) == std::optional<AtomSet>(x) &&
                 has_path(sys, q, x, dsh, member(sh.sh_edges));
  for (std::size_t e : sh.sh_edges) {
    auto moved = try_quotient(sys, dsh, multiply(sys, q.edges[e].element, dsh), Side::left);
    bool found = false;
    if (moved)
      for (std::size_t f : sh.sh_edges) found = found || q.edges[f].element == *moved;
    perm_ok = perm_ok && found;
  }
  out.push_back({"Δ_sh quasi-central for shakers", perm_ok, ""});

  bool normal_ok = true;
  for (std::size_t t : tau_sh) {
    for (std::size_t v : nu_sh) {
      const Positive& nv = q.edges[v].element;
      const Positive moved = quotient(sys, nv, multiply(sys, q.edges[t].element, nv), Side::left);
      normal_ok = normal_ok && has_path(sys, q, x, moved, member(tau_sh));
    }
  }
  out.push_back({"QZ part normal", normal_ok, ""});

  // Every shaker product splits uniquely as (τ-shaker product)·(ν-shaker product).
  std::vector<Positive> elements{Positive{}};
  std::vector<Positive> frontier{Positive{}};
  for (std::size_t len = 0; len < level; ++len) {
    std::vector<Positive> next;
    for (const Positive& g : frontier)
      for (std::size_t e : sh.sh_edges) {
        Positive h = multiply(sys, g, q.edges[e].element);
        if (std::find(elements.begin(), elements.end(), h) == elements.end()) {
          elements.push_back(h);
          next.push_back(std::move(h));
        }
      }
    frontier = std::move(next);
  }
  bool split_ok = true;
  std::string split_detail;
  for (const Positive& g : elements) {
    std::size_t splits = 0;
    for (const Positive& d : divisors(sys, g, Side::left)) {
      if (!has_path(sys, q, x, d, member(tau_sh))) continue;
      if (has_path(sys, q, x, quotient(sys, d, g, Side::left), member(nu_sh))) ++splits;
    }
    if (splits != 1) {
      split_ok = false;
      split_detail = std::to_string(splits) + " splits for a product of length " +
                     std::to_string(atom_length(sys, g));
      break;
    }
  }
  out.push_back({"QZ ⋊ SH^ν split", split_ok,
                 split_ok ? std::to_string(elements.size()) + " shaker products" : split_detail});
  return out;
}

bool in_parabolic_group(const GarsideSystem& sys, const GroupEl& g, AtomSet x) {
  const ParabolicSet px = make_parabolic(sys, x);
  auto [u, v] = fraction(sys, g, Side::left);
  return contains(sys, px, u) && contains(sys, px, v);
}

std::optional<ConjDecomposition> conj_decompose(const GarsideSystem& sys, const Quiver& q, const GroupEl& g, AtomSet x) {
  // g = g₁·Δ⁻ⁿ with g₁ positive.
  const std::int64_t n = g.exponent < 0 ? -g.exponent : 0;
  const Positive g1 = g.exponent < 0 ? phi_power(sys, g.body, n)
                                     : multiply(sys, delta_power(sys, static_cast<std::size_t>(g.exponent)), g.body);

  // g₁ = a₁·r₁·b₁ with a₁ in A⁺_X, b₁ in A⁺_Z and r₁ a positive ribbon X → Z.
  // Z is not known in advance: g₁ need not map atoms to atoms, only A_X onto A_Z.
  const Positive a1 = max_divisor_in(sys, make_parabolic(sys, x), g1, Side::left);
  const Positive rem = quotient(sys, a1, g1, Side::left);
  std::optional<Positive> found_r1, found_b1;
  for (AtomSet z : q.objects) {
    const Positive b1 = max_divisor_in(sys, make_parabolic(sys, z), rem, Side::right);
    const Positive r1 = quotient(sys, b1, rem, Side::right);
    if (is_positive_ribbon(sys, r1, x) == std::optional<AtomSet>(z)) {
      found_r1 = r1;
      found_b1 = b1;
      break;
    }
  }
  if (!found_r1) return std::nullopt;
  const Positive& r1 = *found_r1;
  const Positive& b1 = *found_b1;
  const GroupEl gr1 = to_group(sys, r1);
  const GroupEl a2 = g_multiply(sys, g_multiply(sys, gr1, to_group(sys, b1)), g_invert(sys, gr1));
  const auto y = conjugate_atomset(sys, g_multiply(sys, gr1, g_delta(-n)), x);
  if (!y || !is_parabolic(sys, *y)) return std::nullopt;

  // r₁ = q₁v₁ out of X and Δⁿ = q₂v₂ out of Y, both ending at Z.
  auto [q1, v1] = factor_qz_nu(sys, q, r1, x);
  auto [q2, v2] = factor_qz_nu(sys, q, delta_power(sys, static_cast<std::size_t>(n)), *y);
  const GroupEl gv1 = to_group(sys, v1);
  const GroupEl gv2 = to_group(sys, v2);
  const GroupEl inv_v1 = g_invert(sys, gv1);
  const GroupEl inv_v2 = g_invert(sys, gv2);
  const GroupEl inv_q2 = g_invert(sys, to_group(sys, q2));
  // v₁·(v₂⁻¹q₂⁻¹v₂)·v₁⁻¹ moves the QZ(A_Y) part back into A_X.
  GroupEl folded = g_multiply(sys, gv1, g_multiply(sys, inv_v2, g_multiply(sys, inv_q2, g_multiply(sys, gv2, inv_v1))));
  GroupEl a = g_multiply(sys, to_group(sys, a1), g_multiply(sys, a2, g_multiply(sys, to_group(sys, q1), folded)));

  ConjDecomposition out;
  out.a = a;
  out.r = RibbonMorphism{x, g_multiply(sys, gv1, inv_v2), *y};
  out.numerator = v1;
  out.denominator = v2;

  if (g_multiply(sys, out.a, out.r.element) != g) throw std::logic_error("conj_decompose does not recompose");
  if (!in_parabolic_group(sys, out.a, x)) throw std::logic_error("conj_decompose left factor leaves A_X");
  if (conjugate_atomset(sys, out.r.element, x) != y) throw std::logic_error("conj_decompose ribbon has wrong target");
  return out;
}

}  // namespace garside
