#include "garside/elements.hpp"

#include <algorithm>
#include <set>

namespace garside {

namespace {

// The monoid seen from one side. With Side::right every operation is the
// corresponding operation of the opposite monoid, whose elements are
// written as reversed sequences of the same simple ids.
struct View {
  const GarsideSystem& sys;
  Side side;

  SimpleId product(SimpleId a, SimpleId b) const {
    auto r = side == Side::left ? sys.product(a, b) : sys.product(b, a);
    return *r;
  }
  SimpleId meet(SimpleId a, SimpleId b) const { return sys.meet(a, b, side); }
  SimpleId join(SimpleId a, SimpleId b) const { return sys.join(a, b, side); }
  SimpleId complement(SimpleId a) const { return sys.complement(a, side); }
  bool divides(SimpleId a, SimpleId b) const { return sys.divides(a, b, side); }
  SimpleId quotient(SimpleId a, SimpleId b) const { return sys.quotient(a, b, side); }
};

using Seq = std::vector<SimpleId>;

void drop_identities(Seq& s) { std::erase(s, GarsideSystem::identity()); }

// Local left-weighting passes until every adjacent pair is left-weighted.
Seq normalize_seq(const View& v, Seq s) {
  drop_identities(s);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
      SimpleId t = v.meet(v.complement(s[i]), s[i + 1]);
      if (t == GarsideSystem::identity()) continue;
      s[i] = v.product(s[i], t);
      s[i + 1] = v.quotient(t, s[i + 1]);
      changed = true;
    }
    drop_identities(s);
  }
  return s;
}

// a\y for a simple a dividing y.
Seq divide_by_simple(const View& v, SimpleId a, const Seq& y) {
  Seq out = y;
  out[0] = v.quotient(a, y[0]);
  return normalize_seq(v, std::move(out));
}

std::optional<Seq> quotient_seq(const View& v, const Seq& x, Seq y) {
  for (SimpleId a : x) {
    if (y.empty() || !v.divides(a, y[0])) return std::nullopt;
    y = divide_by_simple(v, a, y);
  }
  return y;
}

Seq meet_seq(const View& v, Seq x, Seq y) {
  Seq acc;
  while (!x.empty() && !y.empty()) {
    SimpleId m = v.meet(x[0], y[0]);
    if (m == GarsideSystem::identity()) break;
    acc.push_back(m);
    x = divide_by_simple(v, m, x);
    y = divide_by_simple(v, m, y);
  }
  return normalize_seq(v, std::move(acc));
}

// lcm(a, y) = y₁ · lcm(y₁\(a ∨ y₁), y') for y = y₁·y'.
Seq join_simple_seq(const View& v, SimpleId a, const Seq& y, std::size_t& budget) {
  Seq prefix;
  for (SimpleId y1 : y) {
    if (budget-- == 0) throw Error(ErrorKind::iteration_cap_exceeded, "lcm computation did not terminate");
    if (a == GarsideSystem::identity()) break;
    prefix.push_back(y1);
    a = v.quotient(y1, v.join(a, y1));
  }
  if (prefix.size() < y.size()) prefix.insert(prefix.end(), y.begin() + static_cast<std::ptrdiff_t>(prefix.size()), y.end());
  prefix.push_back(a);
  return normalize_seq(v, std::move(prefix));
}

// lcm(x₁·x', y) = x₁ · lcm(x', x₁\lcm(x₁, y)).
Seq join_seq(const View& v, const Seq& x, Seq y, std::size_t budget) {
  Seq acc;
  for (SimpleId x1 : x) {
    Seq z = join_simple_seq(v, x1, y, budget);
    y = divide_by_simple(v, x1, z);
    acc.push_back(x1);
  }
  acc.insert(acc.end(), y.begin(), y.end());
  return normalize_seq(v, std::move(acc));
}

std::size_t join_budget(const GarsideSystem& sys, const Seq& x, const Seq& y) {
  return sys.simple_count() * (x.size() + y.size() + 1) * 4 * (x.size() + 1);
}

Seq to_right_view(const GarsideSystem& sys, const Positive& x) {
  Seq r(x.letters().rbegin(), x.letters().rend());
  return normalize_seq(View{sys, Side::right}, std::move(r));
}

Positive from_right_view(const GarsideSystem& sys, const Seq& r) {
  Seq s(r.rbegin(), r.rend());
  return from_simples(sys, s);
}

}  // namespace

Positive from_greedy_unchecked(std::vector<SimpleId> letters) { return Positive(std::move(letters)); }

Positive from_simples(const GarsideSystem& sys, std::span<const SimpleId> simples) {
  return Positive(normalize_seq(View{sys, Side::left}, Seq(simples.begin(), simples.end())));
}

Positive from_simple(const GarsideSystem& sys, SimpleId s) { return from_simples(sys, std::span<const SimpleId>(&s, 1)); }

Positive atom_element(const GarsideSystem& sys, AtomId a) { return from_greedy_unchecked({sys.atom_simple(a)}); }

Positive delta_power(const GarsideSystem& sys, std::size_t n) {
  if (sys.delta() == GarsideSystem::identity()) return {};
  return from_greedy_unchecked(Seq(n, sys.delta()));
}

Positive normalize(const GarsideSystem& sys, std::span<const AtomId> word) {
  Seq s;
  s.reserve(word.size());
  for (AtomId a : word) {
    if (a >= sys.atom_count()) throw Error(ErrorKind::invalid_input, "atom index out of range");
    s.push_back(sys.atom_simple(a));
  }
  return from_simples(sys, s);
}

std::vector<AtomId> atom_word(const GarsideSystem& sys, const Positive& x) {
  std::vector<AtomId> out;
  for (SimpleId s : x.letters()) {
    const auto& w = sys.simple_word(s);
    out.insert(out.end(), w.begin(), w.end());
  }
  return out;
}

std::size_t atom_length(const GarsideSystem& sys, const Positive& x) {
  std::size_t n = 0;
  for (SimpleId s : x.letters()) n += sys.simple_length(s);
  return n;
}

Positive multiply(const GarsideSystem& sys, const Positive& x, const Positive& y) {
  if (y.empty()) return x;
  if (x.empty()) return y;
  Seq s = x.letters();
  s.insert(s.end(), y.letters().begin(), y.letters().end());
  return from_simples(sys, s);
}

bool is_left_weighted(const GarsideSystem& sys, SimpleId u, SimpleId v) {
  return sys.meet(sys.complement(u, Side::left), v, Side::left) == GarsideSystem::identity();
}

std::optional<Positive> try_quotient(const GarsideSystem& sys, const Positive& x, const Positive& y, Side side) {
  if (side == Side::left) {
    auto q = quotient_seq(View{sys, Side::left}, x.letters(), y.letters());
    if (!q) return std::nullopt;
    return from_greedy_unchecked(std::move(*q));
  }
  auto q = quotient_seq(View{sys, Side::right}, to_right_view(sys, x), to_right_view(sys, y));
  if (!q) return std::nullopt;
  return from_right_view(sys, *q);
}

bool divides(const GarsideSystem& sys, const Positive& x, const Positive& y, Side side) {
  return try_quotient(sys, x, y, side).has_value();
}

Positive quotient(const GarsideSystem& sys, const Positive& x, const Positive& y, Side side) {
  auto q = try_quotient(sys, x, y, side);
  if (!q) throw Error(ErrorKind::not_a_divisor, side == Side::left ? "left quotient undefined" : "right quotient undefined");
  return *q;
}

Positive meet(const GarsideSystem& sys, const Positive& x, const Positive& y, Side side) {
  if (side == Side::left) return from_greedy_unchecked(meet_seq(View{sys, Side::left}, x.letters(), y.letters()));
  return from_right_view(sys, meet_seq(View{sys, Side::right}, to_right_view(sys, x), to_right_view(sys, y)));
}

Positive join(const GarsideSystem& sys, const Positive& x, const Positive& y, Side side) {
  if (side == Side::left)
    return from_greedy_unchecked(join_seq(View{sys, Side::left}, x.letters(), y.letters(), join_budget(sys, x.letters(), y.letters())));
  Seq rx = to_right_view(sys, x), ry = to_right_view(sys, y);
  return from_right_view(sys, join_seq(View{sys, Side::right}, rx, ry, join_budget(sys, rx, ry)));
}

Positive lattice(const GarsideSystem& sys, const Positive& x, const Positive& y, LatticeOp op, Side side) {
  return op == LatticeOp::meet ? meet(sys, x, y, side) : join(sys, x, y, side);
}

Positive phi_power(const GarsideSystem& sys, const Positive& x, std::int64_t k) {
  Seq s = x.letters();
  for (auto& letter : s) {
    for (std::int64_t i = 0; i < k; ++i) letter = sys.phi(letter);
    for (std::int64_t i = 0; i > k; --i) letter = sys.phi_inverse(letter);
  }
  return from_greedy_unchecked(std::move(s));
}

std::vector<SimpleId> right_greedy(const GarsideSystem& sys, const Positive& x) {
  Seq r = to_right_view(sys, x);
  return Seq(r.rbegin(), r.rend());
}

GroupEl to_group(const GarsideSystem& sys, const Positive& x) { return canonical(sys, 0, x); }

GroupEl canonical(const GarsideSystem& sys, std::int64_t exponent, const Positive& body) {
  const auto& letters = body.letters();
  std::size_t k = 0;
  while (k < letters.size() && letters[k] == sys.delta()) ++k;
  GroupEl g;
  g.exponent = exponent + static_cast<std::int64_t>(k);
  g.body = from_greedy_unchecked(Seq(letters.begin() + static_cast<std::ptrdiff_t>(k), letters.end()));
  return g;
}

std::optional<Positive> as_positive(const GarsideSystem& sys, const GroupEl& g) {
  if (g.exponent < 0) return std::nullopt;
  Seq s(static_cast<std::size_t>(g.exponent), sys.delta());
  s.insert(s.end(), g.body.letters().begin(), g.body.letters().end());
  return from_greedy_unchecked(std::move(s));
}

GroupEl g_multiply(const GarsideSystem& sys, const GroupEl& x, const GroupEl& y) {
  // Δᵃ·p·Δᵇ·q = Δᵃ⁺ᵇ·φᵇ(p)·q
  Positive twisted = phi_power(sys, x.body, y.exponent);
  return canonical(sys, x.exponent + y.exponent, multiply(sys, twisted, y.body));
}

GroupEl g_delta(std::int64_t n) {
  GroupEl g;
  g.exponent = n;
  return g;
}

GroupEl g_atom(const GarsideSystem& sys, AtomId a) { return canonical(sys, 0, atom_element(sys, a)); }

GroupEl g_invert(const GarsideSystem& sys, const GroupEl& x) {
  // s⁻¹ = Δ⁻¹·(Δ/s)
  GroupEl acc;
  const auto& letters = x.body.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    GroupEl inv = canonical(sys, -1, from_simple(sys, sys.complement(*it, Side::right)));
    acc = g_multiply(sys, acc, inv);
  }
  return g_multiply(sys, acc, g_delta(-x.exponent));
}

GroupEl g_normalize(const GarsideSystem& sys, std::span<const GroupLetter> word) {
  GroupEl acc;
  for (const auto& letter : word) {
    GroupEl g = letter.atom ? g_atom(sys, *letter.atom) : g_delta(1);
    if (letter.inverse) g = g_invert(sys, g);
    acc = g_multiply(sys, acc, g);
  }
  return acc;
}

std::pair<Positive, Positive> fraction(const GarsideSystem& sys, const GroupEl& g, Side side) {
  if (g.exponent >= 0) {
    Positive p = *as_positive(sys, g);
    if (side == Side::left) return {Positive{}, p};
    return {p, Positive{}};
  }
  const auto m = static_cast<std::size_t>(-g.exponent);
  Positive dm = delta_power(sys, m);
  if (side == Side::left) {
    // g = (Δᵐ)⁻¹·body
    Positive d = meet(sys, dm, g.body, Side::left);
    return {quotient(sys, d, dm, Side::left), quotient(sys, d, g.body, Side::left)};
  }
  // g = Δ⁻ᵐ·body = φᵐ(body)·Δ⁻ᵐ
  Positive num = phi_power(sys, g.body, static_cast<std::int64_t>(m));
  Positive d = meet(sys, num, dm, Side::right);
  return {quotient(sys, d, num, Side::right), quotient(sys, d, dm, Side::right)};
}

std::optional<AtomSet> conjugate_atomset(const GarsideSystem& sys, const GroupEl& g, AtomSet x) {
  GroupEl inv = g_invert(sys, g);
  AtomSet out;
  for (AtomId a : x.members()) {
    GroupEl h = g_multiply(sys, g_multiply(sys, inv, g_atom(sys, a)), g);
    if (h.exponent != 0 || h.body.size() != 1) return std::nullopt;
    auto atom = sys.simple_atom(h.body.head());
    if (!atom) return std::nullopt;
    out.insert(*atom);
  }
  if (out.size() != x.size()) return std::nullopt;
  return out;
}

std::vector<Positive> enumerate_elements(const GarsideSystem& sys, std::size_t max_len) {
  std::vector<Positive> all{Positive{}};
  std::set<Positive> seen{Positive{}};
  std::size_t begin = 0;
  for (std::size_t len = 0; len < max_len; ++len) {
    std::size_t end = all.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (AtomId a = 0; a < sys.atom_count(); ++a) {
        Positive next = multiply(sys, all[i], atom_element(sys, a));
        if (seen.insert(next).second) all.push_back(std::move(next));
      }
    }
    begin = end;
  }
  return all;
}

std::vector<Positive> divisors(const GarsideSystem& sys, const Positive& x, Side side) {
  std::vector<Positive> out{Positive{}};
  std::set<Positive> seen{Positive{}};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (AtomId a = 0; a < sys.atom_count(); ++a) {
      Positive next = side == Side::left ? multiply(sys, out[i], atom_element(sys, a)) : multiply(sys, atom_element(sys, a), out[i]);
      if (seen.count(next) || !divides(sys, next, x, side)) continue;
      seen.insert(next);
      out.push_back(std::move(next));
    }
  }
  return out;
}

}  // namespace garside
