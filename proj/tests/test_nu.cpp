#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "garside/quasicenter.hpp"

using namespace garside;
using fixtures::atom;
using fixtures::load;
using fixtures::pos;
using fixtures::set;

TEST(Nu, B3Examples) {
  const auto b3 = load("b3");
  const NuAtom st = nu(b3, set(b3, "s"), atom(b3, "t"), NuVariant::plain);
  EXPECT_EQ(st.element, pos(b3, "t s"));
  EXPECT_EQ(st.target, set(b3, "t"));
  EXPECT_EQ(st.kind, NuKind::nu);
  const NuAtom ss = nu(b3, set(b3, "s"), atom(b3, "s"), NuVariant::plain);
  EXPECT_EQ(ss.element, pos(b3, "s"));
  EXPECT_EQ(ss.target, set(b3, "s"));
  EXPECT_EQ(ss.kind, NuKind::tau);
}

TEST(Nu, Exef24Example) {
  const auto e24 = load("exef24");
  EXPECT_EQ(nu_element(e24, set(e24, "a"), atom(e24, "b"), NuVariant::plain), pos(e24, "b a"));
  EXPECT_EQ(nu_element(e24, set(e24, "a"), atom(e24, "b"), NuVariant::tilde), pos(e24, "a b"));
}

TEST(Nu, Classify) {
  const auto b3 = load("b3");
  const auto at_s = classify(b3, set(b3, "s"));
  ASSERT_EQ(at_s.size(), 2u);
  EXPECT_EQ(at_s[0].kind, NuKind::tau);
  EXPECT_EQ(at_s[1].element, pos(b3, "t s"));
  const auto at_empty = classify(b3, AtomSet{});
  ASSERT_EQ(at_empty.size(), 2u);
  for (const NuAtom& a : at_empty) {
    EXPECT_EQ(a.target, AtomSet{});
    EXPECT_EQ(a.kind, NuKind::nu);
  }
  const auto at_top = classify(b3, b3.all_atoms());
  ASSERT_EQ(at_top.size(), 1u);
  EXPECT_EQ(at_top[0].element, pos(b3, "s t s"));
  EXPECT_EQ(at_top[0].kind, NuKind::tau);
}

TEST(Nu, CoxeterFormulas) {
  const auto b4 = load("b4");
  for (AtomSet x : parabolic_objects(b4))
    for (AtomId s = 0; s < b4.atom_count(); ++s) {
      if (x.contains(s)) continue;
      AtomSet xs = x;
      xs.insert(s);
      const Positive dx = delta_of(b4, x), dxs = delta_of(b4, xs);
      EXPECT_EQ(multiply(b4, dx, nu_element(b4, x, s, NuVariant::plain)), dxs);
      EXPECT_EQ(multiply(b4, nu_element(b4, x, s, NuVariant::tilde), dx), dxs);
    }
}

TEST(Nu, AtomInvariants) {
  for (const char* name : {"b3", "b4", "exef23", "exef24"}) {
    const auto sys = load(name);
    for (AtomSet x : parabolic_objects(sys))
      for (NuVariant v : {NuVariant::plain, NuVariant::tilde})
        for (const NuAtom& a : classify(sys, x, v)) {
          // Plain atoms leave X, tilde atoms arrive at X.
          EXPECT_EQ(v == NuVariant::plain ? a.source : a.target, x);
          EXPECT_EQ(conjugate_atomset(sys, to_group(sys, a.element), a.source), a.target);
          EXPECT_EQ(a.kind == NuKind::tau, contains(sys, make_parabolic(sys, x), a.element));
          if (a.kind == NuKind::tau) EXPECT_EQ(a.source, a.target);
        }
  }
}

// Each plain atom into Y is a tilde atom at Y.
TEST(Nu, PlainAndTildeEdgeSetsAgree) {
  for (const char* name : {"b3", "b4", "exef23", "exef24"}) {
    const auto sys = load(name);
    std::set<std::tuple<std::uint64_t, Positive, std::uint64_t>> plain, tilde;
    for (AtomSet x : parabolic_objects(sys)) {
      for (const NuAtom& a : classify(sys, x, NuVariant::plain))
        plain.emplace(a.source.bits(), a.element, a.target.bits());
      for (const NuAtom& a : classify(sys, x, NuVariant::tilde))
        tilde.emplace(a.source.bits(), a.element, a.target.bits());
    }
    EXPECT_EQ(plain, tilde) << name;
  }
}

TEST(Nu, TauAtomsAreLocalQuasiCenter) {
  for (const char* name : {"b3", "b4"}) {
    const auto sys = load(name);
    for (AtomSet x : parabolic_objects(sys))
      for (AtomId s : x.members())
        EXPECT_EQ(nu_element(sys, x, s, NuVariant::plain), tau(sys, atom_element(sys, s), x));
  }
  for (const char* name : {"exef23", "exef24"}) {
    const auto sys = load(name);
    for (AtomSet x : parabolic_objects(sys))
      for (AtomId s : x.members())
        EXPECT_TRUE(is_quasi_central(sys, nu_element(sys, x, s, NuVariant::plain), x));
  }
}

TEST(Nu, Exef23NonTopRowsFollowTheDirectProduct) {
  const auto e23 = load("exef23");
  EXPECT_EQ(nu_element(e23, AtomSet{}, atom(e23, "a"), NuVariant::plain), pos(e23, "a"));
  EXPECT_EQ(nu_element(e23, set(e23, "a,b"), atom(e23, "c"), NuVariant::plain), pos(e23, "c"));
  EXPECT_EQ(nu_element(e23, set(e23, "c"), atom(e23, "a"), NuVariant::plain), pos(e23, "a"));
  EXPECT_EQ(nu_element(e23, set(e23, "a,b"), atom(e23, "b"), NuVariant::plain), pos(e23, "a a"));
}

// The value a²c for every atom at the top object is not ribbon-atomic: c divides it and is a ribbon.
TEST(Nu, Exef23TopValueA2CFailsAtomicity) {
  auto doc = fixtures::raw_json("exef23");
  for (const char* s : {"a", "b", "c"}) {
    doc["nu_table"]["a,b,c"][s] = {"a", "a", "c"};
    doc["nu_tilde_table"]["a,b,c"][s] = {"a", "a", "c"};
  }
  const auto sys = system_from_json(doc);
  const auto v = verify_nu_axioms(sys, 6);
  EXPECT_TRUE(std::any_of(v.begin(), v.end(), [](const NuViolation& x) { return x.axiom == 1; }));
}

TEST(Nu, AxiomsAndNegativeControl) {
  for (const char* name : {"b3", "b4", "b3_table", "exef23", "exef24"}) EXPECT_TRUE(verify_nu_axioms(load(name), 6).empty()) << name;
  EXPECT_FALSE(verify_nu_axioms(load("exef24_corrupted"), 6).empty());
}

TEST(Nu, Errors) {
  auto doc = fixtures::raw_json("exef24");
  doc.erase("nu_table");
  const auto sys = system_from_json(doc);
  try {
    nu(sys, set(sys, "a"), atom(sys, "b"), NuVariant::plain);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::nu_table_missing);
  }
  auto bad = fixtures::raw_json("exef24");
  bad["nu_table"]["a"]["b"] = {"c"};
  try {
    const auto s2 = system_from_json(bad);
    nu(s2, set(s2, "a"), atom(s2, "b"), NuVariant::plain);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::invalid_nu_value);
  }
}

TEST(Nu, PositiveRibbons) {
  const auto b3 = load("b3");
  EXPECT_EQ(is_positive_ribbon(b3, pos(b3, "t s"), set(b3, "s")), set(b3, "t"));
  EXPECT_EQ(is_positive_ribbon(b3, Positive{}, set(b3, "s")), set(b3, "s"));
  EXPECT_FALSE(is_positive_ribbon(b3, pos(b3, "s"), set(b3, "t")).has_value());
  EXPECT_EQ(ribbon_source(b3, pos(b3, "t s"), set(b3, "t")), set(b3, "s"));
}
