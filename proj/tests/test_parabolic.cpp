#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace garside;
using fixtures::load;
using fixtures::pos;
using fixtures::set;

TEST(Parabolic, DeltaOf) {
  const auto b3 = load("b3");
  EXPECT_EQ(delta_of(b3, set(b3, "s")), pos(b3, "s"));
  EXPECT_EQ(delta_of(b3, set(b3, "s,t")), pos(b3, "s t s"));
  EXPECT_TRUE(delta_of(b3, AtomSet{}).empty());
  const auto e23 = load("exef23");
  EXPECT_EQ(delta_of(e23, set(e23, "a,b")), pos(e23, "a a"));
  try {
    delta_of(e23, set(e23, "a"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::not_a_parabolic);
  }
}

TEST(Parabolic, DeltaIsJoinOnBothSides) {
  const auto b4 = load("b4");
  for (AtomSet x : parabolic_objects(b4)) {
    Positive l, r;
    for (AtomId a : x.members()) {
      l = join(b4, l, atom_element(b4, a), Side::left);
      r = join(b4, r, atom_element(b4, a), Side::right);
    }
    EXPECT_EQ(delta_of(b4, x), l);
    EXPECT_EQ(delta_of(b4, x), r);
  }
}

TEST(Parabolic, Contains) {
  const auto b3 = load("b3");
  const auto s = make_parabolic(b3, set(b3, "s"));
  EXPECT_TRUE(contains(b3, s, pos(b3, "s s")));
  EXPECT_FALSE(contains(b3, s, pos(b3, "s t")));
  EXPECT_TRUE(contains(b3, make_parabolic(b3, set(b3, "s,t")), pos(b3, "s t s")));
}

TEST(Parabolic, ContainsMatchesSupport) {
  const auto b4 = load("b4");
  for (AtomSet x : parabolic_objects(b4)) {
    const auto px = make_parabolic(b4, x);
    for (const Positive& p : enumerate_elements(b4, 5)) {
      // Artin monoids: the support of a positive word is an invariant.
      AtomSet support;
      for (AtomId a : atom_word(b4, p)) support.insert(a);
      EXPECT_EQ(contains(b4, px, p), support.is_subset_of(x));
    }
  }
}

TEST(Parabolic, MaxDivisorIn) {
  const auto b3 = load("b3");
  const auto s = make_parabolic(b3, set(b3, "s"));
  EXPECT_EQ(max_divisor_in(b3, s, pos(b3, "s t s"), Side::left), pos(b3, "s"));
  EXPECT_EQ(max_divisor_in(b3, s, pos(b3, "s s"), Side::left), pos(b3, "s s"));
  EXPECT_TRUE(max_divisor_in(b3, s, pos(b3, "t s"), Side::left).empty());
  for (const char* name : {"b4", "exef23", "exef24"}) {
    const auto sys = load(name);
    for (AtomSet x : parabolic_objects(sys)) {
      const auto px = make_parabolic(sys, x);
      for (const Positive& p : enumerate_elements(sys, 4))
        for (Side side : {Side::left, Side::right}) {
          const Positive d = max_divisor_in(sys, px, p, side);
          ASSERT_TRUE(divides(sys, d, p, side));
          EXPECT_TRUE(contains(sys, px, d));
          const Positive rest = quotient(sys, d, p, side);
          for (AtomId a : x.members()) EXPECT_FALSE(divides(sys, atom_element(sys, a), rest, side));
        }
    }
  }
}

TEST(Parabolic, Components) {
  const auto b4 = load("b4");
  EXPECT_EQ(components(b4, set(b4, "s1,s3")), (std::vector<AtomSet>{set(b4, "s1"), set(b4, "s3")}));
  EXPECT_EQ(components(b4, set(b4, "s1,s2")), (std::vector<AtomSet>{set(b4, "s1,s2")}));
  EXPECT_TRUE(components(b4, AtomSet{}).empty());
  const auto e23 = load("exef23");
  EXPECT_EQ(components(e23, e23.all_atoms()).size(), 2u);
  auto doc = fixtures::raw_json("exef23");
  doc["parabolics"] = nlohmann::json::array({nlohmann::json::array(), {"a", "b"}, {"c"}, {"a", "b", "c"}});
  const auto bare = system_from_json(doc);
  try {
    components(bare, bare.all_atoms());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::components_undeclared);
  }
}

TEST(Parabolic, GlobalNabla) {
  const auto b3 = load("b3");
  EXPECT_EQ(global_nabla(b3, make_parabolic(b3, set(b3, "s"))), pos(b3, "t s"));
  EXPECT_TRUE(global_nabla(b3, make_parabolic(b3, b3.all_atoms())).empty());
  EXPECT_EQ(global_nabla(b3, make_parabolic(b3, AtomSet{})), pos(b3, "s t s"));
}

TEST(Parabolic, Objects) {
  EXPECT_EQ(parabolic_objects(load("b4")).size(), 8u);
  EXPECT_EQ(parabolic_objects(load("exef24")).size(), 4u);
  const auto e24 = load("exef24");
  EXPECT_FALSE(is_parabolic(e24, set(e24, "c")));
  EXPECT_TRUE(is_parabolic(e24, set(e24, "a")));
}
