#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "garside/quasicenter.hpp"

using namespace garside;
using fixtures::load;
using fixtures::pos;

TEST(QuasiCenter, DeltaGExamples) {
  const auto b3 = load("b3");
  const Positive d = from_simple(b3, b3.delta());
  EXPECT_EQ(delta_g(b3, pos(b3, "s"), Side::left), d);
  EXPECT_EQ(delta_g(b3, d, Side::left), d);
  const auto e23 = load("exef23");
  EXPECT_EQ(delta_g(e23, pos(e23, "c"), Side::left), pos(e23, "c"));
}

TEST(QuasiCenter, TauExamples) {
  const auto b3 = load("b3");
  const Positive d = from_simple(b3, b3.delta());
  EXPECT_EQ(tau(b3, pos(b3, "s")), d);
  EXPECT_EQ(tau(b3, d), d);
  const auto e23 = load("exef23");
  EXPECT_EQ(tau(e23, pos(e23, "a")), pos(e23, "a a"));
  EXPECT_EQ(tau(e23, pos(e23, "b")), pos(e23, "a a"));
}

TEST(QuasiCenter, TauIsQuasiCentralMultiple) {
  for (const char* name : {"b3", "b4", "exef23", "exef24"}) {
    const auto sys = load(name);
    for (const Positive& g : enumerate_elements(sys, 3)) {
      if (g.empty()) continue;
      const Positive t = tau(sys, g);
      EXPECT_TRUE(is_quasi_central(sys, t));
      EXPECT_TRUE(divides(sys, g, t, Side::left));
      EXPECT_TRUE(divides(sys, g, t, Side::right));
    }
  }
}

TEST(QuasiCenter, Bases) {
  const auto b3 = load("b3");
  const QZBasis q3 = qz_basis(b3);
  ASSERT_EQ(q3.basis.size(), 1u);
  EXPECT_EQ(q3.basis[0], from_simple(b3, b3.delta()));
  EXPECT_EQ(q3.atom_map.at(0), 0u);
  EXPECT_EQ(q3.atom_map.at(1), 0u);
  const auto e23 = load("exef23");
  const QZBasis q23 = qz_basis(e23);
  ASSERT_EQ(q23.basis.size(), 2u);
  EXPECT_EQ(q23.basis[q23.atom_map.at(0)], pos(e23, "a a"));
  EXPECT_EQ(q23.basis[q23.atom_map.at(1)], pos(e23, "a a"));
  EXPECT_EQ(q23.basis[q23.atom_map.at(2)], pos(e23, "c"));
  EXPECT_TRUE(check_qz_basis(e23, q23, e23.all_atoms()).empty());
}

TEST(QuasiCenter, Decompose) {
  const auto b3 = load("b3");
  const QZBasis q = qz_basis(b3);
  EXPECT_EQ(qz_decompose(b3, q, delta_power(b3, 2)), (std::vector<std::size_t>{0, 0}));
  EXPECT_FALSE(qz_decompose(b3, q, pos(b3, "s")).has_value());
  EXPECT_EQ(qz_decompose(b3, q, Positive{}), std::vector<std::size_t>{});
  const auto e23 = load("exef23");
  const QZBasis q23 = qz_basis(e23);
  const auto parts = qz_decompose(e23, q23, pos(e23, "a a c c b b"));
  ASSERT_TRUE(parts.has_value());
  EXPECT_EQ(parts->size(), 4u);
}

TEST(QuasiCenter, CertificateMatchesDefinitionAtDeskScale) {
  // x is quasi-central iff xG⁺ = G⁺x; check it against bounded divisibility sets.
  for (const char* name : {"b3", "exef23", "exef24"}) {
    const auto sys = load(name);
    const auto hs = enumerate_elements(sys, 3);
    for (const Positive& x : enumerate_elements(sys, 4)) {
      bool bounded = true;
      for (const Positive& h : hs)
        bounded = bounded && divides(sys, x, multiply(sys, h, x), Side::left) &&
                  divides(sys, x, multiply(sys, x, h), Side::right);
      EXPECT_EQ(is_quasi_central(sys, x), bounded) << fixtures::word(sys, x);
    }
  }
}

TEST(QuasiCenter, TauRespectsDivisibilityAndJoins) {
  for (const char* name : {"b4", "exef23", "exef24"}) {
    const auto sys = load(name);
    const auto elems = enumerate_elements(sys, 6);
    for (const Positive& g : elems) {
      if (g.empty() || !is_quasi_central(sys, g)) continue;
      for (AtomId s = 0; s < sys.atom_count(); ++s)
        if (divides(sys, atom_element(sys, s), g, Side::left))
          EXPECT_TRUE(divides(sys, tau(sys, atom_element(sys, s)), g, Side::left));
    }
    std::mt19937 rng(3);
    const auto small = enumerate_elements(sys, 3);
    std::uniform_int_distribution<std::size_t> pick(1, small.size() - 1);
    for (int i = 0; i < 40; ++i) {
      const Positive& g = small[pick(rng)];
      const Positive& h = small[pick(rng)];
      EXPECT_EQ(tau(sys, join(sys, g, h, Side::left)), join(sys, tau(sys, g), tau(sys, h), Side::left));
    }
  }
}

TEST(QuasiCenter, AtomTausCommuteOrAreCoprime) {
  for (const char* name : {"b3", "b4", "exef23", "exef24"}) {
    const auto sys = load(name);
    for (AtomId s = 0; s < sys.atom_count(); ++s)
      for (AtomId t = 0; t < sys.atom_count(); ++t) {
        const Positive ts = tau(sys, atom_element(sys, s)), tt = tau(sys, atom_element(sys, t));
        EXPECT_EQ(multiply(sys, ts, tt), multiply(sys, tt, ts));
        if (ts != tt) {
          EXPECT_TRUE(meet(sys, ts, tt, Side::left).empty());
          EXPECT_TRUE(meet(sys, ts, tt, Side::right).empty());
        }
      }
  }
}
