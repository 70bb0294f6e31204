#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace garside;
using fixtures::load;

namespace {

SimpleId simple(const GarsideSystem& sys, const std::string& word) {
  const auto w = parse_word(sys, word);
  return sys.simple_from_word(w).value();
}

ErrorKind build_error(const nlohmann::json& doc) {
  try {
    system_from_json(doc);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error for " << doc.dump();
  return ErrorKind::invalid_input;
}

}  // namespace

TEST(System, CoxeterSizes) {
  EXPECT_EQ(load("b3").simple_count(), 6u);
  EXPECT_EQ(load("b4").simple_count(), 24u);
  const auto r1 = load("rank1");
  EXPECT_EQ(r1.simple_count(), 2u);
  EXPECT_EQ(r1.simple_length(r1.delta()), 1u);
  const auto b3 = load("b3");
  EXPECT_EQ(b3.simple_length(b3.delta()), 3u);
  const auto b4 = load("b4");
  EXPECT_EQ(b4.simple_length(b4.delta()), 6u);
}

TEST(System, InvariantsHoldOnAllFixtures) {
  for (const char* name : {"rank1", "b3", "b4", "b3_table", "exef23", "exef24"})
    EXPECT_TRUE(load(name).check_invariants().empty()) << name;
}

TEST(System, SimpleLatticeExamples) {
  const auto b3 = load("b3");
  EXPECT_EQ(b3.meet(simple(b3, "s t"), simple(b3, "t s"), Side::left), GarsideSystem::identity());
  EXPECT_EQ(b3.meet(simple(b3, "s t s"), simple(b3, "s t"), Side::left), simple(b3, "s t"));
  EXPECT_EQ(b3.join(simple(b3, "s"), simple(b3, "t"), Side::left), b3.delta());
  EXPECT_EQ(b3.join(simple(b3, "s"), simple(b3, "s t"), Side::left), simple(b3, "s t"));
  for (SimpleId x = 0; x < b3.simple_count(); ++x) {
    EXPECT_EQ(b3.meet(x, x, Side::left), x);
    EXPECT_EQ(b3.join(b3.delta(), x, Side::left), b3.delta());
  }
  EXPECT_EQ(b3.complement(simple(b3, "s"), Side::left), simple(b3, "t s"));
  EXPECT_EQ(b3.complement(b3.delta(), Side::left), GarsideSystem::identity());
  EXPECT_EQ(b3.complement(GarsideSystem::identity(), Side::left), b3.delta());
}

TEST(System, LatticeAxiomsExhaustive) {
  for (const char* name : {"b3", "b4", "exef23", "exef24"}) {
    const auto sys = load(name);
    const auto n = static_cast<SimpleId>(sys.simple_count());
    for (Side side : {Side::left, Side::right})
      for (SimpleId a = 0; a < n; ++a)
        for (SimpleId b = 0; b < n; ++b) {
          EXPECT_EQ(sys.meet(a, b, side), sys.meet(b, a, side));
          EXPECT_EQ(sys.join(a, b, side), sys.join(b, a, side));
          EXPECT_EQ(sys.meet(a, sys.join(a, b, side), side), a);
          EXPECT_EQ(sys.join(a, sys.meet(a, b, side), side), a);
          EXPECT_EQ(sys.divides(a, b, side), sys.meet(a, b, side) == a);
          for (SimpleId c = 0; c < n; c += 3)
            EXPECT_EQ(sys.meet(sys.meet(a, b, side), c, side), sys.meet(a, sys.meet(b, c, side), side));
        }
  }
}

TEST(System, ComplementsAndPhi) {
  for (const char* name : {"b3", "b4", "exef23", "exef24"}) {
    const auto sys = load(name);
    for (SimpleId a = 0; a < sys.simple_count(); ++a) {
      EXPECT_EQ(sys.product(a, sys.complement(a, Side::left)), sys.delta());
      EXPECT_EQ(sys.product(sys.complement(a, Side::right), a), sys.delta());
      EXPECT_EQ(sys.phi_inverse(sys.phi(a)), a);
      for (SimpleId b = 0; b < sys.simple_count(); ++b) {
        const auto ab = sys.product(a, b);
        if (ab) EXPECT_EQ(sys.product(sys.phi(a), sys.phi(b)), sys.phi(*ab));
      }
    }
    EXPECT_EQ(sys.phi(sys.delta()), sys.delta());
  }
}

TEST(System, TablePhi) {
  const auto e23 = load("exef23");
  for (AtomId a = 0; a < 3; ++a) EXPECT_EQ(e23.phi(e23.atom_simple(a)), e23.atom_simple(a));
  const auto e24 = load("exef24");
  const auto a = *e24.find_atom("a"), b = *e24.find_atom("b"), c = *e24.find_atom("c");
  EXPECT_EQ(e24.phi(e24.atom_simple(a)), e24.atom_simple(b));
  EXPECT_EQ(e24.phi(e24.atom_simple(b)), e24.atom_simple(a));
  EXPECT_EQ(e24.phi(e24.atom_simple(c)), e24.atom_simple(c));
}

TEST(System, TableAndCoxeterBuildsAgree) {
  const auto cox = load("b3");
  const auto tab = load("b3_table");
  ASSERT_EQ(cox.simple_count(), tab.simple_count());
  for (SimpleId a = 0; a < cox.simple_count(); ++a) {
    const auto ta = *tab.simple_from_word(cox.simple_word(a));
    for (SimpleId b = 0; b < cox.simple_count(); ++b) {
      const auto tb = *tab.simple_from_word(cox.simple_word(b));
      for (Side side : {Side::left, Side::right}) {
        EXPECT_EQ(*tab.simple_from_word(cox.simple_word(cox.join(a, b, side))), tab.join(ta, tb, side));
        EXPECT_EQ(*tab.simple_from_word(cox.simple_word(cox.meet(a, b, side))), tab.meet(ta, tb, side));
      }
    }
  }
}

TEST(System, CoxeterErrors) {
  using nlohmann::json;
  EXPECT_EQ(build_error(json::parse(R"({"kind":"coxeter","atoms":["s","t"],"coxeter_matrix":[[1,"inf"],["inf",1]]})")),
            ErrorKind::not_spherical);
  EXPECT_EQ(build_error(json::parse(R"({"kind":"coxeter","atoms":["s","t"],"coxeter_matrix":[[1,3],[2,1]]})")),
            ErrorKind::invalid_input);
  // Affine Ã₂ is infinite; enumeration must stop at the cap.
  CoxeterSpec affine{{"a", "b", "c"}, {{1, 3, 3}, {3, 1, 3}, {3, 3, 1}}};
  try {
    GarsideSystem::from_coxeter(affine, 2000);
    ADD_FAILURE() << "affine group accepted";
  } catch (const Error& e) {
    EXPECT_TRUE(e.kind() == ErrorKind::group_too_large || e.kind() == ErrorKind::not_spherical);
  }
  CoxeterSpec b4{{"s1", "s2", "s3"}, {{1, 3, 2}, {3, 1, 3}, {2, 3, 1}}};
  try {
    GarsideSystem::from_coxeter(b4, 10);
    ADD_FAILURE() << "cap ignored";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::group_too_large);
  }
}

TEST(System, TableComplementMissing) {
  // Δ = st with no relation: t has no left complement.
  const auto doc = nlohmann::json::parse(R"({"kind":"table","atoms":["s","t"],
    "simples":[{"id":"1","word":[]},{"id":"s","word":["s"]},{"id":"t","word":["t"]},{"id":"D","word":["s","t"]}],
    "delta":"D"})");
  EXPECT_EQ(build_error(doc), ErrorKind::complement_missing);
}

TEST(System, TableUndeclaredDivisor) {
  // ts divides tst = sts but is not declared.
  const auto doc = nlohmann::json::parse(R"({"kind":"table","atoms":["s","t"],
    "simples":[{"id":"1","word":[]},{"id":"s","word":["s"]},{"id":"t","word":["t"]},
               {"id":"st","word":["s","t"]},{"id":"D","word":["s","t","s"]},{"id":"D","word":["t","s","t"]}],
    "delta":"D"})");
  EXPECT_EQ(build_error(doc), ErrorKind::invalid_input);
}

TEST(System, TableMalformed) {
  EXPECT_EQ(build_error(nlohmann::json::parse(R"({"kind":"table","atoms":["s"],
    "simples":[{"id":"1","word":[]},{"id":"s","word":["s"]}],"delta":"X"})")),
            ErrorKind::invalid_input);
  EXPECT_EQ(build_error(nlohmann::json::parse(R"({"kind":"table","atoms":["s"],
    "simples":[{"id":"1","word":[]},{"id":"s","word":["q"]}],"delta":"s"})")),
            ErrorKind::invalid_input);
  EXPECT_EQ(build_error(nlohmann::json::parse(R"({"kind":"other"})")), ErrorKind::invalid_input);
}
