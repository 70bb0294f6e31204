#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "garside/rewrite.hpp"

using namespace garside;
using fixtures::load;
using fixtures::set;

TEST(Rewrite, EnumeratePaths) {
  const auto b3 = load("b3");
  const Quiver q = atom_quiver(b3);
  EXPECT_EQ(enumerate_paths(q, set(b3, "s"), 0).size(), 1u);
  EXPECT_EQ(enumerate_paths(q, set(b3, "s"), 1).size(), 3u);
  EXPECT_EQ(enumerate_paths(q, AtomSet{}, 2).size(), 7u);
  for (const Path& p : enumerate_paths(q, set(b3, "s"), 4)) EXPECT_TRUE(path_composes(q, set(b3, "s"), p));
}

TEST(Rewrite, ClosureBasics) {
  const auto b3 = load("b3");
  const Presentation p = presentation(b3);
  const CongruenceClosure none(p.quiver, {}, 3);
  EXPECT_EQ(none.class_count(), none.paths().size());
  const CongruenceClosure full(p.quiver, p.relations, 6);
  const auto braid = ribbon_join_paths(b3, p.quiver, AtomSet{}, 0, 1);
  const auto a = full.index_of({AtomSet{}, braid[0]});
  const auto b = full.index_of({AtomSet{}, braid[1]});
  ASSERT_TRUE(a && b);
  EXPECT_TRUE(full.equivalent(*a, *b));
  // Monotone in L.
  const CongruenceClosure shorter(p.quiver, p.relations, 5);
  for (std::size_t i = 0; i < shorter.paths().size(); ++i)
    for (std::size_t j = i + 1; j < shorter.paths().size(); j += 7)
      if (shorter.equivalent(i, j))
        EXPECT_TRUE(full.equivalent(*full.index_of(shorter.paths()[i]), *full.index_of(shorter.paths()[j])));
}

TEST(Rewrite, ClassesKeepEndpoints) {
  const auto b4 = load("b4");
  const Presentation p = presentation(b4);
  const CongruenceClosure c(p.quiver, p.relations, 4);
  std::map<std::size_t, std::pair<std::uint64_t, std::uint64_t>> ends;
  for (std::size_t i = 0; i < c.paths().size(); ++i) {
    const RootedPath& r = c.paths()[i];
    const auto e = std::make_pair(r.start.bits(), path_target(p.quiver, r.start, r.edges).bits());
    auto [it, fresh] = ends.emplace(c.find(i), e);
    EXPECT_EQ(it->second, e);
    (void)fresh;
  }
}

TEST(Rewrite, TypeOneCommutationAtTop) {
  const auto e23 = load("exef23");
  const Presentation p = presentation(e23);
  const AtomSet top = e23.all_atoms();
  std::vector<std::size_t> loops = p.quiver.edges_from(top);
  ASSERT_EQ(loops.size(), 2u);
  const CongruenceClosure c(p.quiver, p.relations, 2);
  EXPECT_TRUE(c.equivalent(*c.index_of({top, {loops[0], loops[1]}}), *c.index_of({top, {loops[1], loops[0]}})));
}

TEST(Rewrite, VerifyPresentation) {
  for (const char* name : {"rank1", "b3", "exef23", "exef24"}) {
    const auto sys = load(name);
    const VerifyReport r = verify_presentation(sys, presentation(sys), 5);
    EXPECT_TRUE(r.sound && r.complete) << name << ": " << r.detail;
  }
  const auto b3 = load("b3");
  const VerifyReport cut = verify_presentation(b3, without_kind(presentation(b3), 3), 4);
  EXPECT_TRUE(cut.sound);
  EXPECT_FALSE(cut.complete);
  ASSERT_TRUE(cut.counterexample.has_value());
}

TEST(Rewrite, CountRepresentingPaths) {
  const auto b4 = load("b4");
  const Quiver q = atom_quiver(b4);
  EXPECT_EQ(count_representing_paths(b4, q, set(b4, "s2"), 0, 2), 2u);
  const auto b3 = load("b3");
  EXPECT_EQ(count_representing_paths(b3, atom_quiver(b3), AtomSet{}, 0, 1), 2u);
  const auto e24 = load("exef24");
  // ν_{a}(b) = ν_{a}(c): a degenerate pair.
  EXPECT_THROW(count_representing_paths(e24, atom_quiver(e24), set(e24, "a"), 1, 2), Error);
}
