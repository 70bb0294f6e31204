#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "garside/rewrite.hpp"

using namespace garside;
using fixtures::load;
using fixtures::pos;

namespace {

bool same(const Presentation& a, const Presentation& b) {
  if (a.quiver.objects != b.quiver.objects || a.quiver.edges != b.quiver.edges) return false;
  if (a.relations.size() != b.relations.size()) return false;
  for (std::size_t i = 0; i < a.relations.size(); ++i) {
    const Relation &x = a.relations[i], &y = b.relations[i];
    if (x.lhs != y.lhs || x.rhs != y.rhs || x.kind != y.kind || x.source != y.source) return false;
  }
  return true;
}

}  // namespace

TEST(Io, WordParsing) {
  const auto b3 = load("b3");
  EXPECT_EQ(parse_word(b3, "s t s"), (std::vector<AtomId>{0, 1, 0}));
  EXPECT_EQ(parse_word(b3, "sts"), (std::vector<AtomId>{0, 1, 0}));
  EXPECT_TRUE(parse_word(b3, "").empty());
  EXPECT_THROW(parse_word(b3, "s q"), Error);
  const auto b4 = load("b4");
  EXPECT_EQ(parse_word(b4, "s1 s3"), (std::vector<AtomId>{0, 2}));
  EXPECT_THROW(parse_word(b4, "s1s3"), Error);
  EXPECT_EQ(parse_group_word(b3, "DELTA"), g_delta(1));
  EXPECT_EQ(parse_group_word(b3, "DELTA^-1"), g_delta(-1));
  EXPECT_THROW(parse_group_word(b3, "s^2"), Error);
}

TEST(Io, AtomSets) {
  const auto b4 = load("b4");
  EXPECT_EQ(parse_atomset(b4, "s1,s3").bits(), 0b101u);
  EXPECT_EQ(parse_atomset(b4, "{s1, s3}").bits(), 0b101u);
  EXPECT_TRUE(parse_atomset(b4, "").empty());
  EXPECT_EQ(format_atomset(b4, parse_atomset(b4, "s3,s1")), "{s1,s3}");
  EXPECT_EQ(format_atomset(b4, AtomSet{}), "{}");
}

TEST(Io, Formatting) {
  const auto b3 = load("b3");
  EXPECT_EQ(format_normal_form(b3, pos(b3, "s t s t")), "sts . t");
  EXPECT_EQ(format_normal_form(b3, Positive{}), "1");
  EXPECT_EQ(format_word(b3, pos(b3, "s t s")), "s t s");
  EXPECT_EQ(format_group(b3, g_invert(b3, fixtures::grp(b3, "s"))), "DELTA^-1 . st");
  const auto b4 = load("b4");
  EXPECT_EQ(format_normal_form(b4, pos(b4, "s1 s2")), "s1*s2");
  const Json g = group_json(b3, fixtures::grp(b3, "DELTA^-1 s"));
  EXPECT_EQ(g.at("exponent"), -1);
}

TEST(Io, SpecParsing) {
  const auto doc = fixtures::raw_json("b4");
  const CoxeterSpec spec = coxeter_spec_from_json(doc);
  EXPECT_EQ(spec.atoms.size(), 3u);
  EXPECT_EQ(spec.matrix[0][2], 2);
  const auto tab = fixtures::raw_json("exef24");
  const TableSpec t = table_spec_from_json(tab);
  EXPECT_EQ(t.delta, "D");
  ASSERT_TRUE(t.nu_table.has_value());
  EXPECT_THROW(load_system("/nonexistent/system.json"), Error);
}

TEST(Io, PresentationRoundTrips) {
  for (const char* name : {"b3", "b4", "exef24"}) {
    const auto sys = load(name);
    const Presentation p = presentation(sys);
    EXPECT_TRUE(same(p, presentation_from_json(sys, presentation_json(sys, p)))) << name;
    EXPECT_TRUE(same(p, presentation_from_rewriting(sys, presentation_rewriting(sys, p)))) << name;
  }
}

TEST(Io, PresentationJsonShape) {
  const auto b3 = load("b3");
  const Json j = presentation_json(b3, presentation(b3));
  EXPECT_EQ(j.at("objects").size(), 4u);
  EXPECT_EQ(j.at("generators").size(), 7u);
  for (const auto& g : j.at("generators"))
    for (const char* key : {"id", "source", "label", "element", "target", "kind"}) EXPECT_TRUE(g.contains(key)) << key;
  for (const auto& r : j.at("relations"))
    for (const char* key : {"kind", "source", "lhs", "rhs"}) EXPECT_TRUE(r.contains(key)) << key;
}

TEST(Io, PresentationInputValidation) {
  const auto b3 = load("b3");
  const Json good = presentation_json(b3, presentation(b3));
  // A false relation loads; verification reports it as unsound.
  Json j = good;
  for (auto& r : j["relations"])
    if (r["kind"] == 3) {
      r["rhs"] = r["lhs"];
      r["rhs"][0] = r["lhs"][1];
      break;
    }
  const VerifyReport report = verify_presentation(b3, presentation_from_json(b3, j), 4);
  EXPECT_FALSE(report.sound);
  // Structural errors are rejected while loading.
  Json broken = good;
  broken["relations"][0]["lhs"] = {99};
  EXPECT_THROW(presentation_from_json(b3, broken), Error);
  Json wrong_gen = good;
  wrong_gen["generators"][0]["target"] = {"s"};
  EXPECT_THROW(presentation_from_json(b3, wrong_gen), Error);
}
