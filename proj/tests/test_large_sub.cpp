#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"
#include "frs/errors.hpp"
#include "frs/large_sub.hpp"

using namespace frs;

namespace {

Presentation free_a() { return fx::presentation(fx::system({"a", "b"}, {}), {"a"}); }
Presentation cube_a() { return fx::presentation(fx::system({"a"}, {{"aaa", "a"}}), {"a"}); }
Presentation commutative_a() { return fx::presentation(fx::system({"a", "b"}, {{"ba", "ab"}}), {"a"}); }
Presentation idempotent_a() {
  return fx::presentation(fx::system({"a", "b"}, {{"aa", "a"}, {"bab", "b"}}), {"a"});
}
Presentation free_a_ab() { return prepare_for_large_sub(fx::presentation(fx::system({"a", "b"}, {}), {"a", "ab"})); }

std::vector<std::string> names(const Alphabet& a, const std::vector<Letter>& ls) {
  std::vector<std::string> out;
  for (Letter l : ls) out.push_back(a.name(l));
  return out;
}

std::vector<std::string> formatted(const Alphabet& a, const std::vector<Word>& ws) {
  std::vector<std::string> out;
  for (const Word& w : ws) out.push_back(a.format(w));
  return out;
}

bool straight_letter(BKind k) { return k == BKind::a1 || k == BKind::c_l1 || k == BKind::c_l2; }

}  // namespace

TEST(Classify, Examples) {
  auto f = free_a();
  auto cls = classify_letters(f);
  EXPECT_EQ(names(f.system.alphabet(), cls.a1), std::vector<std::string>{"b"});
  EXPECT_EQ(names(f.system.alphabet(), cls.a_s), std::vector<std::string>{"a"});

  auto c = cube_a();
  auto cc = classify_letters(c);
  EXPECT_TRUE(cc.a1.empty());
  EXPECT_EQ(names(c.system.alphabet(), cc.a_s), std::vector<std::string>{"a"});

  auto p = fx::presentation(fx::system({"a", "b", "s"}, {{"ab", "s"}}), {"s"});
  auto pc = classify_letters(p);
  EXPECT_EQ(names(p.system.alphabet(), pc.a1), (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(names(p.system.alphabet(), pc.a_s), std::vector<std::string>{"s"});
  EXPECT_TRUE(pc.excluded.empty());
}

TEST(Classify, LetterRewritingOntoComplementIsExcluded) {
  auto p = fx::presentation(fx::system({"a", "b", "e"}, {{"e", "a"}}), {"a"});
  auto cls = classify_letters(p);
  EXPECT_EQ(names(p.system.alphabet(), cls.a1), std::vector<std::string>{"b"});
  EXPECT_EQ(names(p.system.alphabet(), cls.excluded), std::vector<std::string>{"e"});
}

TEST(Membership, InTAndInAT) {
  auto f = free_a();
  auto c = cube_a();
  EXPECT_FALSE(in_T(fx::word(f.system, "a"), f));
  EXPECT_TRUE(in_T(fx::word(c.system, "aa"), c));
  EXPECT_FALSE(in_T(fx::word(c.system, "aaa"), c));

  EXPECT_TRUE(in_AT(fx::word(f.system, "aba"), f));
  EXPECT_FALSE(in_AT(fx::word(c.system, "aaaa"), c));
  EXPECT_FALSE(in_AT(fx::word(f.system, "a"), f));
  EXPECT_TRUE(in_AT(fx::word(c.system, "aa"), c));
}

TEST(FSets, Examples) {
  auto f = free_a();
  auto fs = build_f_sets(classify_letters(f), f);
  const auto& a = f.system.alphabet();
  EXPECT_EQ(formatted(a, fs.f1), std::vector<std::string>{"b"});
  EXPECT_EQ(formatted(a, fs.f2), (std::vector<std::string>{"a a", "a b"}));
  EXPECT_EQ(formatted(a, fs.f3), std::vector<std::string>{"b a"});
  EXPECT_EQ(formatted(a, fs.f4), (std::vector<std::string>{"a a a", "a b a"}));

  auto c = cube_a();
  auto cs = build_f_sets(classify_letters(c), c);
  EXPECT_TRUE(cs.f1.empty());
  EXPECT_EQ(formatted(c.system.alphabet(), cs.f2), std::vector<std::string>{"a a"});
  EXPECT_TRUE(cs.f3.empty());
  EXPECT_TRUE(cs.f4.empty());
}

TEST(BAlphabet, SixLettersForFreeSemigroup) {
  auto f = free_a();
  auto cls = classify_letters(f);
  auto b = build_b_alphabet(build_f_sets(cls, f), cls, f.system.alphabet());
  EXPECT_EQ(b.alphabet.names(), (std::vector<std::string>{"b", "c_b_a", "c_a_b", "c_a_a", "c_a_b_a", "c_a_a_a"}));
  std::vector<BKind> kinds;
  for (const auto& info : b.table) kinds.push_back(info.kind);
  EXPECT_EQ(kinds, (std::vector<BKind>{BKind::a1, BKind::c_r, BKind::c_l1, BKind::c_l2, BKind::c_m1, BKind::c_m2}));
  EXPECT_EQ(to_string(BKind::c_m1), "C_M1");
}

TEST(BAlphabet, NameCollisionGetsNumericSuffix) {
  auto p = fx::presentation(fx::system({"a", "c_a_a"}, {}), {"a"});
  auto cls = classify_letters(p);
  auto b = build_b_alphabet(build_f_sets(cls, p), cls, p.system.alphabet());
  EXPECT_TRUE(b.alphabet.find("c_a_a_1").has_value());
  EXPECT_EQ(b.table[b.alphabet.at("c_a_a_1").id].image, fx::word(p.system, "a a"));
  EXPECT_EQ(b.table[b.alphabet.at("c_a_a").id].kind, BKind::a1);
}

TEST(PhiT, Examples) {
  auto c = build_construction(free_a());
  const auto& b = c.b.alphabet;
  const auto& a = c.source.system.alphabet();
  EXPECT_EQ(a.format(phi_t(b.parse("c_b_a c_a_b"), c.b)), "b a a b");
  EXPECT_EQ(a.format(phi_t(b.parse("b"), c.b)), "b");
  auto k = build_construction(cube_a());
  EXPECT_EQ(k.source.system.alphabet().format(phi_t(k.b.alphabet.parse("c_a_a c_a_a"), k.b)), "a a a a");
}

TEST(RhoT, Examples) {
  auto c = build_construction(free_a());
  const auto& a = c.source.system.alphabet();
  const auto& b = c.b.alphabet;
  EXPECT_EQ(b.format(rho_t(fx::word(a, "baab"), c)), "b c_a_a b");
  EXPECT_EQ(b.format(rho_t(fx::word(a, "aba"), c)), "c_a_b_a");
  EXPECT_EQ(b.format(rho_t(fx::word(a, "b"), c)), "b");
  EXPECT_THROW(rho_t(fx::word(a, "a"), c), PreconditionError);
  auto k = build_construction(cube_a());
  EXPECT_THROW(rho_t(fx::word(k.source.system, "aaaa"), k), PreconditionError);
}

TEST(Construction, CubeFaithfulAndInterreduced) {
  auto c = build_construction(cube_a());
  EXPECT_EQ(c.n_bound, 7u);
  EXPECT_EQ(c.b.alphabet.names(), std::vector<std::string>{"c_a_a"});
  EXPECT_EQ(fx::rule_strings(c.r_t), (std::vector<std::string>{"c_a_a c_a_a -> c_a_a", "c_a_a c_a_a c_a_a -> c_a_a"}));
  EXPECT_EQ(c.r_t.provenance(), (std::vector<std::string>{"D1", "D1"}));
  EXPECT_TRUE(verify_complete(c.r_t).complete());

  ConstructionOptions o;
  o.interreduce = true;
  auto i = build_construction(cube_a(), o);
  EXPECT_EQ(fx::rule_strings(i.r_t), std::vector<std::string>{"c_a_a c_a_a -> c_a_a"});
  EXPECT_TRUE(verify_complete(i.r_t).complete());
}

TEST(Construction, FreeSemigroupHasOnlyD2Rules) {
  auto c = build_construction(free_a());
  EXPECT_EQ(c.n_bound, 4u);
  ASSERT_FALSE(c.r_t.empty());
  for (std::size_t i = 0; i < c.r_t.size(); ++i) EXPECT_EQ(c.r_t.provenance(i), "D2");
  auto rules = fx::rule_strings(c.r_t);
  EXPECT_NE(std::find(rules.begin(), rules.end(), "c_b_a c_a_b -> b c_a_a b"), rules.end());
  TerminationOptions t;
  t.heavy = c.heavy_letters();
  EXPECT_TRUE(verify_complete(c.r_t, t).complete());
}

TEST(Construction, Errors) {
  auto empty_t = fx::presentation(fx::system({"a"}, {{"aa", "a"}}), {"a"});
  EXPECT_THROW(build_construction(empty_t), Error);
  try {
    build_construction(empty_t);
  } catch (const PreconditionError&) {
    FAIL() << "an empty B is not a precondition failure";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("not expressible"), std::string::npos);
  }

  auto not_sub = prepare_for_large_sub(fx::presentation(fx::system({"a", "b"}, {}), {"ab"}));
  EXPECT_THROW(build_construction(not_sub), PreconditionError);

  auto unprepared = fx::presentation(fx::system({"a", "b"}, {}), {"ab"});
  EXPECT_THROW(build_construction(unprepared), PreconditionError);
}

class ConstructionLaws : public ::testing::TestWithParam<int> {
 protected:
  static Presentation source(int i) {
    switch (i) {
      case 0: return free_a();
      case 1: return cube_a();
      case 2: return commutative_a();
      case 3: return idempotent_a();
      default: return free_a_ab();
    }
  }
};

TEST_P(ConstructionLaws, RuleFamilyShapes) {
  const auto c = build_construction(source(GetParam()));
  const auto& r = c.source.system;
  std::size_t max_lhs = 0;
  for (const auto& rule : r.rules()) max_lhs = std::max(max_lhs, rule.lhs.size());
  EXPECT_EQ(c.n_bound, max_lhs + 4);
  for (const auto& info : c.b.table) {
    EXPECT_LE(info.image.size(), 3u);
    EXPECT_GE(info.image.size(), 1u);
  }
  for (std::size_t i = 0; i < c.r_t.size(); ++i) {
    const Rule& rule = c.r_t.rule(i);
    const Word img_l = phi_t(rule.lhs, c.b);
    const Word img_r = phi_t(rule.rhs, c.b);
    if (c.r_t.provenance(i) == "D1") {
      EXPECT_LE(img_l.size(), c.n_bound);
      EXPECT_FALSE(is_irreducible(img_l, r));
      EXPECT_NE(img_l, img_r);
      EXPECT_EQ(reaches(img_l, img_r, r), Reachability::yes);
    } else {
      ASSERT_EQ(c.r_t.provenance(i), "D2");
      EXPECT_EQ(rule.lhs.size(), 2u);
      EXPECT_TRUE(in_AT(img_l, c.source));
      EXPECT_NE(rule.lhs, rho_t(img_l, c));
      EXPECT_EQ(rule.rhs, rho_t(img_l, c));
      EXPECT_EQ(img_l, img_r);
      EXPECT_FALSE(straight_letter(c.kind(rule.lhs[0])));
      HeavyMeasure m{c.heavy_letters(), HeavyMeasure::Priority::count_first};
      EXPECT_TRUE(measure_decreases(rule.lhs, rule.rhs, m)) << c.r_t.format(rule);
    }
  }
}

TEST_P(ConstructionLaws, RhoInvertsPhiAndHasStraightShape) {
  const auto c = build_construction(source(GetParam()));
  const auto& a = c.source.system.alphabet();
  const std::size_t len = a.size() > 2 ? 7 : 8;
  for (const Word& w : words_up_to(a.letters(), len)) {
    if (!in_AT(w, c.source)) continue;
    const Word u = rho_t(w, c);
    ASSERT_EQ(phi_t(u, c.b), w) << a.format(w);
    for (std::size_t i = 0; i + 1 < u.size(); ++i) ASSERT_TRUE(straight_letter(c.kind(u[i]))) << a.format(w);
  }
}

TEST_P(ConstructionLaws, StraightWordsRoundTrip) {
  const auto c = build_construction(source(GetParam()));
  const auto letters = c.b.alphabet.letters();
  const std::size_t len = letters.size() > 6 ? 3 : 5;
  for (const Word& u : words_up_to(letters, len)) {
    ASSERT_GE(phi_t(u, c.b).size(), u.size());
    bool straight = true;
    for (std::size_t i = 0; i + 1 < u.size(); ++i) straight = straight && straight_letter(c.kind(u[i]));
    const Word img = phi_t(u, c.b);
    if (straight && in_AT(img, c.source)) {
      ASSERT_EQ(rho_t(img, c), u) << c.b.alphabet.format(u);
    }
  }
}

TEST_P(ConstructionLaws, SystemIsComplete) {
  const auto c = build_construction(source(GetParam()));
  TerminationOptions t;
  t.heavy = c.heavy_letters();
  auto report = verify_complete(c.r_t, t);
  EXPECT_TRUE(report.complete()) << describe(report, c.r_t.alphabet());
}

TEST_P(ConstructionLaws, RoundTripThroughPresentation) {
  const auto c = build_construction(source(GetParam()));
  const auto again = construction_from(c.source, to_presentation(c));
  ASSERT_EQ(again.b.alphabet, c.b.alphabet);
  for (std::size_t i = 0; i < c.b.table.size(); ++i) {
    EXPECT_EQ(again.b.table[i].kind, c.b.table[i].kind);
    EXPECT_EQ(again.b.table[i].image, c.b.table[i].image);
  }
  EXPECT_EQ(again.r_t.rules(), c.r_t.rules());
}

std::string fixture_name(const ::testing::TestParamInfo<int>& info) {
  static const char* const kNames[] = {"free_a", "cube_a", "commutative_a", "idempotent_a", "free_a_ab"};
  return kNames[info.param];
}

INSTANTIATE_TEST_SUITE_P(Fixtures, ConstructionLaws, ::testing::Range(0, 5), fixture_name);
