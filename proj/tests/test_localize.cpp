#include <gtest/gtest.h>

#include "ncdb/classify.hpp"
#include "ncdb/localize.hpp"
#include "support.hpp"

using namespace ncdb;
using namespace ncdb::testing;

namespace {

using Q = Rational;

WeightVector wv(std::initializer_list<int> xs) {
  WeightVector out;
  for (int x : xs) out.emplace_back(x);
  return out;
}

std::vector<Family> bundled_poisson() {
  std::vector<Family> out = {build(ParamsMdbOne{}), build(ParamsMdbTwo{})};
  for (const auto& p : search_CL1(Q(1)).survivors) out.push_back(build(ParamsCL1{Q(1), p.rho, p.gamma}));
  auto a = search_CL3a().survivors;
  auto b = search_CL3b().survivors;
  for (std::size_t i = 0; i < a.size(); i += 5) out.push_back(build(ParamsCL3a{a[i].alpha, a[i].beta}));
  for (std::size_t i = 0; i < b.size(); i += 5) out.push_back(build(cl3b_from_triples(b[i].alpha, b[i].beta)));
  for (int delta : {0, 1, 4}) {
    out.push_back(build(ParamsCLd{4, delta}));
    out.push_back(build(ParamsCLd2{4, delta}));
  }
  return out;
}

}  // namespace

TEST(Localize, KontsevichClaimedWeightIsRejected) {
  auto f = build(ParamsKontsevich{});
  auto plan = LocalisationPlan::all(f.spec.algebra());
  EXPECT_THROW(localize(f.spec, f.weight, plan), LocalisationError);
}

TEST(Localize, KontsevichWithItsComputedWeight) {
  auto f = build(ParamsKontsevich{});
  auto w = infer_weight(f.spec);
  ASSERT_TRUE(w);
  auto loc = localize(f.spec, *w.value, LocalisationPlan::all(f.spec.algebra()));
  EXPECT_EQ(loc.weight, wv({1, -1, -1, 1}));
  EXPECT_TRUE(check_weight(loc.spec, loc.weight).passed);
  auto pp = check_poisson_property(loc.spec, loc.weight);
  EXPECT_TRUE(pp.passed);
  EXPECT_EQ(pp.parameters["letter_triples_checked"], 64);
  auto inferred = infer_weight(loc.spec);
  ASSERT_TRUE(inferred) << inferred.reason;
  EXPECT_EQ(*inferred.value, loc.weight);
  CheckOptions o;
  o.max_degree = 2;
  EXPECT_TRUE(check_jacobi(loc.spec, o).passed);
  EXPECT_TRUE(check_h0_skew(loc.spec, o).passed);
}

TEST(Localize, InverseLetterEntry) {
  auto f = build(ParamsKontsevich{});
  auto loc = localize(f.spec, wv({1, -1}), LocalisationPlan::from_names(f.spec.algebra(), {"w"}));
  Letter v(0, false), winv(1, true);
  EXPECT_EQ(loc.spec.letter(v, winv), tensor(Word(v), Word(winv)));
  EXPECT_EQ(loc.weight, wv({1, -1, 1}));
}

TEST(Localize, ZeroSpec) {
  BracketSpec z(Algebra(3));
  auto loc = localize(z, wv({0, 0, 0}), {{2, 0}});
  EXPECT_EQ(loc.spec.table().size(), 0u);
  EXPECT_EQ(loc.weight, wv({0, 0, 0, 0, 0}));
  EXPECT_EQ(loc.spec.algebra().inverted(), (std::vector<int>{2, 0}));
  EXPECT_THROW(localize(z, wv({1, 0, 0}), {{0}}), LocalisationError);
}

TEST(Localize, Errors) {
  auto s = spec_one();
  EXPECT_THROW(localize(s, wv({1, -1}), {{0}}), LocalisationError);
  EXPECT_THROW(localize(s, wv({1, -1, -1}), {{0, 0}}), LocalisationError);
  EXPECT_THROW(localize(s, wv({1, -1, -1}), {{3}}), LocalisationError);
  EXPECT_THROW(LocalisationPlan::from_names(s.algebra(), {"y"}), LocalisationError);
  auto once = localize(s, wv({1, -1, -1}), {{0}});
  EXPECT_THROW(localize(once.spec, wv({1, -1, -1}), {{1}}), LocalisationError);
  auto bad = spec_cl3a({0, 1, 0}, {0, 0, 0});
  EXPECT_NO_THROW(localize(bad, wv({1, 1, 1}), {{0}}));
  EXPECT_THROW(localize(bad, wv({1, 1, 1}), {{0}}, true), LocalisationError);
}

TEST(Localize, SingleInversionsKeepPoissonProperty) {
  for (const auto& f : bundled_poisson()) {
    ASSERT_TRUE(weighted_poisson(f));
    for (int g = 0; g < f.spec.algebra().generators(); ++g) {
      auto loc = localize(f.spec, f.weight, {{g}}, true);
      EXPECT_TRUE(check_weight(loc.spec, loc.weight).passed);
      EXPECT_TRUE(check_poisson_property(loc.spec, loc.weight).passed) << render_weight(f.weight) << " g=" << g;
    }
  }
}

TEST(Localize, FullInversion) {
  for (const auto& f : {build(ParamsMdbOne{}), build(ParamsMdbTwo{})}) {
    auto loc = localize(f.spec, f.weight, LocalisationPlan::all(f.spec.algebra()));
    EXPECT_TRUE(check_poisson_property(loc.spec, loc.weight).passed);
    CheckOptions o;
    o.max_degree = 2;
    EXPECT_TRUE(check_jacobi(loc.spec, o).passed);
  }
}

TEST(Localize, RelationWordsBracketToZero) {
  auto f = build(ParamsMdbOne{});
  auto loc = localize(f.spec, f.weight, LocalisationPlan::all(f.spec.algebra()));
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    int g = static_cast<int>(rng() % 3);
    std::vector<Letter> rel = {Letter(g, false), Letter(g, true)};
    if (trial % 2) std::swap(rel[0], rel[1]);
    auto other = random_letters(rng, loc.spec.algebra(), 3);
    EXPECT_TRUE(dbracket_sequence(loc.spec, rel, other).is_zero());
    EXPECT_TRUE(dbracket_sequence(loc.spec, other, rel).is_zero());
    // Inserting the relation inside a word changes nothing.
    std::vector<Letter> padded = other;
    padded.insert(padded.begin() + 1, rel.begin(), rel.end());
    auto b = random_letters(rng, loc.spec.algebra(), 2);
    EXPECT_EQ(dbracket_sequence(loc.spec, padded, b), dbracket_sequence(loc.spec, other, b));
  }
}
