#include <gtest/gtest.h>

#include <random>
#include <set>

#include "ncdb/classify.hpp"
#include "support.hpp"

using namespace ncdb;
using namespace ncdb::testing;

namespace {

using Q = Rational;
using Triple3 = std::array<Q, 3>;

Triple3 tri(int a, int b, int c) { return {Q(a), Q(b), Q(c)}; }

const std::set<Triple3> kSix = {tri(0, 0, 0), tri(1, 0, 0), tri(0, 0, 1), tri(1, 1, 0), tri(0, 1, 1), tri(1, 1, 1)};

WeightVector wv(std::initializer_list<int> xs) {
  WeightVector out;
  for (int x : xs) out.emplace_back(x);
  return out;
}

std::set<std::pair<Triple3, Triple3>> pairs_of(const CL3Search& s) {
  std::set<std::pair<Triple3, Triple3>> out;
  for (const auto& p : s.survivors) out.insert({p.alpha, p.beta});
  return out;
}

}  // namespace

TEST(Build, BuiltinsMatchTypedTables) {
  EXPECT_EQ(build(ParamsMdbOne{}).spec, spec_one());
  EXPECT_EQ(build(ParamsMdbTwo{}).spec, spec_two());
  EXPECT_EQ(build(ParamsKontsevich{}).spec, spec_kontsevich());
  EXPECT_EQ(build(ParamsMdbOne{}).weight, wv({1, -1, -1}));
  EXPECT_EQ(build(ParamsMdbTwo{}).weight, wv({-1, -1, -1}));
  EXPECT_EQ(build(ParamsKontsevich{}).weight, wv({1, 1}));
}

TEST(Build, ThreeGeneratorFamilyOverWholeGrid) {
  for (int m = 0; m < 64; ++m) {
    std::array<int, 3> a{m & 1, (m >> 1) & 1, (m >> 2) & 1}, b{(m >> 3) & 1, (m >> 4) & 1, (m >> 5) & 1};
    ParamsCL3a p{tri(a[0], a[1], a[2]), tri(b[0], b[1], b[2])};
    EXPECT_EQ(build(p).spec, spec_cl3a(a, b)) << m;
  }
}

TEST(Build, ThreeGeneratorZeroParameters) {
  auto f = build(ParamsCL3a{tri(0, 0, 0), tri(0, 0, 0)});
  for (int i = 0; i < 3; ++i) EXPECT_TRUE(f.spec.entry(i, i).is_zero());
  EXPECT_TRUE(f.spec.entry(0, 1).is_zero());
  EXPECT_EQ(f.spec.entry(1, 0), t2({2}, {1}) - t2({1}, {2}));
  EXPECT_EQ(f.weight, wv({1, 1, 1}));
}

TEST(Build, MixedWeightFamilyEntries) {
  auto f = build(ParamsCLd{4, 2});
  EXPECT_EQ(f.spec.entry(0, 2), t2({}, {1, 3}) - t2({3, 1}, {}));
  EXPECT_TRUE(f.spec.entry(2, 0).is_zero());
  EXPECT_EQ(f.spec.entry(0, 1), t2({1}, {2}) - t2({2}, {1}));
  EXPECT_EQ(f.spec.entry(2, 3), t2({4}, {3}) - t2({3}, {4}));
  EXPECT_EQ(f.weight, wv({1, 1, -1, -1}));
  auto g = build(ParamsCLd2{4, 2});
  EXPECT_EQ(g.spec.entry(0, 2), t2({3, 1}, {}, -1));
  EXPECT_EQ(g.spec.entry(2, 0), t2({1, 3}, {}));
  EXPECT_EQ(g.spec.entry(3, 2), t2({3}, {4}));
}

TEST(Build, AllNegativeIsSignFlipOfAllPositive) {
  for (int d : {4, 5}) {
    EXPECT_EQ(build(ParamsCLd{d, 0}).spec, build(ParamsCLd{d, d}).spec.scaled(Q(-1)));
    EXPECT_EQ(build(ParamsCLd2{d, 0}).spec, build(ParamsCLd2{d, d}).spec.scaled(Q(-1)));
  }
}

TEST(Build, DomainErrors) {
  EXPECT_THROW(build(ParamsCL3a{tri(2, 0, 0), tri(0, 0, 0)}), std::invalid_argument);
  EXPECT_THROW(build(ParamsCL3b{Q(0), Q(0), Q(0), Q(1, 2), Q(0), Q(0)}), std::invalid_argument);
  EXPECT_THROW(build(ParamsCLd{3, 1}), std::invalid_argument);
  EXPECT_THROW(build(ParamsCLd2{4, 5}), std::invalid_argument);
  EXPECT_THROW(build(ParamsCL1Minus{Q(1), Q(2), Q(0)}), std::invalid_argument);
  EXPECT_THROW(search_CL1(Q(0)), std::invalid_argument);
}

TEST(Build, NamedSubfamiliesAreGammaSpecialisations) {
  for (const Q& l : {Q(1), Q(-3, 2)})
    for (const Q& a : {Q(0), l})
      for (const Q& b : {Q(0), l}) {
        EXPECT_EQ(build(ParamsCL1Minus{l, a, b}).spec,
                  build(ParamsCL1{l, -l, {Q(0), Q(0), Q(-2) * a, Q(-2) * b}}).spec);
        EXPECT_EQ(build(ParamsCL1Plus{l, a, b}).spec, build(ParamsCL1{l, l, {Q(-2) * a, Q(-2) * b, Q(0), Q(0)}}).spec);
      }
}

TEST(Build, TwoGeneratorFamilyHasItsWeightForAnyGamma) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    ParamsCL1 p{random_coeff(rng), random_coeff(rng), {random_coeff(rng), random_coeff(rng), random_coeff(rng), Q(0)}};
    auto f = build(p);
    EXPECT_TRUE(check_weight(f.spec, f.weight).passed);
  }
}

TEST(Build, FamilyNames) {
  EXPECT_EQ(family_name(ParamsCLd{5, 2}), "cld(5,2)");
  EXPECT_EQ(family_name(ParamsCL3a{tri(0, 0, 1), tri(1, 0, 0)}), "cl3a((0,0,1),(1,0,0))");
  EXPECT_EQ(family_name(ParamsMdbOne{}), "mdbI");
}

// The hand expansion of DJac(v,w,v) for the two-generator family.
TEST(TwoGenerators, DJacExpansionMatchesDirectComputation) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    Q l = random_coeff(rng), r = random_coeff(rng);
    std::array<Q, 4> g{random_coeff(rng), random_coeff(rng), random_coeff(rng), random_coeff(rng)};
    auto f = build(ParamsCL1{l, r, g});
    EXPECT_EQ(djac(f.spec, gen(0), gen(1), gen(0)), cl1_djac_vwv(l, r, g));
  }
}

TEST(TwoGenerators, EightSurvivors) {
  auto s = search_CL1(Q(1));
  EXPECT_TRUE(s.exhaustive);
  EXPECT_EQ(s.grid.size(), 32u);
  EXPECT_TRUE(s.conditions_agree());
  std::vector<std::pair<Q, std::array<Q, 4>>> got;
  for (const auto& p : s.survivors) got.emplace_back(p.rho, p.gamma);
  const Q z(0), m(-2);
  std::vector<std::pair<Q, std::array<Q, 4>>> want = {
      {Q(-1), {z, z, m, m}}, {Q(-1), {z, z, m, z}}, {Q(-1), {z, z, z, m}}, {Q(-1), {z, z, z, z}},
      {Q(1), {m, m, z, z}},  {Q(1), {m, z, z, z}},  {Q(1), {z, m, z, z}},  {Q(1), {z, z, z, z}}};
  EXPECT_EQ(got, want);
}

TEST(TwoGenerators, MixedCandidatesExcluded) {
  auto s = search_CL1(Q(1));
  const Q z(0), m(-2);
  for (const auto& p : s.grid) {
    if (p.gamma == std::array<Q, 4>{z, m, m, z} || p.gamma == std::array<Q, 4>{m, z, z, m}) {
      EXPECT_FALSE(p.verified);
      EXPECT_FALSE(p.closed_form);
    }
  }
}

TEST(TwoGenerators, OtherLambdaScales) {
  for (const Q& l : {Q(2), Q(-1, 3)}) {
    auto s = search_CL1(l);
    EXPECT_EQ(s.survivors.size(), 8u);
    EXPECT_TRUE(s.conditions_agree());
  }
}

TEST(TwoGenerators, SurvivorsSatisfyJacobi) {
  CheckOptions o;
  o.max_degree = 3;
  for (const auto& p : search_CL1(Q(1)).survivors) {
    auto f = build(ParamsCL1{Q(1), p.rho, p.gamma});
    EXPECT_TRUE(check_jacobi(f.spec, o).passed);
    EXPECT_TRUE(check_h0_skew(f.spec).passed);
  }
}

// Equal-magnitude weights are forced; nothing is filtered on that in advance.
TEST(TwoGenerators, ExploratoryGridForcesEqualMagnitudes) {
  std::vector<Q> gammas = {Q(-2), Q(-1), Q(0), Q(1)};
  std::vector<Q> rhos = {Q(-2), Q(-1), Q(-1, 2), Q(0), Q(1, 2), Q(1), Q(2)};
  auto s = search_CL1(Q(1), gammas, rhos);
  EXPECT_FALSE(s.exhaustive);
  EXPECT_EQ(s.grid.size(), 7u * 256u);
  ASSERT_FALSE(s.survivors.empty());
  for (const auto& p : s.survivors) EXPECT_EQ(p.rho * p.rho, Q(1));
  EXPECT_EQ(s.survivors.size(), 8u);
}

TEST(ThreeGenerators, EqualWeights) {
  auto s = search_CL3a();
  EXPECT_EQ(s.grid.size(), 64u);
  EXPECT_EQ(s.survivors.size(), 36u);
  EXPECT_TRUE(s.conditions_agree());
  for (const auto& p : s.survivors) {
    EXPECT_TRUE(kSix.count(p.alpha));
    EXPECT_TRUE(kSix.count(p.beta));
  }
  EXPECT_TRUE(pairs_of(s).count({tri(0, 0, 1), tri(1, 0, 0)}));
  for (std::size_t i = 1; i < s.survivors.size(); ++i)
    EXPECT_LT(s.survivors[i - 1].key(), s.survivors[i].key());
}

TEST(ThreeGenerators, MixedWeights) {
  auto s = search_CL3b();
  EXPECT_EQ(s.survivors.size(), 36u);
  EXPECT_TRUE(s.conditions_agree());
  for (const auto& p : s.survivors) {
    EXPECT_TRUE(kSix.count(p.alpha));
    EXPECT_TRUE(kSix.count(p.beta));
  }
  EXPECT_TRUE(pairs_of(s).count({tri(0, 1, 1), tri(1, 0, 0)}));
}

TEST(ThreeGenerators, PermutationSymmetry) {
  auto s = pairs_of(search_CL3a());
  auto swap12 = [](const Triple3& a) { return Triple3{a[1], a[0], Q(1) - a[2]}; };
  auto swap23 = [](const Triple3& a) { return Triple3{Q(1) - a[0], a[2], a[1]}; };
  for (auto f : {+swap12, +swap23}) {
    std::set<std::pair<Triple3, Triple3>> image;
    for (const auto& [a, b] : s) image.insert({f(a), f(b)});
    EXPECT_EQ(image, s);
  }
}

TEST(ThreeGenerators, RelabellingActsOnParameters) {
  auto swap12 = [](const Triple3& a) { return Triple3{a[1], a[0], Q(1) - a[2]}; };
  auto swap23 = [](const Triple3& a) { return Triple3{Q(1) - a[0], a[2], a[1]}; };
  for (int m = 0; m < 64; ++m) {
    Triple3 a = tri(m & 1, (m >> 1) & 1, (m >> 2) & 1), b = tri((m >> 3) & 1, (m >> 4) & 1, (m >> 5) & 1);
    auto base = build(ParamsCL3a{a, b}).spec;
    EXPECT_EQ(base.relabeled({1, 0, 2}), build(ParamsCL3a{swap12(a), swap12(b)}).spec) << m;
    EXPECT_EQ(base.relabeled({0, 2, 1}), build(ParamsCL3a{swap23(a), swap23(b)}).spec) << m;
  }
}

TEST(ThreeGenerators, NamedBracketsInsideFamilies) {
  auto one = build(ParamsMdbOne{}).spec.relabeled({2, 1, 0}).scaled(Q(-1));
  EXPECT_EQ(one.table(), build(cl3b_from_triples(tri(0, 1, 1), tri(1, 0, 0))).spec.table());
  auto two = build(ParamsMdbTwo{}).spec.scaled(Q(-1));
  EXPECT_EQ(two.table(), build(ParamsCL3a{tri(0, 0, 1), tri(1, 0, 0)}).spec.table());
}

TEST(ThreeGenerators, RescalingScalesWeight) {
  for (const auto& p : search_CL3b().survivors) {
    auto f = build(cl3b_from_triples(p.alpha, p.beta));
    for (const Q& nu : {Q(2), Q(-1, 3)}) {
      auto w = infer_weight(f.spec.scaled(nu));
      ASSERT_TRUE(w);
      WeightVector want;
      for (const auto& x : f.weight) want.push_back(x * nu);
      EXPECT_EQ(*w.value, want);
    }
  }
}

TEST(ThreeGenerators, ConditionFormula) {
  EXPECT_EQ(triple_condition(tri(0, 1, 0)), Q(-1));
  for (const auto& t : kSix) EXPECT_EQ(triple_condition(t), Q(0));
}

TEST(Families, SmallBoundsPass) {
  FamilyCheckOptions o;
  o.pair_degree = 3;
  o.triple_degree = 2;
  for (int delta : {0, 2, 4}) {
    auto r = verify_family_props(4, delta, o);
    EXPECT_TRUE(r.passed) << r.to_json().dump();
    ASSERT_EQ(r.components.size(), 2u);
    EXPECT_EQ(r.components[0].components.size(), 4u);
  }
}

TEST(Families, WeightIsInferred) {
  for (int d : {4, 5})
    for (int delta = 0; delta <= d; ++delta)
      for (const FamilyParams& p : {FamilyParams(ParamsCLd{d, delta}), FamilyParams(ParamsCLd2{d, delta})}) {
        auto f = build(p);
        auto w = infer_weight(f.spec);
        ASSERT_TRUE(w) << family_name(p);
        EXPECT_EQ(*w.value, ones_delta(d, delta)) << family_name(p);
        EXPECT_TRUE(weighted_poisson(f)) << family_name(p);
      }
}
