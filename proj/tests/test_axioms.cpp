#include <gtest/gtest.h>

#include <random>

#include "../src/packed.hpp"
#include "ncdb/axioms.hpp"
#include "support.hpp"

using namespace ncdb;
using namespace ncdb::testing;

namespace {

WeightVector wv(std::initializer_list<int> xs) {
  WeightVector out;
  for (int x : xs) out.emplace_back(x);
  return out;
}

BracketSpec zero_spec(int d) { return BracketSpec(Algebra(d)); }

// spec_one with v1 = x3, v2 = x2, v3 = x1 and the opposite sign.
BracketSpec spec_one_relabelled() { return spec_one().relabeled({2, 1, 0}).scaled(Rational(-1)); }

}  // namespace

TEST(Weight, SpecOne) {
  auto w = infer_weight(spec_one());
  ASSERT_TRUE(w) << w.reason;
  EXPECT_EQ(*w.value, wv({1, -1, -1}));
  EXPECT_TRUE(check_weight(spec_one(), wv({1, -1, -1})).passed);
  EXPECT_FALSE(check_weight(spec_one(), wv({1, 1, -1})).passed);
}

TEST(Weight, SpecTwo) {
  auto w = infer_weight(spec_two());
  ASSERT_TRUE(w) << w.reason;
  EXPECT_EQ(*w.value, wv({-1, -1, -1}));
  EXPECT_TRUE(check_weight(spec_two(), wv({-1, -1, -1})).passed);
}

TEST(Weight, RelabelledSpecOne) {
  auto w = infer_weight(spec_one_relabelled());
  ASSERT_TRUE(w);
  EXPECT_EQ(*w.value, wv({1, 1, -1}));
}

TEST(Weight, KontsevichIsNotHomogeneous) {
  // The table {v,w} = -wv (x) 1, {w,v} = vw (x) 1 has skew defect
  // 1 (x) vw - wv (x) 1, which forces opposite weights.
  auto w = infer_weight(spec_kontsevich());
  ASSERT_TRUE(w);
  EXPECT_EQ(*w.value, wv({1, -1}));
  auto r = check_weight(spec_kontsevich(), wv({1, 1}));
  EXPECT_FALSE(r.passed);
  ASSERT_FALSE(r.witnesses.empty());
  EXPECT_NE(r.witnesses[0].residual, "0");
}

TEST(Weight, ZeroSpecHasOnlyZeroWeight) {
  EXPECT_TRUE(check_weight(zero_spec(3), wv({0, 0, 0})).passed);
  EXPECT_FALSE(check_weight(zero_spec(3), wv({1, 5, -2})).passed);
  auto w = infer_weight(zero_spec(2));
  ASSERT_TRUE(w);
  EXPECT_EQ(*w.value, wv({0, 0}));
}

TEST(MixedType, SpecOne) {
  auto t = infer_mixed_type(spec_one());
  ASSERT_TRUE(t) << t.reason;
  const auto& L = t.value->lambda;
  const auto& M = t.value->mu;
  EXPECT_EQ(L[0][1], Rational(0));
  EXPECT_EQ(L[0][2], Rational(0));
  EXPECT_EQ(L[1][2], Rational(-1));
  EXPECT_EQ(L[2][1], Rational(-1));
  EXPECT_EQ(M[0][1], Rational(1));
  EXPECT_EQ(M[0][2], Rational(1));
  EXPECT_EQ(M[1][2], Rational(0));
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(M[i][i], Rational(0));
    for (int j = 0; j < 3; ++j) EXPECT_EQ(M[i][j], -M[j][i]);
  }
  EXPECT_TRUE(check_mixed_type(spec_one(), *t.value).passed);
  EXPECT_TRUE(check_wskm(*t.value).passed);
}

TEST(MixedType, WskmByHand) {
  auto t = infer_mixed_type(spec_one());
  ASSERT_TRUE(t);
  const auto& L = t.value->lambda;
  const auto& M = t.value->mu;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
          if (i == j || k == l) continue;
          EXPECT_EQ(L[i][j] - L[k][l], M[i][l] - M[k][j]) << i << j << k << l;
        }
}

TEST(MixedType, ZeroSpec) {
  auto t = infer_mixed_type(zero_spec(3));
  ASSERT_TRUE(t);
  for (const auto& row : t.value->lambda)
    for (const auto& x : row) EXPECT_EQ(x, Rational(0));
  for (const auto& row : t.value->mu)
    for (const auto& x : row) EXPECT_EQ(x, Rational(0));
}

TEST(MixedType, WrongTypeFails) {
  auto t = infer_mixed_type(spec_one());
  ASSERT_TRUE(t);
  MixedType bad = *t.value;
  bad.lambda[0][1] = bad.lambda[1][0] = Rational(3);
  EXPECT_FALSE(check_mixed_type(spec_one(), bad).passed);
  MixedType asym = *t.value;
  asym.mu[0][1] = Rational(2);
  EXPECT_FALSE(check_mixed_type(spec_one(), asym).passed);
}

TEST(MixedType, DefectOutsideSpanIsRejected) {
  auto s = make_spec(Algebra(2), {{1, 2, t2({1, 1}, {2})}});
  auto t = infer_mixed_type(s);
  EXPECT_FALSE(t);
  EXPECT_FALSE(t.reason.empty());
  EXPECT_FALSE(infer_weight(s));
}

TEST(CyclicSkew, ZeroSpecPasses) { EXPECT_TRUE(check_cyclic_skew(zero_spec(3)).passed); }

TEST(CyclicSkew, SpecTwoWitness) {
  auto r = check_cyclic_skew(spec_two());
  ASSERT_FALSE(r.passed);
  ASSERT_EQ(r.witnesses.size(), 1u);
  EXPECT_EQ(r.witnesses[0].inputs["a"], "x1");
  EXPECT_EQ(r.witnesses[0].inputs["b"], "x2");
  EXPECT_EQ(r.witnesses[0].residual, render(Algebra(3), t2({2}, {1}) - t2({1}, {2})));
}

TEST(CyclicSkew, AntisymmetricSelfBracket) {
  auto s = make_spec(Algebra(1, "v"), {{1, 1, t2({1, 1}, {}) - t2({}, {1, 1})}});
  EXPECT_TRUE(check_cyclic_skew(s).passed);
}

TEST(DoublePoisson, SpecOneIsNotCyclicallySkew) {
  auto r = check_double_poisson(spec_one());
  EXPECT_FALSE(r.passed);
  ASSERT_EQ(r.components.size(), 2u);
  EXPECT_FALSE(r.components[0].passed);
}

TEST(DoublePoisson, ZeroSpec) { EXPECT_TRUE(check_double_poisson(zero_spec(2)).passed); }

TEST(DoublePoisson, ImpliesWeightZeroAndPoissonProperty) {
  // Linear and cubic one-generator brackets, then two-generator ones.
  std::vector<BracketSpec> specs = {
      make_spec(Algebra(1, "v"), {{1, 1, t2({1}, {}) - t2({}, {1})}}),
      make_spec(Algebra(1, "v"), {{1, 1, t2({1, 1}, {1}) - t2({1}, {1, 1})}}),
      make_spec(Algebra(2), {{1, 2, t2({1}, {}) - t2({}, {1})}, {2, 1, t2({1}, {}) - t2({}, {1})}}),
      make_spec(Algebra(2), {{1, 1, t2({1}, {}) - t2({}, {1})}, {2, 2, t2({2}, {}) - t2({}, {2})}}),
      zero_spec(3)};
  for (const auto& s : specs) {
    if (!check_double_poisson(s).passed) continue;
    WeightVector zero(static_cast<std::size_t>(s.algebra().generators()), Rational(0));
    EXPECT_TRUE(check_weight(s, zero).passed);
    EXPECT_TRUE(check_poisson_property(s, zero).passed);
  }
  EXPECT_TRUE(check_double_poisson(specs[0]).passed);
  EXPECT_TRUE(check_double_poisson(specs[1]).passed);
}

TEST(PoissonProperty, RelabelledSpecOne) {
  EXPECT_TRUE(check_poisson_property(spec_one_relabelled(), wv({1, 1, -1})).passed);
  EXPECT_TRUE(check_poisson_property(spec_one(), wv({1, -1, -1})).passed);
}

TEST(PoissonProperty, SpecTwo) { EXPECT_TRUE(check_poisson_property(spec_two(), wv({-1, -1, -1})).passed); }

TEST(PoissonProperty, ZeroSpecAnyWeight) {
  EXPECT_TRUE(check_poisson_property(zero_spec(3), wv({2, -7, 1})).passed);
}

TEST(PoissonProperty, AllOnesThreeGeneratorFamily) {
  EXPECT_TRUE(check_poisson_property(spec_cl3a({1, 1, 1}, {1, 1, 1}), wv({1, 1, 1})).passed);
}

TEST(PoissonProperty, WrongWeightFails) {
  EXPECT_FALSE(check_poisson_property(spec_two(), wv({1, 1, 1})).passed);
}

TEST(PoissonProperty, PropagatesToLongerThirdArgument) {
  std::mt19937_64 rng(11);
  struct Case {
    BracketSpec spec;
    WeightVector w;
  };
  std::vector<Case> cases = {{spec_one(), wv({1, -1, -1})},
                             {spec_two(), wv({-1, -1, -1})},
                             {spec_cl3a({0, 0, 1}, {1, 1, 0}), wv({1, 1, 1})}};
  for (const auto& [spec, w] : cases) {
    ASSERT_TRUE(check_poisson_property(spec, w).passed);
    auto lw = letter_weights(spec.algebra(), w);
    for (int trial = 0; trial < 20; ++trial) {
      Element c = random_element(rng, spec.algebra(), 3);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          Letter x(i, false), y(j, false);
          EXPECT_EQ(djac(spec, gen(i), gen(j), c), poisson_rhs(spec, lw, x, y, c));
        }
    }
  }
}

TEST(H0Skew, SpecOneDegreeThree) {
  CheckOptions o;
  o.max_degree = 3;
  EXPECT_TRUE(check_h0_skew(spec_one(), o).passed);
}

TEST(H0Skew, OneSidedBracketFails) {
  auto s = make_spec(Algebra(2, "v"), {{1, 2, t2({1}, {2})}});
  CheckOptions o;
  o.max_degree = 2;
  auto r = check_h0_skew(s, o);
  ASSERT_FALSE(r.passed);
  ASSERT_EQ(r.witnesses.size(), 1u);
  EXPECT_EQ(r.witnesses[0].inputs["a"], "v1");
  EXPECT_EQ(r.witnesses[0].inputs["b"], "v2");
  EXPECT_EQ(r.witnesses[0].residual, "v1*v2");
}

TEST(H0Skew, AllWitnessesCollectsMore) {
  auto s = make_spec(Algebra(2, "v"), {{1, 2, t2({1}, {2})}});
  CheckOptions o;
  o.max_degree = 2;
  o.all_witnesses = true;
  auto r = check_h0_skew(s, o);
  EXPECT_GT(r.witnesses.size(), 1u);
  for (const auto& w : r.witnesses) EXPECT_NE(w.residual, "0");
}

TEST(Jacobi, SpecTwoDegreeThree) { EXPECT_TRUE(check_jacobi(spec_two()).passed); }

TEST(Jacobi, ZeroSpec) { EXPECT_TRUE(check_jacobi(zero_spec(2)).passed); }

TEST(Jacobi, ViolatedConditionFails) {
  // alpha~ = (0,1,0) gives 0 + 0 - 0 - 1 = -1 in the first condition.
  auto s = spec_cl3a({0, 1, 0}, {0, 0, 0});
  EXPECT_FALSE(check_poisson_property(s, wv({1, 1, 1})).passed);
  CheckOptions o;
  o.max_degree = 2;
  auto r = check_jacobi(s, o);
  ASSERT_FALSE(r.passed);
  ASSERT_EQ(r.witnesses.size(), 1u);
  EXPECT_NE(r.witnesses[0].residual, "0");
  auto lw = letter_weights(s.algebra(), wv({1, 1, 1}));
  EXPECT_NE(djac(s, gen(0), gen(1), gen(2)), poisson_rhs(s, lw, Letter(0, false), Letter(1, false), gen(2)));
}

// The packed sweep must flag exactly the triples whose jacobiator is nonzero.
TEST(Jacobi, PackedSweepMatchesDirectEvaluation) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 12; ++trial) {
    BracketSpec spec;
    if (trial == 0)
      spec = spec_cl3a({0, 0, 1}, {1, 0, 0});
    else if (trial == 1)
      spec = spec_cl3a({0, 1, 0}, {1, 0, 0}).localized({2});
    else if (trial % 3 == 2)
      spec = random_spec(rng, Algebra(2), 1).localized({0, 1});
    else
      spec = random_spec(rng, Algebra(2 + trial % 2), 1);
    const Algebra& a = spec.algebra();
    auto words = enumerate_words(a, 2);
    std::vector<std::array<std::size_t, 3>> flagged;
    bool handled = detail::packed_jacobi_scan(spec, words, [&](std::size_t i, std::size_t j, std::size_t k) {
      flagged.push_back({i, j, k});
      return true;
    });
    ASSERT_TRUE(handled);
    std::vector<std::array<std::size_t, 3>> direct;
    const std::size_t n = words.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (!jacobiator(spec, monomial(words[i]), monomial(words[j]), monomial(words[k])).is_zero())
            direct.push_back({i, j, k});
    EXPECT_EQ(flagged, direct) << "trial " << trial;
  }
}

TEST(Jacobi, PackedSweepDeclinesWideTables) {
  auto s = make_spec(Algebra(2), {{1, 2, t2({1, 1, 1, 1}, {2, 2, 2, 2})}});
  auto words = enumerate_words(s.algebra(), 3);
  EXPECT_FALSE(detail::packed_jacobi_scan(s, words, [](std::size_t, std::size_t, std::size_t) { return true; }));
  CheckOptions o;
  o.max_degree = 1;
  EXPECT_EQ(check_jacobi(s, o).passed,
            jacobiator(s, gen(0), gen(0), gen(1)).is_zero() && jacobiator(s, gen(0), gen(1), gen(1)).is_zero() &&
                jacobiator(s, gen(1), gen(0), gen(1)).is_zero() && jacobiator(s, gen(1), gen(1), gen(0)).is_zero() &&
                jacobiator(s, gen(0), gen(1), gen(0)).is_zero() && jacobiator(s, gen(1), gen(0), gen(0)).is_zero());
}

TEST(Jacobi, LaurentWordsForLocalisedRelabelledSpecOne) {
  CheckOptions o;
  o.max_degree = 2;
  EXPECT_TRUE(check_jacobi(spec_one().localized({0}), o).passed);
}

TEST(LambdaDoubleLie, ThreeGeneratorFamily) {
  for (auto a : {std::array<int, 3>{0, 0, 0}, {1, 0, 0}, {0, 0, 1}, {1, 1, 0}, {0, 1, 1}, {1, 1, 1}})
    EXPECT_TRUE(check_lambda_double_lie(spec_cl3a(a, {1, 1, 0}), Rational(1)).passed);
  EXPECT_FALSE(check_lambda_double_lie(spec_cl3a({0, 1, 0}, {0, 0, 0}), Rational(1)).passed);
}

TEST(LambdaDoubleLie, SpecOneIsNotLinear) {
  auto r = check_lambda_double_lie(spec_one(), Rational(1));
  EXPECT_FALSE(r.passed);
  EXPECT_EQ(r.note, "not V(x)V-valued");
}

TEST(LambdaDoubleLie, ZeroSpec) { EXPECT_TRUE(check_lambda_double_lie(zero_spec(3), Rational(0)).passed); }

TEST(Reports, Deterministic) {
  CheckOptions o;
  o.max_degree = 2;
  o.all_witnesses = true;
  auto s = spec_cl3a({0, 1, 0}, {1, 0, 1});
  EXPECT_EQ(check_jacobi(s, o).to_json().dump(), check_jacobi(s, o).to_json().dump());
  EXPECT_EQ(check_h0_skew(s, o).to_json().dump(), check_h0_skew(s, o).to_json().dump());
  EXPECT_EQ(check_poisson_property(s, wv({1, 1, 1}), o).to_json().dump(),
            check_poisson_property(s, wv({1, 1, 1}), o).to_json().dump());
}

TEST(Reports, FailureCarriesWitness) {
  auto r = check_weight(spec_two(), wv({1, 1, 1}));
  ASSERT_FALSE(r.passed);
  ASSERT_FALSE(r.witnesses.empty());
  auto j = r.to_json();
  EXPECT_EQ(j["status"], "fail");
  EXPECT_EQ(j["axiom"], "weight");
}

TEST(Relabel, RoundTrip) {
  auto s = spec_two();
  EXPECT_EQ(s.relabeled({1, 2, 0}).relabeled({2, 0, 1}), s);
  EXPECT_THROW(s.relabeled({0, 0, 1}), std::invalid_argument);
}
