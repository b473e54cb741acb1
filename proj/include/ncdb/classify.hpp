#pragma once

#include <array>
#include <tuple>
#include <string>
#include <variant>
#include <vector>

#include "ncdb/axioms.hpp"

namespace ncdb {

// Two generators v, w with zero self-brackets and a quadratic mixed term.
struct ParamsCL1 {
  Rational lambda, rho;
  std::array<Rational, 4> gamma;
};
// rho = -lambda, alpha and beta in {0, lambda}.
struct ParamsCL1Minus {
  Rational lambda, alpha, beta;
};
// rho = +lambda, alpha and beta in {0, lambda}.
struct ParamsCL1Plus {
  Rational lambda, alpha, beta;
};
// Three generators of weight (1,1,1); entries in {0,1}.
struct ParamsCL3a {
  std::array<Rational, 3> alpha, beta;
};
// Three generators of weight (1,1,-1); entries in {0,1}.
struct ParamsCL3b {
  Rational alpha1, alpha2, alpha3, beta1, beta2, beta3;
  std::array<Rational, 3> alpha_triple() const { return {alpha1, alpha2, beta3}; }
  std::array<Rational, 3> beta_triple() const { return {beta1, beta2, alpha3}; }
};
struct ParamsCLd {
  int d = 4, delta = 0;
};
struct ParamsCLd2 {
  int d = 4, delta = 0;
};
struct ParamsMdbOne {};
struct ParamsMdbTwo {};
struct ParamsKontsevich {};

using FamilyParams = std::variant<ParamsCL1, ParamsCL1Minus, ParamsCL1Plus, ParamsCL3a, ParamsCL3b, ParamsCLd,
                                  ParamsCLd2, ParamsMdbOne, ParamsMdbTwo, ParamsKontsevich>;

struct Family {
  BracketSpec spec;
  WeightVector weight;  // the weight the construction is stated with
};

// Throws std::invalid_argument outside the parameter domain.
Family build(const FamilyParams& params);
std::string family_name(const FamilyParams& params);

// (1,...,1,-1,...,-1) with delta leading ones.
WeightVector ones_delta(int d, int delta);

// Pass iff the weight check and the Poisson property both hold.
bool weighted_poisson(const Family& f);

struct CL1Point {
  Rational rho;
  std::array<Rational, 4> gamma;
  bool closed_form = false;  // the explicit conditions on (lambda, rho, gamma)
  bool verified = false;     // the generic verifier
  auto key() const { return std::tie(rho, gamma); }
};
struct CL1Search {
  Rational lambda;
  std::vector<CL1Point> grid;       // every point examined, sorted
  std::vector<CL1Point> survivors;  // verified points, sorted
  bool exhaustive = true;           // false for exploratory grids
  bool conditions_agree() const;
};
// Default grid: rho in {lambda, -lambda}, gamma in {0, -2 lambda}^4. Custom
// value sets for gamma or rho turn this into an exploratory search.
CL1Search search_CL1(const Rational& lambda, const std::vector<Rational>& gamma_values = {},
                     const std::vector<Rational>& rho_values = {});

// The explicit conditions for the two-generator family.
bool cl1_conditions(const Rational& lambda, const Rational& rho, const std::array<Rational, 4>& gamma);
// Coefficients of DJac(v,w,v) in the basis v(x)w(x)v, 1(x)vw(x)v, v^2(x)w(x)1,
// v(x)vw(x)1, v(x)v(x)w, v^2(x)1(x)w, 1(x)v(x)wv, v(x)1(x)wv.
Tensor3 cl1_djac_vwv(const Rational& lambda, const Rational& rho, const std::array<Rational, 4>& gamma);

// x1 x2 + x2 x3 - x1 x3 - x2
Rational triple_condition(const std::array<Rational, 3>& x);

struct CL3Point {
  std::array<Rational, 3> alpha, beta;  // for CL3b: (a1,a2,b~3) and (b1,b2,a~3)
  bool closed_form = false;
  bool verified = false;
  auto key() const { return std::tie(alpha, beta); }
};
struct CL3Search {
  std::vector<CL3Point> grid;
  std::vector<CL3Point> survivors;
  bool conditions_agree() const;
};
CL3Search search_CL3a();
CL3Search search_CL3b();
ParamsCL3b cl3b_from_triples(const std::array<Rational, 3>& alpha, const std::array<Rational, 3>& beta);

// Weight, Poisson property, H0 skew-symmetry and Jacobi for both d >= 4 families.
struct FamilyCheckOptions {
  int pair_degree = kDefaultPairDegree;
  int triple_degree = kDefaultTripleDegree;
};
VerificationReport verify_family_props(int d, int delta, const FamilyCheckOptions& opt = {});

}  // namespace ncdb
