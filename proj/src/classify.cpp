#include "ncdb/classify.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncdb {

namespace {

using Q = Rational;

const Q kHalf(1, 2);

bool binary(const Q& x) { return x == Q(0) || x == Q(1); }

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

// Positive word from 0-based generators.
Word word(std::initializer_list<int> gens) {
  Word w;
  for (int g : gens) w.append(Letter(g, false));
  return w;
}

Tensor2 t(std::initializer_list<int> a, std::initializer_list<int> b, const Q& c) { return tensor(word(a), word(b), c); }

struct TableBuilder {
  BracketSpec::Table table;
  void add(int i, int j, const Tensor2& v) { table[{i, j}] += v; }
};

Family build_cl1(const ParamsCL1& p) {
  const Q& l = p.lambda;
  const Q& r = p.rho;
  const auto& g = p.gamma;
  TableBuilder tb;
  tb.add(0, 1, t({0}, {1}, -g[0] * kHalf) + t({1}, {0}, g[1] * kHalf) + t({}, {0, 1}, -g[2] * kHalf) +
                   t({1, 0}, {}, g[3] * kHalf));
  tb.add(1, 0, t({0}, {1}, -(l + r + g[1]) * kHalf) + t({1}, {0}, (l + r + g[0]) * kHalf) +
                   t({}, {1, 0}, -(l - r + g[3]) * kHalf) + t({0, 1}, {}, (l - r + g[2]) * kHalf));
  return {BracketSpec(Algebra(std::vector<std::string>{"v", "w"}), tb.table), {l, r}};
}

Family build_cl1_minus(const ParamsCL1Minus& p) {
  const Q& l = p.lambda;
  require((p.alpha == Q(0) || p.alpha == l) && (p.beta == Q(0) || p.beta == l), "alpha and beta must lie in {0, lambda}");
  TableBuilder tb;
  tb.add(0, 1, t({}, {0, 1}, p.alpha) + t({1, 0}, {}, -p.beta));
  tb.add(1, 0, t({}, {1, 0}, -l + p.beta) + t({0, 1}, {}, l - p.alpha));
  return {BracketSpec(Algebra(std::vector<std::string>{"v", "w"}), tb.table), {l, -l}};
}

Family build_cl1_plus(const ParamsCL1Plus& p) {
  const Q& l = p.lambda;
  require((p.alpha == Q(0) || p.alpha == l) && (p.beta == Q(0) || p.beta == l), "alpha and beta must lie in {0, lambda}");
  TableBuilder tb;
  tb.add(0, 1, t({0}, {1}, p.alpha) + t({1}, {0}, -p.beta));
  tb.add(1, 0, t({0}, {1}, -l + p.beta) + t({1}, {0}, l - p.alpha));
  return {BracketSpec(Algebra(std::vector<std::string>{"v", "w"}), tb.table), {l, l}};
}

Family build_cl3a(const ParamsCL3a& p) {
  for (int i = 0; i < 3; ++i) require(binary(p.alpha[i]) && binary(p.beta[i]), "parameters must lie in {0, 1}");
  TableBuilder tb;
  // (i, j) with i < j is governed by the constants of the remaining generator k.
  for (auto [i, j, k] : {std::array<int, 3>{0, 1, 2}, {0, 2, 1}, {1, 2, 0}}) {
    const Q& a = p.alpha[k];
    const Q& b = p.beta[k];
    tb.add(i, j, t({i}, {j}, a) + t({j}, {i}, -b));
    tb.add(j, i, t({i}, {j}, b - Q(1)) + t({j}, {i}, Q(1) - a));
  }
  return {BracketSpec(Algebra(3, "v"), tb.table), {Q(1), Q(1), Q(1)}};
}

Family build_cl3b(const ParamsCL3b& p) {
  for (const Q* x : {&p.alpha1, &p.alpha2, &p.alpha3, &p.beta1, &p.beta2, &p.beta3})
    require(binary(*x), "parameters must lie in {0, 1}");
  TableBuilder tb;
  tb.add(0, 1, t({0}, {1}, p.alpha3) + t({1}, {0}, -p.beta3));
  tb.add(1, 0, t({0}, {1}, p.beta3 - Q(1)) + t({1}, {0}, Q(1) - p.alpha3));
  tb.add(0, 2, t({}, {0, 2}, p.alpha2) + t({2, 0}, {}, -p.beta2));
  tb.add(2, 0, t({}, {2, 0}, p.beta2 - Q(1)) + t({0, 2}, {}, Q(1) - p.alpha2));
  tb.add(1, 2, t({}, {1, 2}, p.alpha1) + t({2, 1}, {}, -p.beta1));
  tb.add(2, 1, t({}, {2, 1}, p.beta1 - Q(1)) + t({1, 2}, {}, Q(1) - p.alpha1));
  return {BracketSpec(Algebra(3, "v"), tb.table), {Q(1), Q(1), Q(-1)}};
}

void check_d_delta(int d, int delta) {
  require(d >= 4, "these families need d >= 4");
  require(d <= Letter::kMaxGenerators, "too many generators");
  require(delta >= 0 && delta <= d, "need 0 <= delta <= d");
}

Family build_cld(const ParamsCLd& p) {
  check_d_delta(p.d, p.delta);
  TableBuilder tb;
  for (int i = 0; i < p.d; ++i)
    for (int j = i + 1; j < p.d; ++j) {
      const bool pi = i < p.delta, pj = j < p.delta;
      if (pi && pj)
        tb.add(i, j, t({i}, {j}, Q(1)) + t({j}, {i}, Q(-1)));
      else if (pi)
        tb.add(i, j, t({}, {i, j}, Q(1)) + t({j, i}, {}, Q(-1)));
      else
        tb.add(i, j, t({i}, {j}, Q(-1)) + t({j}, {i}, Q(1)));
    }
  return {BracketSpec(Algebra(p.d, "v"), tb.table), ones_delta(p.d, p.delta)};
}

Family build_cld2(const ParamsCLd2& p) {
  check_d_delta(p.d, p.delta);
  TableBuilder tb;
  for (int i = 0; i < p.d; ++i)
    for (int j = i + 1; j < p.d; ++j) {
      const bool pi = i < p.delta, pj = j < p.delta;
      if (pi && pj) {
        tb.add(i, j, t({i}, {j}, Q(1)));
        tb.add(j, i, t({i}, {j}, Q(-1)));
      } else if (pi) {
        tb.add(i, j, t({j, i}, {}, Q(-1)));
        tb.add(j, i, t({i, j}, {}, Q(1)));
      } else {
        tb.add(i, j, t({i}, {j}, Q(-1)));
        tb.add(j, i, t({i}, {j}, Q(1)));
      }
    }
  return {BracketSpec(Algebra(p.d, "v"), tb.table), ones_delta(p.d, p.delta)};
}

Family build_mdb_one() {
  TableBuilder tb;
  tb.add(0, 1, t({1, 0}, {}, Q(-1)));
  tb.add(1, 0, t({0, 1}, {}, Q(1)));
  tb.add(1, 2, t({1}, {2}, Q(-1)));
  tb.add(2, 1, t({1}, {2}, Q(1)));
  tb.add(2, 0, t({}, {2, 0}, Q(-1)));
  tb.add(0, 2, t({}, {0, 2}, Q(1)));
  return {BracketSpec(Algebra(3), tb.table), {Q(1), Q(-1), Q(-1)}};
}

Family build_mdb_two() {
  TableBuilder tb;
  tb.add(0, 1, t({0}, {1}, Q(-1)));
  tb.add(1, 0, t({0}, {1}, Q(1)));
  tb.add(1, 2, t({2}, {1}, Q(1)));
  tb.add(2, 1, t({2}, {1}, Q(-1)));
  tb.add(2, 0, t({0}, {2}, Q(1)) + t({2}, {0}, Q(-1)));
  return {BracketSpec(Algebra(3), tb.table), {Q(-1), Q(-1), Q(-1)}};
}

Family build_kontsevich() {
  TableBuilder tb;
  tb.add(0, 1, t({1, 0}, {}, Q(-1)));
  tb.add(1, 0, t({0, 1}, {}, Q(1)));
  // Stated as weight (1,1); the weight check disagrees, and we keep the claim.
  return {BracketSpec(Algebra(std::vector<std::string>{"v", "w"}), tb.table), {Q(1), Q(1)}};
}

template <class... F>
struct overloaded : F... {
  using F::operator()...;
};
template <class... F>
overloaded(F...) -> overloaded<F...>;

std::string list(std::initializer_list<Q> xs) {
  std::string out;
  for (const Q& x : xs) out += (out.empty() ? "" : ",") + x.to_string();
  return out;
}

}  // namespace

WeightVector ones_delta(int d, int delta) {
  WeightVector w;
  for (int i = 0; i < d; ++i) w.emplace_back(i < delta ? 1 : -1);
  return w;
}

Family build(const FamilyParams& params) {
  return std::visit(overloaded{[](const ParamsCL1& p) { return build_cl1(p); },
                               [](const ParamsCL1Minus& p) { return build_cl1_minus(p); },
                               [](const ParamsCL1Plus& p) { return build_cl1_plus(p); },
                               [](const ParamsCL3a& p) { return build_cl3a(p); },
                               [](const ParamsCL3b& p) { return build_cl3b(p); },
                               [](const ParamsCLd& p) { return build_cld(p); },
                               [](const ParamsCLd2& p) { return build_cld2(p); },
                               [](const ParamsMdbOne&) { return build_mdb_one(); },
                               [](const ParamsMdbTwo&) { return build_mdb_two(); },
                               [](const ParamsKontsevich&) { return build_kontsevich(); }},
                    params);
}

std::string family_name(const FamilyParams& params) {
  return std::visit(
      overloaded{[](const ParamsCL1& p) {
                   return "cl1(lambda=" + p.lambda.to_string() + ",rho=" + p.rho.to_string() + ",gamma=(" +
                          list({p.gamma[0], p.gamma[1], p.gamma[2], p.gamma[3]}) + "))";
                 },
                 [](const ParamsCL1Minus& p) { return "cl1-1(" + list({p.lambda, p.alpha, p.beta}) + ")"; },
                 [](const ParamsCL1Plus& p) { return "cl1-2(" + list({p.lambda, p.alpha, p.beta}) + ")"; },
                 [](const ParamsCL3a& p) {
                   return "cl3a((" + list({p.alpha[0], p.alpha[1], p.alpha[2]}) + "),(" +
                          list({p.beta[0], p.beta[1], p.beta[2]}) + "))";
                 },
                 [](const ParamsCL3b& p) {
                   return "cl3b((" + list({p.alpha1, p.alpha2, p.beta3}) + "),(" +
                          list({p.beta1, p.beta2, p.alpha3}) + "))";
                 },
                 [](const ParamsCLd& p) { return "cld(" + std::to_string(p.d) + "," + std::to_string(p.delta) + ")"; },
                 [](const ParamsCLd2& p) {
                   return "cld2(" + std::to_string(p.d) + "," + std::to_string(p.delta) + ")";
                 },
                 [](const ParamsMdbOne&) { return std::string("mdbI"); },
                 [](const ParamsMdbTwo&) { return std::string("mdbII"); },
                 [](const ParamsKontsevich&) { return std::string("kontsevich"); }},
      params);
}

bool weighted_poisson(const Family& f) {
  return check_weight(f.spec, f.weight).passed && check_poisson_property(f.spec, f.weight).passed;
}

Tensor3 cl1_djac_vwv(const Rational& l, const Rational& r, const std::array<Rational, 4>& g) {
  const Q q(1, 4);
  const Q a = l + r, b = l - r;
  auto tt = [](std::initializer_list<int> x, std::initializer_list<int> y, std::initializer_list<int> z, const Q& c) {
    return tensor(word(x), word(y), word(z), c);
  };
  Tensor3 out;
  out += tt({0}, {1}, {0}, -(a + g[0]) * g[0] * q);
  out += tt({}, {0, 1}, {0}, -(a + g[0]) * g[2] * q);
  out += tt({0, 0}, {1}, {}, -(b + g[2]) * g[0] * q);
  out += tt({0}, {0, 1}, {}, -(b + g[2]) * g[2] * q);
  out += tt({0}, {0}, {1}, (a + g[1]) * g[1] * q);
  out += tt({0, 0}, {}, {1}, (a + g[1]) * g[3] * q);
  out += tt({}, {0}, {1, 0}, (b + g[3]) * g[1] * q);
  out += tt({0}, {}, {1, 0}, (b + g[3]) * g[3] * q);
  return out;
}

bool cl1_conditions(const Rational& l, const Rational& r, const std::array<Rational, 4>& g) {
  const Q zero(0);
  // DJac(v,v,w) against its prescribed value
  if (g[0] * g[2] != zero || g[1] * g[3] != zero) return false;
  for (const Q& x : g)
    if (x * (l + x * kHalf) != zero) return false;
  // DJac(w,w,v)
  if ((l + r + g[1]) * (l - r + g[2]) != zero || (l + r + g[0]) * (l - r + g[3]) != zero) return false;
  for (const Q& x : g)
    if ((l + r + x) * (l - r + x) != zero) return false;
  // DJac(v,w,v), whose prescribed value vanishes with <<v,v>>
  return cl1_djac_vwv(l, r, g).is_zero();
}

bool CL1Search::conditions_agree() const {
  return std::all_of(grid.begin(), grid.end(), [](const CL1Point& p) { return p.closed_form == p.verified; });
}

CL1Search search_CL1(const Rational& lambda, const std::vector<Rational>& gamma_values,
                     const std::vector<Rational>& rho_values) {
  require(lambda != Q(0), "lambda must be nonzero");
  CL1Search s;
  s.lambda = lambda;
  auto pick = [&](std::vector<Q> given, std::vector<Q> fallback) {
    if (given.empty()) return fallback;
    s.exhaustive = false;
    std::sort(given.begin(), given.end());
    given.erase(std::unique(given.begin(), given.end()), given.end());
    return given;
  };
  const std::vector<Q> values = pick(gamma_values, {Q(0), Q(-2) * lambda});
  const std::vector<Q> rhos = pick(rho_values, {lambda, -lambda});
  const std::size_t n = values.size();
  for (const Q& rho : rhos)
    for (std::size_t i0 = 0; i0 < n; ++i0)
      for (std::size_t i1 = 0; i1 < n; ++i1)
        for (std::size_t i2 = 0; i2 < n; ++i2)
          for (std::size_t i3 = 0; i3 < n; ++i3) {
            CL1Point p;
            p.rho = rho;
            p.gamma = {values[i0], values[i1], values[i2], values[i3]};
            p.closed_form = cl1_conditions(lambda, rho, p.gamma);
            p.verified = weighted_poisson(build_cl1({lambda, rho, p.gamma}));
            s.grid.push_back(p);
          }
  std::sort(s.grid.begin(), s.grid.end(), [](const CL1Point& a, const CL1Point& b) { return a.key() < b.key(); });
  for (const auto& p : s.grid)
    if (p.verified) s.survivors.push_back(p);
  return s;
}

Rational triple_condition(const std::array<Rational, 3>& x) { return x[0] * x[1] + x[1] * x[2] - x[0] * x[2] - x[1]; }

bool CL3Search::conditions_agree() const {
  return std::all_of(grid.begin(), grid.end(), [](const CL3Point& p) { return p.closed_form == p.verified; });
}

namespace {

std::vector<std::array<Q, 3>> binary_triples() {
  std::vector<std::array<Q, 3>> out;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) out.push_back({Q(a), Q(b), Q(c)});
  return out;
}

template <class Make>
CL3Search search_cl3(Make make) {
  CL3Search s;
  for (const auto& a : binary_triples())
    for (const auto& b : binary_triples()) {
      CL3Point p;
      p.alpha = a;
      p.beta = b;
      p.closed_form = triple_condition(a) == Q(0) && triple_condition(b) == Q(0);
      p.verified = weighted_poisson(make(a, b));
      s.grid.push_back(p);
    }
  std::sort(s.grid.begin(), s.grid.end(), [](const CL3Point& x, const CL3Point& y) { return x.key() < y.key(); });
  for (const auto& p : s.grid)
    if (p.verified) s.survivors.push_back(p);
  return s;
}

}  // namespace

ParamsCL3b cl3b_from_triples(const std::array<Rational, 3>& alpha, const std::array<Rational, 3>& beta) {
  return {alpha[0], alpha[1], beta[2], beta[0], beta[1], alpha[2]};
}

CL3Search search_CL3a() {
  return search_cl3([](const auto& a, const auto& b) { return build_cl3a({a, b}); });
}

CL3Search search_CL3b() {
  return search_cl3([](const auto& a, const auto& b) { return build_cl3b(cl3b_from_triples(a, b)); });
}

VerificationReport verify_family_props(int d, int delta, const FamilyCheckOptions& opt) {
  check_d_delta(d, delta);
  VerificationReport r;
  r.axiom = "family_props";
  r.parameters["d"] = d;
  r.parameters["delta"] = delta;
  CheckOptions pairs, triples;
  pairs.max_degree = opt.pair_degree;
  triples.max_degree = opt.triple_degree;
  for (const FamilyParams& p : {FamilyParams(ParamsCLd{d, delta}), FamilyParams(ParamsCLd2{d, delta})}) {
    Family f = build(p);
    VerificationReport fr;
    fr.axiom = family_name(p);
    fr.parameters["weight"] = render_weight(f.weight);
    fr.add_component(check_weight(f.spec, f.weight));
    fr.add_component(check_poisson_property(f.spec, f.weight));
    fr.add_component(check_h0_skew(f.spec, pairs));
    fr.add_component(check_jacobi(f.spec, triples));
    r.add_component(std::move(fr));
  }
  return r;
}

}  // namespace ncdb
