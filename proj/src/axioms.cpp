#include "ncdb/axioms.hpp"

#include <stdexcept>

#include "packed.hpp"

namespace ncdb {

using json = nlohmann::ordered_json;

void VerificationReport::add_failure(Witness w, bool keep_all) {
  passed = false;
  if (keep_all || witnesses.empty()) witnesses.push_back(std::move(w));
}

void VerificationReport::add_component(VerificationReport r) {
  if (!r.passed) passed = false;
  components.push_back(std::move(r));
}

json VerificationReport::to_json() const {
  json j;
  j["axiom"] = axiom;
  j["status"] = passed ? "pass" : "fail";
  j["parameters"] = parameters;
  json ws = json::array();
  for (const auto& w : witnesses)
    ws.push_back(json{{"inputs", w.inputs}, {"expected", w.expected}, {"actual", w.actual}, {"residual", w.residual}});
  j["witnesses"] = ws;
  if (!components.empty()) {
    json cs = json::array();
    for (const auto& c : components) cs.push_back(c.to_json());
    j["components"] = cs;
  }
  if (!note.empty()) j["note"] = note;
  return j;
}

std::string render_weight(const WeightVector& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ",";
    out += w[i].to_string();
  }
  return out + ")";
}

namespace {

json weight_json(const WeightVector& w) {
  json a = json::array();
  for (const auto& x : w) a.push_back(x.to_string());
  return a;
}

std::string letter_name(const Algebra& alg, Letter l) { return render(alg, Word(l)); }

Element letter_elem(Letter l) { return Element(Word(l)); }

template <class T>
Witness make_witness(const Algebra& alg, json inputs, const T& expected, const T& actual) {
  Witness w;
  w.inputs = std::move(inputs);
  w.expected = render(alg, expected);
  w.actual = render(alg, actual);
  w.residual = render(alg, actual - expected);
  return w;
}

int degree_or(const CheckOptions& opt, int fallback) { return opt.max_degree >= 0 ? opt.max_degree : fallback; }

// (l_x+l_y)/2 (x (x) y - y (x) x) + (l_x-l_y)/2 (1 (x) xy - yx (x) 1)
Tensor2 weight_defect(const std::vector<Rational>& lw, Letter x, Letter y) {
  Rational lx = lw[x.code()], ly = lw[y.code()];
  Rational s = (lx + ly) / Rational(2), t = (lx - ly) / Rational(2);
  Word wx(x), wy(y);
  Tensor2 out = tensor(wx, wy, s) - tensor(wy, wx, s);
  out += tensor(Word(), wx * wy, t) - tensor(wy * wx, Word(), t);
  return out;
}

}  // namespace

Tensor2 skew_defect(const BracketSpec& spec, Letter x, Letter y) { return spec.letter(x, y) + flip(spec.letter(y, x)); }

VerificationReport check_cyclic_skew(const BracketSpec& spec, const CheckOptions& opt) {
  VerificationReport r;
  r.axiom = "cyclic_skew";
  const Algebra& alg = spec.algebra();
  std::size_t pairs = 0;
  for (Letter x : alg.letters())
    for (Letter y : alg.letters()) {
      ++pairs;
      Tensor2 d = skew_defect(spec, x, y);
      if (!d.is_zero()) {
        r.add_failure(make_witness(alg, json{{"a", letter_name(alg, x)}, {"b", letter_name(alg, y)}}, Tensor2(), d),
                      opt.all_witnesses);
        if (!opt.all_witnesses) goto done;
      }
    }
done:
  r.parameters["generator_pairs_checked"] = pairs;
  return r;
}

VerificationReport check_double_poisson(const BracketSpec& spec, const CheckOptions& opt) {
  VerificationReport r;
  r.axiom = "double_poisson";
  r.add_component(check_cyclic_skew(spec, opt));
  VerificationReport dj;
  dj.axiom = "double_jacobiator_generators";
  const Algebra& alg = spec.algebra();
  std::size_t triples = 0;
  for (Letter x : alg.letters())
    for (Letter y : alg.letters())
      for (Letter z : alg.letters()) {
        if (!dj.passed && !opt.all_witnesses) break;
        ++triples;
        Tensor3 v = djac(spec, letter_elem(x), letter_elem(y), letter_elem(z));
        if (!v.is_zero())
          dj.add_failure(make_witness(alg,
                                      json{{"a", letter_name(alg, x)}, {"b", letter_name(alg, y)},
                                           {"c", letter_name(alg, z)}},
                                      Tensor3(), v),
                         opt.all_witnesses);
      }
  dj.parameters["generator_triples_checked"] = triples;
  r.add_component(std::move(dj));
  return r;
}

VerificationReport check_mixed_type(const BracketSpec& spec, const MixedType& type, const CheckOptions& opt) {
  VerificationReport r;
  r.axiom = "mixed_type";
  const Algebra& alg = spec.algebra();
  const int d = alg.generators();
  if (!alg.is_free()) throw std::invalid_argument("mixed type is defined on free algebras only");
  if (static_cast<int>(type.lambda.size()) != d || static_cast<int>(type.mu.size()) != d)
    throw std::invalid_argument("type matrices must be d x d");
  for (int i = 0; i < d; ++i)
    if (static_cast<int>(type.lambda[i].size()) != d || static_cast<int>(type.mu[i].size()) != d)
      throw std::invalid_argument("type matrices must be d x d");
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const bool lam_ok = i == j || type.lambda[i][j] == type.lambda[j][i];
      const bool mu_ok = type.mu[i][j] == -type.mu[j][i];
      if (!lam_ok || !mu_ok) {
        Witness w;
        w.inputs = json{{"i", alg.name(i)}, {"j", alg.name(j)}};
        w.expected = "lambda symmetric, mu skew-symmetric";
        w.actual = "lambda_ij=" + type.lambda[i][j].to_string() + " lambda_ji=" + type.lambda[j][i].to_string() +
                   " mu_ij=" + type.mu[i][j].to_string() + " mu_ji=" + type.mu[j][i].to_string();
        w.residual = lam_ok ? (type.mu[i][j] + type.mu[j][i]).to_string()
                            : (type.lambda[i][j] - type.lambda[j][i]).to_string();
        r.add_failure(std::move(w), opt.all_witnesses);
      }
    }
  std::size_t pairs = 0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      ++pairs;
      Word vi = Word(Letter(i, false)), vj = Word(Letter(j, false));
      Tensor2 expected = tensor(vi, vj, type.lambda[i][j]) - tensor(vj, vi, type.lambda[i][j]) +
                         tensor(Word(), vi * vj, type.mu[i][j]) + tensor(vj * vi, Word(), type.mu[j][i]);
      Tensor2 actual = skew_defect(spec, Letter(i, false), Letter(j, false));
      if (actual != expected)
        r.add_failure(make_witness(alg, json{{"i", alg.name(i)}, {"j", alg.name(j)}}, expected, actual),
                      opt.all_witnesses);
    }
  r.parameters["generator_pairs_checked"] = pairs;
  return r;
}

Inferred<MixedType> infer_mixed_type(const BracketSpec& spec) {
  const Algebra& alg = spec.algebra();
  if (!alg.is_free()) return {std::nullopt, "mixed type is defined on free algebras only"};
  const int d = alg.generators();
  MixedType t;
  t.lambda.assign(static_cast<std::size_t>(d), std::vector<Rational>(static_cast<std::size_t>(d)));
  t.mu = t.lambda;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Letter x(i, false), y(j, false);
      Tensor2 def = skew_defect(spec, x, y);
      if (i == j) {
        if (!def.is_zero())
          return {std::nullopt, "<<" + alg.name(i) + "," + alg.name(i) + ">> is not cyclically skew-symmetric"};
        continue;
      }
      Word vi(x), vj(y);
      t.lambda[i][j] = def.coeff(Pair{vi, vj});
      t.mu[i][j] = def.coeff(Pair{Word(), vi * vj});
      t.mu[j][i] = def.coeff(Pair{vj * vi, Word()});
      Tensor2 rebuilt = tensor(vi, vj, t.lambda[i][j]) - tensor(vj, vi, t.lambda[i][j]) +
                        tensor(Word(), vi * vj, t.mu[i][j]) + tensor(vj * vi, Word(), t.mu[j][i]);
      if (rebuilt != def)
        return {std::nullopt, "skew defect at (" + alg.name(i) + "," + alg.name(j) +
                                  ") lies outside the span of the mixed-type terms: " + render(alg, def)};
      if (t.mu[j][i] != -t.mu[i][j])
        return {std::nullopt, "skew defect at (" + alg.name(i) + "," + alg.name(j) + ") needs mu_ji != -mu_ij"};
    }
  // Diagonal entries are free; choose them so that lambda_ii = lambda_il + mu_il for the first l != i.
  for (int i = 0; i < d; ++i) {
    int l = i == 0 ? 1 : 0;
    if (l < d) t.lambda[i][i] = t.lambda[i][l] + t.mu[i][l];
  }
  return {t, ""};
}

VerificationReport check_wskm(const MixedType& type) {
  VerificationReport r;
  r.axiom = "wskM";
  const std::size_t d = type.lambda.size();
  std::size_t checked = 0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = 0; l < d; ++l) {
          ++checked;
          Rational lhs = type.lambda[i][j] - type.lambda[k][l];
          Rational rhs = type.mu[i][l] - type.mu[k][j];
          if (lhs != rhs && r.passed) {
            Witness w;
            w.inputs = json{{"i", i + 1}, {"j", j + 1}, {"k", k + 1}, {"l", l + 1}};
            w.expected = rhs.to_string();
            w.actual = lhs.to_string();
            w.residual = (lhs - rhs).to_string();
            r.add_failure(std::move(w), false);
          }
        }
  r.parameters["index_quadruples_checked"] = checked;
  return r;
}

VerificationReport check_weight(const BracketSpec& spec, const WeightVector& w, const CheckOptions& opt) {
  VerificationReport r;
  r.axiom = "weight";
  const Algebra& alg = spec.algebra();
  auto lw = letter_weights(alg, w);
  r.parameters["weight"] = weight_json(w);
  r.parameters["localised"] = !alg.is_free();
  std::size_t pairs = 0;
  for (Letter x : alg.letters())
    for (Letter y : alg.letters()) {
      ++pairs;
      Tensor2 expected = weight_defect(lw, x, y);
      Tensor2 actual = skew_defect(spec, x, y);
      if (actual != expected) {
        r.add_failure(make_witness(alg, json{{"a", letter_name(alg, x)}, {"b", letter_name(alg, y)}}, expected, actual),
                      opt.all_witnesses);
        if (!opt.all_witnesses) goto done;
      }
    }
done:
  r.parameters["letter_pairs_checked"] = pairs;
  return r;
}

Inferred<WeightVector> infer_weight(const BracketSpec& spec) {
  const Algebra& alg = spec.algebra();
  const auto letters = alg.letters();
  std::vector<std::optional<Rational>> cand(2 * static_cast<std::size_t>(alg.generators()));
  auto assign = [&](Letter l, const Rational& v) -> bool {
    auto& c = cand[l.code()];
    if (!c) {
      c = v;
      return true;
    }
    return *c == v;
  };
  for (Letter x : letters)
    for (Letter y : letters) {
      if (x.gen() == y.gen()) continue;
      Tensor2 def = skew_defect(spec, x, y);
      Word wx(x), wy(y);
      Rational s = def.coeff(Pair{wx, wy});
      Rational t = def.coeff(Pair{Word(), wx * wy});
      if (!assign(x, s + t) || !assign(y, s - t))
        return {std::nullopt, "skew defects at (" + letter_name(alg, x) + "," + letter_name(alg, y) +
                                  ") imply inconsistent weights"};
    }
  WeightVector w;
  for (int g = 0; g < alg.generators(); ++g) w.push_back(cand[Letter(g, false).code()].value_or(Rational(0)));
  for (int g : alg.inverted()) w.push_back(cand[Letter(g, true).code()].value_or(Rational(0)));
  auto rep = check_weight(spec, w);
  if (!rep.passed) {
    const auto& wt = rep.witnesses.front();
    return {std::nullopt, "no weight fits: at " + wt.inputs.dump() + " the skew defect is " + wt.actual +
                              " but weight " + render_weight(w) + " predicts " + wt.expected};
  }
  return {w, ""};
}

Tensor3 poisson_rhs(const BracketSpec& spec, const std::vector<Rational>& lw, Letter x, Letter y, const Element& c) {
  Rational lx = lw[x.code()], ly = lw[y.code()];
  Rational s = -(lx + ly) / Rational(2), t = (lx - ly) / Rational(2);
  Tensor2 br = dbracket(spec, letter_elem(x), c);
  Word wy(y);
  TermBuffer<Triple> out;
  for (const auto& [p, k] : br) {
    out.add(Triple{p[0], wy, p[1]}, k * s);
    out.add(Triple{p[0], Word(), wy * p[1]}, k * t);
  }
  return out.finish();
}

VerificationReport check_poisson_property(const BracketSpec& spec, const WeightVector& w, const CheckOptions& opt) {
  VerificationReport r;
  r.axiom = "poisson_property";
  const Algebra& alg = spec.algebra();
  auto lw = letter_weights(alg, w);
  r.parameters["weight"] = weight_json(w);
  r.parameters["localised"] = !alg.is_free();
  std::size_t triples = 0;
  const auto letters = alg.letters();
  for (Letter x : letters)
    for (Letter y : letters)
      for (Letter z : letters) {
        ++triples;
        Tensor3 actual = djac(spec, letter_elem(x), letter_elem(y), letter_elem(z));
        Tensor3 expected = poisson_rhs(spec, lw, x, y, letter_elem(z));
        if (actual != expected) {
          r.add_failure(make_witness(alg,
                                     json{{"a", letter_name(alg, x)}, {"b", letter_name(alg, y)},
                                          {"c", letter_name(alg, z)}},
                                     expected, actual),
                        opt.all_witnesses);
          if (!opt.all_witnesses) goto done;
        }
      }
done:
  r.parameters["letter_triples_checked"] = triples;
  return r;
}

VerificationReport check_h0_skew(const BracketSpec& spec, const CheckOptions& opt) {
  VerificationReport r;
  r.axiom = "h0_skew";
  const Algebra& alg = spec.algebra();
  const int deg = degree_or(opt, kDefaultPairDegree);
  r.parameters["max_degree"] = deg;
  r.parameters["localised"] = !alg.is_free();
  auto words = enumerate_words(alg, deg);
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i; j < words.size(); ++j) {
      ++pairs;
      TermBuffer<Word> buf;
      accumulate_mbracket(spec, words[i], words[j], Rational(1), buf);
      accumulate_mbracket(spec, words[j], words[i], Rational(1), buf);
      Element sum = buf.finish();
      Element red = reduce_mod_commutators(sum);
      if (!red.is_zero()) {
        Witness w;
        w.inputs = json{{"a", render(alg, words[i])}, {"b", render(alg, words[j])}};
        w.expected = "0 mod commutators";
        w.actual = render(alg, sum);
        w.residual = render(alg, red);
        r.add_failure(std::move(w), opt.all_witnesses);
        if (!opt.all_witnesses) goto done;
      }
    }
done:
  r.parameters["word_pairs_checked"] = pairs;
  return r;
}

VerificationReport check_jacobi(const BracketSpec& spec, const CheckOptions& opt) {
  VerificationReport r;
  r.axiom = "jacobi";
  const Algebra& alg = spec.algebra();
  const int deg = degree_or(opt, kDefaultTripleDegree);
  r.parameters["max_degree"] = deg;
  r.parameters["localised"] = !alg.is_free();
  auto words = enumerate_words(alg, deg);
  const std::size_t n = words.size();
  auto report = [&](std::size_t a, std::size_t b, std::size_t c) {
    Element j = jacobiator(spec, monomial(words[a]), monomial(words[b]), monomial(words[c]));
    Witness w;
    w.inputs = json{{"a", render(alg, words[a])}, {"b", render(alg, words[b])}, {"c", render(alg, words[c])}};
    w.expected = "0";
    w.actual = render(alg, j);
    w.residual = w.actual;
    r.add_failure(std::move(w), opt.all_witnesses);
    return opt.all_witnesses;
  };
  r.parameters["word_triples_checked"] = n * n * n;
  if (detail::packed_jacobi_scan(spec, words, report)) return r;

  std::vector<Element> pb(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) pb[i * n + j] = mbracket(spec, monomial(words[i]), monomial(words[j]));
  TermBuffer<Word> buf;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        for (const auto& [x, k] : pb[b * n + c]) accumulate_mbracket(spec, words[a], x, k, buf);
        for (const auto& [x, k] : pb[a * n + c]) accumulate_mbracket(spec, words[b], x, -k, buf);
        for (const auto& [x, k] : pb[a * n + b]) accumulate_mbracket(spec, x, words[c], -k, buf);
        if (!buf.finish().is_zero() && !report(a, b, c)) return r;
      }
  return r;
}

VerificationReport check_lambda_double_lie(const BracketSpec& spec, const Rational& lambda, const CheckOptions& opt) {
  VerificationReport r;
  r.axiom = "lambda_double_lie";
  r.parameters["lambda"] = lambda.to_string();
  const Algebra& alg = spec.algebra();
  if (!alg.is_free()) throw std::invalid_argument("lambda-double Lie structures live on free algebras");
  for (const auto& [key, value] : spec.table())
    for (const auto& [p, c] : value)
      if (p[0].degree() != 1 || p[1].degree() != 1) {
        r.passed = false;
        r.note = "not V(x)V-valued";
        Witness w;
        w.inputs = json{{"a", alg.name(key.first)}, {"b", alg.name(key.second)}};
        w.expected = "a tensor in V(x)V";
        w.actual = render(alg, value);
        w.residual = render(alg, tensor(p[0], p[1], c));
        r.witnesses.push_back(std::move(w));
        return r;
      }
  const int d = alg.generators();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Letter x(i, false), y(j, false);
      Tensor2 expected = tensor(Word(x), Word(y), lambda) - tensor(Word(y), Word(x), lambda);
      Tensor2 actual = skew_defect(spec, x, y);
      if (actual != expected)
        r.add_failure(make_witness(alg, json{{"identity", "skew"}, {"a", alg.name(i)}, {"b", alg.name(j)}}, expected,
                                   actual),
                      opt.all_witnesses);
    }
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        Letter x(i, false), y(j, false), z(k, false);
        Tensor3 actual = djac(spec, letter_elem(x), letter_elem(y), letter_elem(z));
        TermBuffer<Triple> buf;
        for (const auto& [p, c] : spec.letter(x, z)) buf.add(Triple{p[0], Word(y), p[1]}, -lambda * c);
        Tensor3 expected = buf.finish();
        if (actual != expected)
          r.add_failure(make_witness(alg,
                                     json{{"identity", "jacobi"}, {"a", alg.name(i)}, {"b", alg.name(j)},
                                          {"c", alg.name(k)}},
                                     expected, actual),
                        opt.all_witnesses);
      }
  r.parameters["generator_pairs_checked"] = d * d;
  r.parameters["generator_triples_checked"] = d * d * d;
  return r;
}

}  // namespace ncdb
