#include "ncdb/repspace.hpp"

#include <random>
#include <stdexcept>

namespace ncdb {

using json = nlohmann::ordered_json;

Matrix Matrix::identity(int n) {
  Matrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = Rational(1);
  return m;
}

Rational Matrix::trace() const {
  Rational t;
  for (int i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

std::optional<Matrix> Matrix::inverse() const {
  Matrix a = *this, inv = identity(n_);
  for (int c = 0; c < n_; ++c) {
    int piv = c;
    while (piv < n_ && a(piv, c).is_zero()) ++piv;
    if (piv == n_) return std::nullopt;
    if (piv != c)
      for (int j = 0; j < n_; ++j) {
        std::swap(a(piv, j), a(c, j));
        std::swap(inv(piv, j), inv(c, j));
      }
    Rational s = Rational(1) / a(c, c);
    for (int j = 0; j < n_; ++j) {
      a(c, j) *= s;
      inv(c, j) *= s;
    }
    for (int r = 0; r < n_; ++r) {
      if (r == c || a(r, c).is_zero()) continue;
      Rational f = a(r, c);
      for (int j = 0; j < n_; ++j) {
        a(r, j) -= f * a(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
  const int n = x.n_;
  Matrix z(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const Rational& xik = x(i, k);
      if (xik.is_zero()) continue;
      for (int j = 0; j < n; ++j) z(i, j) += xik * y(k, j);
    }
  return z;
}

Matrix operator+(const Matrix& x, const Matrix& y) {
  Matrix z = x;
  for (std::size_t i = 0; i < z.a_.size(); ++i) z.a_[i] += y.a_[i];
  return z;
}

Matrix operator*(const Rational& s, const Matrix& x) {
  Matrix z = x;
  for (auto& v : z.a_) v *= s;
  return z;
}

MatrixPoint::MatrixPoint(const Algebra& alg, std::vector<Matrix> gens) : gens_(std::move(gens)) {
  if (static_cast<int>(gens_.size()) != alg.generators()) throw std::invalid_argument("one matrix per generator");
  n_ = gens_.empty() ? 0 : gens_[0].size();
  for (const auto& m : gens_)
    if (m.size() != n_) throw std::invalid_argument("matrices must share one size");
  inverses_.resize(gens_.size());
  for (int g : alg.inverted()) {
    auto inv = gens_[static_cast<std::size_t>(g)].inverse();
    if (!inv) throw std::invalid_argument("matrix for an inverted generator is singular");
    inverses_[static_cast<std::size_t>(g)] = std::move(inv);
  }
}

MatrixPoint MatrixPoint::random(const Algebra& alg, int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("matrix size must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
  std::vector<Matrix> gens;
  for (int g = 0; g < alg.generators(); ++g) {
    for (;;) {
      Matrix m(n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          int p = num(rng);
          m(i, j) = Rational(p, den(rng));
        }
      if (!alg.invertible(g) || m.inverse()) {
        gens.push_back(std::move(m));
        break;
      }
    }
  }
  return MatrixPoint(alg, std::move(gens));
}

const Matrix& MatrixPoint::letter(Letter l) const {
  const auto g = static_cast<std::size_t>(l.gen());
  if (g >= gens_.size()) throw std::invalid_argument("letter outside the algebra");
  if (!l.inverse()) return gens_[g];
  if (!inverses_[g]) throw std::invalid_argument("inverse letter without a stored inverse");
  return *inverses_[g];
}

Matrix eval_word(const Word& w, const MatrixPoint& p) {
  Matrix m = Matrix::identity(p.size());
  for (Letter l : w.letters()) m = m * p.letter(l);
  return m;
}

Matrix eval_element(const Element& x, const MatrixPoint& p) {
  Matrix m(p.size());
  for (const auto& [w, c] : x) m = m + c * eval_word(w, p);
  return m;
}

Rational eval_trace(const Element& x, const MatrixPoint& p) { return eval_element(x, p).trace(); }

const Rational& TraceEvaluator::word(const Word& w) {
  // Conjugate words share a trace.
  Word key = cyclic_normal_form(w);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  return cache_.emplace(key, eval_word(key, *point_).trace()).first->second;
}

Rational TraceEvaluator::operator()(const Element& x) {
  Rational t;
  for (const auto& [w, c] : x) t += c * word(w);
  return t;
}

Rational induced_trace_bracket(const BracketSpec& spec, const Element& a, const Element& b, const MatrixPoint& p) {
  return eval_trace(mbracket(spec, a, b), p);
}

VerificationReport check_induced_poisson(const BracketSpec& spec, const std::vector<MatrixPoint>& points,
                                         int max_degree, bool all_witnesses) {
  const Algebra& alg = spec.algebra();
  VerificationReport r;
  r.axiom = "induced_poisson";
  r.parameters["max_degree"] = max_degree;
  r.parameters["points"] = points.size();
  r.parameters["matrix_size"] = points.empty() ? 0 : points[0].size();
  std::vector<TraceEvaluator> tr;
  for (const auto& p : points) tr.emplace_back(p);
  auto words = enumerate_words(alg, max_degree);
  const std::size_t n = words.size();

  auto witness = [&](std::size_t point, json inputs, const Element& x, const Rational& value) {
    Witness w;
    inputs["point"] = std::to_string(point);
    inputs["combination"] = render(alg, x);  // the element whose trace should vanish
    w.inputs = std::move(inputs);
    w.expected = "0";
    w.actual = value.to_string();
    w.residual = w.actual;
    return w;
  };

  std::vector<Element> pb(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) pb[i * n + j] = mbracket(spec, monomial(words[i]), monomial(words[j]));

  VerificationReport skew;
  skew.axiom = "trace_skew";
  for (std::size_t i = 0; i < n && (skew.passed || all_witnesses); ++i)
    for (std::size_t j = i; j < n; ++j) {
      Element s = pb[i * n + j] + pb[j * n + i];
      bool failed = false;
      for (std::size_t k = 0; k < points.size() && !failed; ++k) {
        Rational v = tr[k](s);
        if (!v.is_zero()) {
          skew.add_failure(witness(k, json{{"a", render(alg, words[i])}, {"b", render(alg, words[j])}}, s, v),
                           all_witnesses);
          failed = true;
        }
      }
      if (failed && !all_witnesses) break;
    }
  skew.parameters["word_pairs_checked"] = n * (n + 1) / 2;

  VerificationReport jac;
  jac.axiom = "trace_jacobi";
  TermBuffer<Word> buf;
  bool stop = false;
  for (std::size_t a = 0; a < n && !stop; ++a)
    for (std::size_t b = 0; b < n && !stop; ++b)
      for (std::size_t c = 0; c < n && !stop; ++c) {
        for (const auto& [x, k] : pb[b * n + c]) accumulate_mbracket(spec, words[a], x, k, buf);
        for (const auto& [x, k] : pb[a * n + c]) accumulate_mbracket(spec, words[b], x, -k, buf);
        for (const auto& [x, k] : pb[a * n + b]) accumulate_mbracket(spec, x, words[c], -k, buf);
        Element j = buf.finish();
        if (j.is_zero()) continue;
        for (std::size_t k = 0; k < points.size(); ++k) {
          Rational v = tr[k](j);
          if (!v.is_zero()) {
            jac.add_failure(witness(k,
                                    json{{"a", render(alg, words[a])}, {"b", render(alg, words[b])},
                                         {"c", render(alg, words[c])}},
                                    j, v),
                            all_witnesses);
            stop = !all_witnesses;
            break;
          }
        }
      }
  jac.parameters["word_triples_checked"] = n * n * n;
  r.add_component(std::move(skew));
  r.add_component(std::move(jac));
  return r;
}

VerificationReport check_induced_poisson(const BracketSpec& spec, const MatrixPoint& p, int max_degree) {
  return check_induced_poisson(spec, std::vector<MatrixPoint>{p}, max_degree);
}

std::vector<Rational> entrywise_bracket(const BracketSpec& spec, const Element& a, const Element& b,
                                        const MatrixPoint& p) {
  if (!check_double_poisson(spec).passed)
    throw std::invalid_argument("entrywise brackets are defined for double Poisson brackets only");
  const int n = p.size();
  const auto N = static_cast<std::size_t>(n);
  std::vector<Rational> out(N * N * N * N);
  // {a_ij, b_kl} = sum c X_kj Y_il over the terms c X (x) Y of <<a,b>>
  for (const auto& [pr, c] : dbracket(spec, a, b)) {
    Matrix x = eval_word(pr[0], p), y = eval_word(pr[1], p);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l) {
            auto idx = ((static_cast<std::size_t>(i) * N + j) * N + k) * N + l;
            out[idx] += c * x(k, j) * y(i, l);
          }
  }
  return out;
}

}  // namespace ncdb
