#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "ncdb/axioms.hpp"

namespace ncdb {

// Dense square matrix over the rationals, row-major.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {}
  static Matrix identity(int n);

  int size() const { return n_; }
  Rational& operator()(int i, int j) { return a_[static_cast<std::size_t>(i * n_ + j)]; }
  const Rational& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * n_ + j)]; }
  Rational trace() const;
  // Exact Gauss-Jordan elimination; none when singular.
  std::optional<Matrix> inverse() const;

  friend Matrix operator*(const Matrix& x, const Matrix& y);
  friend Matrix operator+(const Matrix& x, const Matrix& y);
  friend Matrix operator*(const Rational& s, const Matrix& x);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  int n_ = 0;
  std::vector<Rational> a_;
};

// One matrix per generator, plus the inverse for each inverted generator.
class MatrixPoint {
 public:
  MatrixPoint(const Algebra& alg, std::vector<Matrix> gens);
  // Entries p/q with p in [-9,9], q in [1,9]; invertible generators are redrawn until nonsingular.
  static MatrixPoint random(const Algebra& alg, int n, std::uint64_t seed);

  int size() const { return n_; }
  const Matrix& letter(Letter l) const;
  const std::vector<Matrix>& generators() const { return gens_; }

 private:
  int n_ = 0;
  std::vector<Matrix> gens_;
  std::vector<std::optional<Matrix>> inverses_;
};

Matrix eval_word(const Word& w, const MatrixPoint& p);
Matrix eval_element(const Element& x, const MatrixPoint& p);
Rational eval_trace(const Element& x, const MatrixPoint& p);

// Memoised traces of words at one point.
class TraceEvaluator {
 public:
  explicit TraceEvaluator(const MatrixPoint& p) : point_(&p) {}
  Rational operator()(const Element& x);
  const Rational& word(const Word& w);

 private:
  const MatrixPoint* point_;
  std::unordered_map<Word, Rational> cache_;
};

// tr({a,b}) at p.
Rational induced_trace_bracket(const BracketSpec& spec, const Element& a, const Element& b, const MatrixPoint& p);

// Components: trace_skew for tr({a,b}+{b,a}) on pairs, trace_jacobi on triples.
// Brackets are expanded once and evaluated at every point.
VerificationReport check_induced_poisson(const BracketSpec& spec, const std::vector<MatrixPoint>& points,
                                         int max_degree, bool all_witnesses = false);
VerificationReport check_induced_poisson(const BracketSpec& spec, const MatrixPoint& p, int max_degree);

// {a_ij, b_kl} at p for a double Poisson bracket, indexed [((i*N+j)*N+k)*N+l].
// Throws std::invalid_argument unless the spec is double Poisson.
std::vector<Rational> entrywise_bracket(const BracketSpec& spec, const Element& a, const Element& b,
                                        const MatrixPoint& p);

}  // namespace ncdb
