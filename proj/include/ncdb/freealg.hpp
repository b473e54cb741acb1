#pragma once

#include <array>
#include <optional>
#include <string>

#include "ncdb/linear.hpp"
#include "ncdb/rational.hpp"
#include "ncdb/word.hpp"

namespace ncdb {

using Pair = std::array<Word, 2>;
using Triple = std::array<Word, 3>;

using Element = Combination<Word>;
using Tensor2 = Combination<Pair>;
using Tensor3 = Combination<Triple>;

inline Element unit() { return Element(Word()); }
inline Element monomial(Word w, Rational c = Rational(1)) { return Element(std::move(w), std::move(c)); }
inline Element gen(int g) { return Element(Word(Letter(g, false))); }
inline Tensor2 tensor(Word a, Word b, Rational c = Rational(1)) {
  return Tensor2(Pair{std::move(a), std::move(b)}, std::move(c));
}
inline Tensor3 tensor(Word a, Word b, Word c, Rational k = Rational(1)) {
  return Tensor3(Triple{std::move(a), std::move(b), std::move(c)}, std::move(k));
}

Element operator*(const Element& x, const Element& y);
Tensor2 t2_mul(const Tensor2& u, const Tensor2& w);
Tensor3 t3_mul(const Tensor3& u, const Tensor3& w);
Tensor2 tensor_product(const Element& x, const Element& y);

// (c1 (x) 1) u (1 (x) c2)
Tensor2 outer_act(const Element& c1, const Tensor2& u, const Element& c2);
// (1 (x) c1) u (c2 (x) 1)
Tensor2 inner_act(const Element& c1, const Tensor2& u, const Element& c2);
Tensor2 flip(const Tensor2& u);

// (a (x) b) (x)_1 c = a (x) c (x) b, and c (x)_1 (a (x) b) is the same tensor.
Tensor3 otimes1_left(const Tensor2& u, const Element& c);
Tensor3 otimes1_right(const Element& c, const Tensor2& u);
Tensor3 otimes_left(const Tensor2& u, const Element& c);   // u (x) c
Tensor3 otimes_right(const Element& c, const Tensor2& u);  // c (x) u

Element m2(const Tensor2& u);
Element m3(const Tensor3& w);

// Cancels inverse pairs across the ends, then takes the minimal rotation.
// Two words are conjugate (equal modulo commutators) iff their forms agree.
Word cyclic_normal_form(const Word& w);
Element reduce_mod_commutators(const Element& x);

std::string render(const Algebra& alg, const Word& w);
std::string render(const Algebra& alg, const Element& x);
std::string render(const Algebra& alg, const Tensor2& u);
std::string render(const Algebra& alg, const Tensor3& w);

// Largest word degree among the terms; none for zero.
std::optional<std::size_t> degree(const Element& x);

}  // namespace ncdb
