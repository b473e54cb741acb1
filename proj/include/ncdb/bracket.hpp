#pragma once

#include <map>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "ncdb/freealg.hpp"

namespace ncdb {

// One rational per generator. A localised algebra's extended weight appends
// one entry per inverted generator, in inversion order.
using WeightVector = std::vector<Rational>;

// Weight of each letter code, extended to inverse letters by negation.
std::vector<Rational> letter_weights(const Algebra& alg, const WeightVector& w);
WeightVector extended_weight(const Algebra& alg, const WeightVector& base);

// Double bracket on generators, extended to the whole algebra by the Leibniz
// rules. The table holds positive-letter pairs only; brackets involving inverse
// letters are derived once at construction.
class BracketSpec {
 public:
  using Table = std::map<std::pair<int, int>, Tensor2>;

  BracketSpec() = default;
  explicit BracketSpec(Algebra alg, Table table = {});

  const Algebra& algebra() const { return alg_; }
  const Table& table() const { return table_; }
  const Tensor2& entry(int i, int j) const;
  const Tensor2& letter(Letter x, Letter y) const {
    return letters_[static_cast<std::size_t>(x.code()) * stride_ + y.code()];
  }

  BracketSpec scaled(const Rational& s) const;
  // Generator g is renamed to generator image[g]; names stay in place.
  BracketSpec relabeled(const std::vector<int>& image) const;
  // Same table on the algebra with the given generators inverted.
  BracketSpec localized(const std::vector<int>& inverted) const;

  friend bool operator==(const BracketSpec& a, const BracketSpec& b) {
    return a.alg_ == b.alg_ && a.table_ == b.table_;
  }

 private:
  void build_letter_table();

  Algebra alg_;
  Table table_;
  std::size_t stride_ = 0;
  std::vector<Tensor2> letters_;
};

// a = a_minus * letter * a_plus with the letter at 1-based position alpha.
std::tuple<Word, Letter, Word> split_word(const Word& a, std::size_t alpha);
// Letters alpha..gamma (1-based, inclusive); the unit when alpha > gamma.
Word segment(const Word& a, std::size_t alpha, std::size_t gamma);

Tensor2 letter_bracket(const BracketSpec& spec, Letter x, Letter y);

// Accumulating kernels: add coeff * <<a,b>> (resp. coeff * {a,b}) for words a, b.
void accumulate_dbracket(const BracketSpec& spec, const Word& a, const Word& b, const Rational& coeff,
                         TermBuffer<Pair>& out);
void accumulate_mbracket(const BracketSpec& spec, const Word& a, const Word& b, const Rational& coeff,
                         TermBuffer<Word>& out);

Tensor2 dbracket(const BracketSpec& spec, const Element& a, const Element& b);
Element mbracket(const BracketSpec& spec, const Element& a, const Element& b);
// Letters are multiplied through one by one, so unreduced input such as v v^-1 is accepted.
Tensor2 dbracket_sequence(const BracketSpec& spec, const std::vector<Letter>& a, const std::vector<Letter>& b);

// <<a, u' (x) u''>>_L = <<a,u'>> (x) u''
Tensor3 tbracket_L(const BracketSpec& spec, const Element& a, const Tensor2& u);
// <<a, u' (x) u''>>_R = u' (x) <<a,u''>>
Tensor3 tbracket_R(const BracketSpec& spec, const Element& a, const Tensor2& u);
// <<u' (x) u'', a>>_L = <<u',a>> (x)_1 u''
Tensor3 tbracket_swapL(const BracketSpec& spec, const Tensor2& u, const Element& a);

Tensor3 djac(const BracketSpec& spec, const Element& a, const Element& b, const Element& c);
Element jacobiator(const BracketSpec& spec, const Element& a, const Element& b, const Element& c);

}  // namespace ncdb
