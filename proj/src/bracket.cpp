#include "ncdb/bracket.hpp"

#include <stdexcept>

namespace ncdb {

std::vector<Rational> letter_weights(const Algebra& alg, const WeightVector& w) {
  const auto d = static_cast<std::size_t>(alg.generators());
  const auto& inv = alg.inverted();
  if (w.size() != d && w.size() != d + inv.size()) throw std::invalid_argument("weight vector length mismatch");
  std::vector<Rational> out(2 * d);
  for (std::size_t g = 0; g < d; ++g) {
    out[2 * g] = w[g];
    out[2 * g + 1] = -w[g];
  }
  if (w.size() == d + inv.size())
    for (std::size_t k = 0; k < inv.size(); ++k) out[2 * static_cast<std::size_t>(inv[k]) + 1] = w[d + k];
  return out;
}

WeightVector extended_weight(const Algebra& alg, const WeightVector& base) {
  if (base.size() != static_cast<std::size_t>(alg.generators())) throw std::invalid_argument("weight vector length mismatch");
  WeightVector out = base;
  for (int g : alg.inverted()) out.push_back(-base[static_cast<std::size_t>(g)]);
  return out;
}

BracketSpec::BracketSpec(Algebra alg, Table table) : alg_(std::move(alg)) {
  for (auto& [key, value] : table) {
    auto [i, j] = key;
    if (i < 0 || j < 0 || i >= alg_.generators() || j >= alg_.generators())
      throw std::invalid_argument("bracket table entry on undeclared generator");
    for (const auto& [p, c] : value)
      if (!p[0].valid_for(alg_) || !p[1].valid_for(alg_))
        throw std::invalid_argument("bracket table entry uses a letter the algebra does not have");
    if (!value.is_zero()) table_.emplace(key, std::move(value));
  }
  build_letter_table();
}

const Tensor2& BracketSpec::entry(int i, int j) const { return letter(Letter(i, false), Letter(j, false)); }

void BracketSpec::build_letter_table() {
  stride_ = 2 * static_cast<std::size_t>(alg_.generators());
  letters_.assign(stride_ * stride_, Tensor2());
  for (const auto& [key, value] : table_)
    letters_[static_cast<std::size_t>(Letter(key.first, false).code()) * stride_ + Letter(key.second, false).code()] = value;
  auto slot = [&](Letter x, Letter y) -> Tensor2& { return letters_[static_cast<std::size_t>(x.code()) * stride_ + y.code()]; };
  for (int g : alg_.inverted()) {
    Letter ginv(g, true);
    Element vinv{Word(ginv)};
    // <<a, v^-1>> = -(v^-1 (x) 1) <<a,v>> (1 (x) v^-1)
    for (int h = 0; h < alg_.generators(); ++h) {
      Letter x(h, false);
      slot(x, ginv) = -outer_act(vinv, slot(x, Letter(g, false)), vinv);
    }
    // <<v^-1, a>> = -(1 (x) v^-1) <<v,a>> (v^-1 (x) 1)
    for (int h = 0; h < alg_.generators(); ++h) {
      Letter y(h, false);
      slot(ginv, y) = -inner_act(vinv, slot(Letter(g, false), y), vinv);
    }
  }
  // Both letters inverse: apply the inner rule to the already derived outer entries.
  for (int g : alg_.inverted()) {
    Letter ginv(g, true);
    Element vinv{Word(ginv)};
    for (int h : alg_.inverted()) {
      Letter hinv(h, true);
      slot(ginv, hinv) = -inner_act(vinv, slot(Letter(g, false), hinv), vinv);
    }
  }
}

BracketSpec BracketSpec::scaled(const Rational& s) const {
  Table t;
  for (const auto& [k, v] : table_) t.emplace(k, v * s);
  return BracketSpec(alg_, std::move(t));
}

BracketSpec BracketSpec::relabeled(const std::vector<int>& image) const {
  const int d = alg_.generators();
  if (static_cast<int>(image.size()) != d) throw std::invalid_argument("relabelling must cover every generator");
  std::vector<int> seen(static_cast<std::size_t>(d), 0);
  for (int g : image) {
    if (g < 0 || g >= d || seen[static_cast<std::size_t>(g)]++) throw std::invalid_argument("relabelling is not a permutation");
  }
  auto move = [&](const Word& w) {
    Word out;
    for (Letter l : w.letters()) out.append(Letter(image[static_cast<std::size_t>(l.gen())], l.inverse()));
    return out;
  };
  Table t;
  for (const auto& [k, v] : table_)
    t[{image[static_cast<std::size_t>(k.first)], image[static_cast<std::size_t>(k.second)]}] +=
        v.map_keys([&](const Pair& p) { return Pair{move(p[0]), move(p[1])}; });
  std::vector<int> inv;
  for (int g : alg_.inverted()) inv.push_back(image[static_cast<std::size_t>(g)]);
  return BracketSpec(Algebra(alg_.names()).with_inverted(inv), std::move(t));
}

BracketSpec BracketSpec::localized(const std::vector<int>& inverted) const {
  return BracketSpec(alg_.with_inverted(inverted), table_);
}

std::tuple<Word, Letter, Word> split_word(const Word& a, std::size_t alpha) {
  if (alpha < 1 || alpha > a.degree()) throw std::out_of_range("split position out of range");
  return {a.subword(0, alpha - 1), a[alpha - 1], a.subword(alpha, a.degree() - alpha)};
}

Word segment(const Word& a, std::size_t alpha, std::size_t gamma) {
  if (alpha < 1 || gamma < 1 || alpha > a.degree() || gamma > a.degree())
    throw std::out_of_range("segment position out of range");
  if (alpha > gamma) return Word();
  return a.subword(alpha - 1, gamma - alpha + 1);
}

Tensor2 letter_bracket(const BracketSpec& spec, Letter x, Letter y) {
  if (!spec.algebra().admits(x) || !spec.algebra().admits(y))
    throw std::invalid_argument("letter not available in the bracket's algebra");
  return spec.letter(x, y);
}

// Sum over letter positions: (b- (x) a-) <<x_alpha, y_beta>> (a+ (x) b+), i.e.
// t' (x) t'' contributes b- t' a+ (x) a- t'' b+.
void accumulate_dbracket(const BracketSpec& spec, const Word& a, const Word& b, const Rational& coeff,
                         TermBuffer<Pair>& out) {
  for (std::size_t i = 0; i < a.degree(); ++i) {
    for (std::size_t j = 0; j < b.degree(); ++j) {
      const Tensor2& t = spec.letter(a[i], b[j]);
      if (t.is_zero()) continue;
      Word am = a.subword(0, i), ap = a.subword(i + 1, a.degree() - i - 1);
      Word bm = b.subword(0, j), bp = b.subword(j + 1, b.degree() - j - 1);
      for (const auto& [p, c] : t) {
        Word left = bm * p[0];
        left.append(ap);
        Word right = am * p[1];
        right.append(bp);
        out.add(Pair{std::move(left), std::move(right)}, c * coeff);
      }
    }
  }
}

void accumulate_mbracket(const BracketSpec& spec, const Word& a, const Word& b, const Rational& coeff,
                         TermBuffer<Word>& out) {
  for (std::size_t i = 0; i < a.degree(); ++i) {
    for (std::size_t j = 0; j < b.degree(); ++j) {
      const Tensor2& t = spec.letter(a[i], b[j]);
      if (t.is_zero()) continue;
      Word am = a.subword(0, i), ap = a.subword(i + 1, a.degree() - i - 1);
      Word bm = b.subword(0, j), bp = b.subword(j + 1, b.degree() - j - 1);
      for (const auto& [p, c] : t) {
        Word w = bm * p[0];
        w.append(ap).append(am).append(p[1]).append(bp);
        out.add(std::move(w), c * coeff);
      }
    }
  }
}

Tensor2 dbracket(const BracketSpec& spec, const Element& a, const Element& b) {
  TermBuffer<Pair> buf;
  for (const auto& [x, cx] : a)
    for (const auto& [y, cy] : b) accumulate_dbracket(spec, x, y, cx * cy, buf);
  return buf.finish();
}

Element mbracket(const BracketSpec& spec, const Element& a, const Element& b) {
  TermBuffer<Word> buf;
  for (const auto& [x, cx] : a)
    for (const auto& [y, cy] : b) accumulate_mbracket(spec, x, y, cx * cy, buf);
  return buf.finish();
}

Tensor2 dbracket_sequence(const BracketSpec& spec, const std::vector<Letter>& a, const std::vector<Letter>& b) {
  for (Letter l : a)
    if (!spec.algebra().admits(l)) throw std::invalid_argument("letter not available in the bracket's algebra");
  for (Letter l : b)
    if (!spec.algebra().admits(l)) throw std::invalid_argument("letter not available in the bracket's algebra");
  auto prefix = [](const std::vector<Letter>& s, std::size_t n) {
    return Word::from_letters(std::span<const Letter>(s.data(), n));
  };
  auto suffix = [](const std::vector<Letter>& s, std::size_t from) {
    return Word::from_letters(std::span<const Letter>(s.data() + from, s.size() - from));
  };
  TermBuffer<Pair> buf;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      Word am = prefix(a, i), ap = suffix(a, i + 1);
      Word bm = prefix(b, j), bp = suffix(b, j + 1);
      for (const auto& [p, c] : spec.letter(a[i], b[j])) buf.add(Pair{bm * p[0] * ap, am * p[1] * bp}, c);
    }
  return buf.finish();
}

Tensor3 tbracket_L(const BracketSpec& spec, const Element& a, const Tensor2& u) {
  TermBuffer<Triple> out;
  for (const auto& [t, ct] : u) {
    TermBuffer<Pair> inner;
    for (const auto& [x, cx] : a) accumulate_dbracket(spec, x, t[0], cx * ct, inner);
    for (const auto& [p, c] : inner.finish()) out.add(Triple{p[0], p[1], t[1]}, c);
  }
  return out.finish();
}

Tensor3 tbracket_R(const BracketSpec& spec, const Element& a, const Tensor2& u) {
  TermBuffer<Triple> out;
  for (const auto& [t, ct] : u) {
    TermBuffer<Pair> inner;
    for (const auto& [x, cx] : a) accumulate_dbracket(spec, x, t[1], cx * ct, inner);
    for (const auto& [p, c] : inner.finish()) out.add(Triple{t[0], p[0], p[1]}, c);
  }
  return out.finish();
}

Tensor3 tbracket_swapL(const BracketSpec& spec, const Tensor2& u, const Element& a) {
  TermBuffer<Triple> out;
  for (const auto& [t, ct] : u) {
    TermBuffer<Pair> inner;
    for (const auto& [x, cx] : a) accumulate_dbracket(spec, t[0], x, cx * ct, inner);
    for (const auto& [p, c] : inner.finish()) out.add(Triple{p[0], t[1], p[1]}, c);
  }
  return out.finish();
}

Tensor3 djac(const BracketSpec& spec, const Element& a, const Element& b, const Element& c) {
  Tensor3 out = tbracket_L(spec, a, dbracket(spec, b, c));
  out -= tbracket_R(spec, b, dbracket(spec, a, c));
  out -= tbracket_swapL(spec, dbracket(spec, a, b), c);
  return out;
}

Element jacobiator(const BracketSpec& spec, const Element& a, const Element& b, const Element& c) {
  TermBuffer<Word> buf;
  for (const auto& [x, cx] : a)
    for (const auto& [w, cw] : mbracket(spec, b, c)) accumulate_mbracket(spec, x, w, cx * cw, buf);
  for (const auto& [y, cy] : b)
    for (const auto& [w, cw] : mbracket(spec, a, c)) accumulate_mbracket(spec, y, w, -(cy * cw), buf);
  for (const auto& [w, cw] : mbracket(spec, a, b))
    for (const auto& [z, cz] : c) accumulate_mbracket(spec, w, z, -(cw * cz), buf);
  return buf.finish();
}

}  // namespace ncdb
