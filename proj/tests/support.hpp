#pragma once

#include <random>
#include <vector>

#include "ncdb/freealg.hpp"

namespace ncdb::testing {

inline std::vector<Letter> random_letters(std::mt19937_64& rng, const Algebra& alg, std::size_t len) {
  std::vector<Letter> letters = alg.letters();
  std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
  std::vector<Letter> out;
  for (std::size_t i = 0; i < len; ++i) out.push_back(letters[pick(rng)]);
  return out;
}

inline Word random_word(std::mt19937_64& rng, const Algebra& alg, std::size_t max_len, std::size_t min_len = 0) {
  std::uniform_int_distribution<std::size_t> len(min_len, max_len);
  for (;;) {
    auto l = random_letters(rng, alg, len(rng));
    Word w = Word::from_letters(l);
    if (w.degree() >= min_len) return w;
  }
}

inline Rational random_coeff(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  int n = 0;
  while (n == 0) n = num(rng);
  return Rational(n, den(rng));
}

inline Element random_element(std::mt19937_64& rng, const Algebra& alg, std::size_t max_len, int terms = 3) {
  Element x;
  for (int i = 0; i < terms; ++i) x += monomial(random_word(rng, alg, max_len), random_coeff(rng));
  return x;
}

inline Tensor2 random_tensor(std::mt19937_64& rng, const Algebra& alg, std::size_t max_len, int terms = 3) {
  Tensor2 u;
  for (int i = 0; i < terms; ++i)
    u += tensor(random_word(rng, alg, max_len), random_word(rng, alg, max_len), random_coeff(rng));
  return u;
}

// Positive word from 1-based generator indices, 1 for x1 and -1 for x1^-1.
inline Word w(std::initializer_list<int> gens_1based) {
  Word out;
  for (int g : gens_1based) out.append(Letter(g > 0 ? g - 1 : -g - 1, g < 0));
  return out;
}

inline Element e(std::initializer_list<int> gens_1based, Rational c = Rational(1)) { return monomial(w(gens_1based), c); }

}  // namespace ncdb::testing

#include "ncdb/bracket.hpp"

namespace ncdb::testing {

struct Entry {
  int i, j;  // 1-based
  Tensor2 value;
};

inline BracketSpec make_spec(const Algebra& alg, const std::vector<Entry>& entries) {
  BracketSpec::Table t;
  for (const auto& en : entries) t[{en.i - 1, en.j - 1}] += en.value;
  return BracketSpec(alg, t);
}

inline Tensor2 t2(std::initializer_list<int> a, std::initializer_list<int> b, Rational c = Rational(1)) {
  return tensor(w(a), w(b), std::move(c));
}
inline Tensor3 t3(std::initializer_list<int> a, std::initializer_list<int> b, std::initializer_list<int> c,
                  Rational k = Rational(1)) {
  return tensor(w(a), w(b), w(c), std::move(k));
}

// Tables typed in by hand.
inline BracketSpec spec_one() {
  return make_spec(Algebra(3), {{1, 2, t2({2, 1}, {}, -1)},
                                {2, 1, t2({1, 2}, {})},
                                {2, 3, t2({2}, {3}, -1)},
                                {3, 2, t2({2}, {3})},
                                {3, 1, t2({}, {3, 1}, -1)},
                                {1, 3, t2({}, {1, 3})}});
}

inline BracketSpec spec_two() {
  return make_spec(Algebra(3), {{1, 2, t2({1}, {2}, -1)},
                                {2, 1, t2({1}, {2})},
                                {2, 3, t2({3}, {2})},
                                {3, 2, t2({3}, {2}, -1)},
                                {3, 1, t2({1}, {3}) - t2({3}, {1})}});
}

inline BracketSpec spec_kontsevich() {
  return make_spec(Algebra(std::vector<std::string>{"v", "w"}), {{1, 2, t2({2, 1}, {}, -1)}, {2, 1, t2({1, 2}, {})}});
}

inline BracketSpec spec_cl3a(const std::array<int, 3>& a, const std::array<int, 3>& b) {
  auto pair = [&](int i, int j, int k) {
    // (v_i, v_j) with i<j uses the constants indexed by the third generator k
    int ak = a[k - 1], bk = b[k - 1];
    return std::vector<Entry>{{i, j, t2({i}, {j}, ak) - t2({j}, {i}, bk)},
                              {j, i, t2({i}, {j}, -1 + bk) + t2({j}, {i}, 1 - ak)}};
  };
  std::vector<Entry> all;
  for (auto [i, j, k] : {std::array<int, 3>{1, 2, 3}, {1, 3, 2}, {2, 3, 1}}) {
    auto p = pair(i, j, k);
    all.insert(all.end(), p.begin(), p.end());
  }
  return make_spec(Algebra(3, "v"), all);
}

}  // namespace ncdb::testing

namespace ncdb::testing {

// Random table whose entries are short tensors of total degree <= 2.
inline BracketSpec random_spec(std::mt19937_64& rng, const Algebra& alg, int terms = 2) {
  BracketSpec::Table t;
  Algebra free(alg.names());
  for (int i = 0; i < alg.generators(); ++i)
    for (int j = 0; j < alg.generators(); ++j)
      for (int k = 0; k < terms; ++k) {
        Word a = random_word(rng, free, 2);
        Word b = random_word(rng, free, 2 - a.degree());
        t[{i, j}] += tensor(a, b, random_coeff(rng));
      }
  return BracketSpec(alg, t);
}

}  // namespace ncdb::testing
