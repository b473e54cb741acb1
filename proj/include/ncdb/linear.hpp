#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "ncdb/rational.hpp"

namespace ncdb {

// Finite formal linear combination with exact rational coefficients. Terms are
// kept sorted by key with no zero coefficients, so equality is structural and
// iteration order is canonical.
template <class Key>
class Combination {
 public:
  using Term = std::pair<Key, Rational>;

  Combination() = default;
  explicit Combination(Key key, Rational coeff = Rational(1)) {
    if (!coeff.is_zero()) terms_.emplace_back(std::move(key), std::move(coeff));
  }

  // Sorts, merges equal keys and drops zeros.
  static Combination from_terms(std::vector<Term> terms) {
    Combination c;
    c.terms_ = normalize(std::move(terms));
    return c;
  }

  const std::vector<Term>& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rational coeff(const Key& key) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                               [](const Term& t, const Key& k) { return t.first < k; });
    if (it != terms_.end() && it->first == key) return it->second;
    return Rational(0);
  }

  Combination& operator+=(const Combination& rhs) { return add_scaled(rhs, Rational(1)); }
  Combination& operator-=(const Combination& rhs) { return add_scaled(rhs, Rational(-1)); }

  Combination& add_scaled(const Combination& rhs, const Rational& s) {
    if (s.is_zero() || rhs.is_zero()) return *this;
    std::vector<Term> out;
    out.reserve(terms_.size() + rhs.terms_.size());
    auto a = terms_.begin();
    auto b = rhs.terms_.begin();
    while (a != terms_.end() || b != rhs.terms_.end()) {
      if (b == rhs.terms_.end() || (a != terms_.end() && a->first < b->first)) {
        out.push_back(std::move(*a++));
      } else if (a == terms_.end() || b->first < a->first) {
        out.emplace_back(b->first, b->second * s);
        ++b;
      } else {
        Rational c = a->second + b->second * s;
        if (!c.is_zero()) out.emplace_back(std::move(a->first), std::move(c));
        ++a;
        ++b;
      }
    }
    terms_ = std::move(out);
    return *this;
  }

  Combination& operator*=(const Rational& s) {
    if (s.is_zero()) {
      terms_.clear();
    } else if (!s.is_one()) {
      for (auto& t : terms_) t.second *= s;
    }
    return *this;
  }

  friend Combination operator+(Combination a, const Combination& b) { return a += b; }
  friend Combination operator-(Combination a, const Combination& b) { return a -= b; }
  friend Combination operator*(Combination a, const Rational& s) { return a *= s; }
  friend Combination operator*(const Rational& s, Combination a) { return a *= s; }
  friend Combination operator-(Combination a) {
    for (auto& t : a.terms_) t.second = -t.second;
    return a;
  }
  friend bool operator==(const Combination&, const Combination&) = default;

  template <class F>
  Combination map_keys(F&& f) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [k, c] : terms_) out.emplace_back(f(k), c);
    return from_terms(std::move(out));
  }

  static std::vector<Term> normalize(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
      if (!out.empty() && out.back().first == t.first) {
        out.back().second += t.second;
      } else {
        if (!out.empty() && out.back().second.is_zero()) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && out.back().second.is_zero()) out.pop_back();
    return out;
  }

 private:
  std::vector<Term> terms_;
};

// Append-only accumulator; collapses to a Combination in one sort-and-merge pass.
template <class Key>
class TermBuffer {
 public:
  using Term = typename Combination<Key>::Term;

  void add(Key key, Rational coeff) {
    if (!coeff.is_zero()) terms_.emplace_back(std::move(key), std::move(coeff));
  }
  void add(const Combination<Key>& c, const Rational& scale = Rational(1)) {
    if (scale.is_zero()) return;
    for (const auto& [k, v] : c) terms_.emplace_back(k, scale.is_one() ? v : v * scale);
  }
  bool empty() const { return terms_.empty(); }
  Combination<Key> finish() {
    auto out = Combination<Key>::from_terms(std::move(terms_));
    terms_.clear();
    return out;
  }

 private:
  std::vector<Term> terms_;
};

}  // namespace ncdb
