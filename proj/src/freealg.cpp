#include "ncdb/freealg.hpp"

#include <algorithm>

namespace ncdb {

Element operator*(const Element& x, const Element& y) {
  TermBuffer<Word> buf;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) buf.add(a * b, ca * cb);
  return buf.finish();
}

Tensor2 t2_mul(const Tensor2& u, const Tensor2& w) {
  TermBuffer<Pair> buf;
  for (const auto& [a, ca] : u)
    for (const auto& [b, cb] : w) buf.add(Pair{a[0] * b[0], a[1] * b[1]}, ca * cb);
  return buf.finish();
}

Tensor3 t3_mul(const Tensor3& u, const Tensor3& w) {
  TermBuffer<Triple> buf;
  for (const auto& [a, ca] : u)
    for (const auto& [b, cb] : w) buf.add(Triple{a[0] * b[0], a[1] * b[1], a[2] * b[2]}, ca * cb);
  return buf.finish();
}

Tensor2 tensor_product(const Element& x, const Element& y) {
  TermBuffer<Pair> buf;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) buf.add(Pair{a, b}, ca * cb);
  return buf.finish();
}

Tensor2 outer_act(const Element& c1, const Tensor2& u, const Element& c2) {
  TermBuffer<Pair> buf;
  for (const auto& [l, cl] : c1)
    for (const auto& [t, ct] : u)
      for (const auto& [r, cr] : c2) buf.add(Pair{l * t[0], t[1] * r}, cl * ct * cr);
  return buf.finish();
}

Tensor2 inner_act(const Element& c1, const Tensor2& u, const Element& c2) {
  TermBuffer<Pair> buf;
  for (const auto& [l, cl] : c1)
    for (const auto& [t, ct] : u)
      for (const auto& [r, cr] : c2) buf.add(Pair{t[0] * r, l * t[1]}, cl * ct * cr);
  return buf.finish();
}

Tensor2 flip(const Tensor2& u) {
  return u.map_keys([](const Pair& p) { return Pair{p[1], p[0]}; });
}

Tensor3 otimes1_left(const Tensor2& u, const Element& c) {
  TermBuffer<Triple> buf;
  for (const auto& [t, ct] : u)
    for (const auto& [w, cw] : c) buf.add(Triple{t[0], w, t[1]}, ct * cw);
  return buf.finish();
}

Tensor3 otimes1_right(const Element& c, const Tensor2& u) { return otimes1_left(u, c); }

Tensor3 otimes_left(const Tensor2& u, const Element& c) {
  TermBuffer<Triple> buf;
  for (const auto& [t, ct] : u)
    for (const auto& [w, cw] : c) buf.add(Triple{t[0], t[1], w}, ct * cw);
  return buf.finish();
}

Tensor3 otimes_right(const Element& c, const Tensor2& u) {
  TermBuffer<Triple> buf;
  for (const auto& [w, cw] : c)
    for (const auto& [t, ct] : u) buf.add(Triple{w, t[0], t[1]}, cw * ct);
  return buf.finish();
}

Element m2(const Tensor2& u) {
  TermBuffer<Word> buf;
  for (const auto& [t, c] : u) buf.add(t[0] * t[1], c);
  return buf.finish();
}

Element m3(const Tensor3& w) {
  TermBuffer<Word> buf;
  for (const auto& [t, c] : w) buf.add(t[0] * t[1] * t[2], c);
  return buf.finish();
}

Word cyclic_normal_form(const Word& w) {
  std::size_t lo = 0, hi = w.degree();
  while (hi - lo >= 2 && w[lo] == w[hi - 1].inverted()) {
    ++lo;
    --hi;
  }
  Word core = w.subword(lo, hi - lo);
  Word best = core;
  for (std::size_t s = 1; s < core.degree(); ++s) {
    Word r = core.rotated(s);
    if (r < best) best = std::move(r);
  }
  return best;
}

Element reduce_mod_commutators(const Element& x) {
  TermBuffer<Word> buf;
  for (const auto& [w, c] : x) buf.add(cyclic_normal_form(w), c);
  return buf.finish();
}

std::optional<std::size_t> degree(const Element& x) {
  if (x.is_zero()) return std::nullopt;
  std::size_t d = 0;
  for (const auto& [w, c] : x) d = std::max(d, w.degree());
  return d;
}

std::string render(const Algebra& alg, const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.degree(); ++i) {
    if (i) out += '*';
    Letter l = w[i];
    out += l.gen() < alg.generators() ? alg.name(l.gen()) : "?" + std::to_string(l.gen() + 1);
    if (l.inverse()) out += "^-1";
  }
  return out;
}

namespace {

template <std::size_t N>
std::string render_terms(const Algebra& alg, const std::vector<std::pair<std::array<Word, N>, Rational>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, c] : terms) {
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) out += '-';
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    first = false;
    for (std::size_t i = 0; i < N; ++i) {
      if (i) out += " (x) ";
      if (i == 0 && !mag.is_one()) {
        out += mag.to_string();
        if (!key[0].empty()) out += '*' + render(alg, key[0]);
      } else {
        out += render(alg, key[i]);
      }
    }
  }
  return out;
}

}  // namespace

std::string render(const Algebra& alg, const Element& x) {
  std::vector<std::pair<std::array<Word, 1>, Rational>> terms;
  for (const auto& [w, c] : x) terms.push_back({{w}, c});
  return render_terms<1>(alg, terms);
}

std::string render(const Algebra& alg, const Tensor2& u) { return render_terms<2>(alg, u.terms()); }
std::string render(const Algebra& alg, const Tensor3& w) { return render_terms<3>(alg, w.terms()); }

}  // namespace ncdb
