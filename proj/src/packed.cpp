#include "packed.hpp"

#include <algorithm>
#include <numeric>

namespace ncdb::detail {

namespace {
constexpr std::int64_t kCoeffLimit = std::int64_t(1) << 24;

inline int nib_at(Packed x, int len, int i) { return static_cast<int>((x >> (4 * (len - 1 - i))) & 0xF); }
inline Packed prefix(Packed x, int len, int n) { return (len - n) >= 16 ? 0 : x >> (4 * (len - n)); }
}  // namespace

std::optional<Packed> pack(const Word& w) {
  if (w.degree() > 16) return std::nullopt;
  Packed x = 0;
  for (std::size_t i = 0; i < w.degree(); ++i) {
    unsigned nib = w[i].code() + 1u;
    if (nib > 15) return std::nullopt;
    x = (x << 4) | nib;
  }
  return x;
}

Word unpack(Packed x) {
  Word w;
  const int len = packed_len(x);
  for (int i = 0; i < len; ++i) w.append(Letter::from_code(static_cast<std::uint8_t>(nib_at(x, len, i) - 1)));
  return w;
}

std::optional<PackedSpec> PackedSpec::make(const BracketSpec& spec, int longest_input) {
  const Algebra& alg = spec.algebra();
  if (2 * alg.generators() > 15) return std::nullopt;
  PackedSpec ps;
  ps.reducing_ = !alg.is_free();
  ps.letters_.assign(256, {});
  const auto letters = alg.letters();

  mpz_class lcm = 1;
  int widest = 0;
  for (Letter x : letters)
    for (Letter y : letters)
      for (const auto& [p, c] : spec.letter(x, y)) {
        mpz_class den = c.to_mpq().get_den();
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
        widest = std::max(widest, static_cast<int>(p[0].degree() + p[1].degree()));
      }
  if (lcm > kCoeffLimit) return std::nullopt;
  // Longest word in {a,{b,c}} or {{a,b},c}.
  if (3 * longest_input + 2 * widest - 4 > 16) return std::nullopt;
  const Rational scale(static_cast<std::int64_t>(lcm.get_si()));

  for (Letter x : letters)
    for (Letter y : letters) {
      auto& slot = ps.letters_[(x.code() + 1u) * 16u + (y.code() + 1u)];
      for (const auto& [p, c] : spec.letter(x, y)) {
        Rational k = c * scale;
        auto iv = k.as_int64();
        if (!iv) return std::nullopt;
        std::int64_t v = *iv;
        if (v > kCoeffLimit || v < -kCoeffLimit) return std::nullopt;
        auto l = pack(p[0]), r = pack(p[1]);
        if (!l || !r) return std::nullopt;
        slot.push_back(Term{*l, *r, static_cast<int>(p[0].degree()), static_cast<int>(p[1].degree()), v});
      }
    }
  return ps;
}

Packed PackedSpec::concat(Packed x, Packed y) const {
  int ly = packed_len(y);
  if (reducing_) {
    while (x != 0 && y != 0) {
      unsigned last = static_cast<unsigned>(x & 0xF);
      unsigned first = static_cast<unsigned>((y >> (4 * (ly - 1))) & 0xF);
      if (((last - 1) ^ 1u) != first - 1) break;
      x >>= 4;
      --ly;
      y &= low_mask(ly);
    }
  }
  return ly >= 16 ? y : (x << (4 * ly)) | y;
}

template <class Emit>
void PackedSpec::each_mbracket_term(Packed a, Packed b, std::int64_t scale, Emit&& emit) const {
  const int la = packed_len(a), lb = packed_len(b);
  for (int i = 0; i < la; ++i) {
    const int na = nib_at(a, la, i);
    const Packed am = prefix(a, la, i), ap = a & low_mask(la - 1 - i);
    const int lap = la - 1 - i;
    for (int j = 0; j < lb; ++j) {
      const auto& terms = letters_[static_cast<std::size_t>(na) * 16u + static_cast<std::size_t>(nib_at(b, lb, j))];
      if (terms.empty()) continue;
      const Packed bm = prefix(b, lb, j), bp = b & low_mask(lb - 1 - j);
      const int lbp = lb - 1 - j;
      for (const Term& t : terms) {
        Packed w;
        if (reducing_) {
          w = concat(concat(concat(concat(concat(bm, t.left), ap), am), t.right), bp);
        } else {
          // Lengths are known, so plain shifts suffice.
          w = bm;
          w = (w << (4 * t.left_len)) | t.left;
          w = (w << (4 * lap)) | ap;
          w = (w << (4 * i)) | am;
          w = (w << (4 * t.right_len)) | t.right;
          w = (w << (4 * lbp)) | bp;
        }
        emit(w, t.coeff * scale);
      }
    }
  }
}

void PackedSpec::mbracket(Packed a, Packed b, std::int64_t scale,
                          std::vector<std::pair<Packed, std::int64_t>>& out) const {
  each_mbracket_term(a, b, scale, [&](Packed w, std::int64_t c) { out.emplace_back(w, c); });
}

namespace {

// Open addressing keyed by packed word; slots are invalidated by bumping a stamp.
class Accumulator {
 public:
  void reset() {
    if (++stamp_ == 0) {
      std::fill(stamps_.begin(), stamps_.end(), 0u);
      stamp_ = 1;
    }
    touched_.clear();
  }
  void add(Packed key, std::int64_t v) {
    if (2 * (touched_.size() + 1) > keys_.size()) grow();
    std::size_t i = slot(key);
    if (stamps_[i] != stamp_) {
      stamps_[i] = stamp_;
      keys_[i] = key;
      vals_[i] = v;
      touched_.push_back(i);
    } else {
      vals_[i] += v;
    }
  }
  bool any_nonzero() const {
    for (std::size_t i : touched_)
      if (vals_[i] != 0) return true;
    return false;
  }

 private:
  std::size_t slot(Packed key) const {
    std::size_t mask = keys_.size() - 1;
    std::size_t i = static_cast<std::size_t>((key * 0x9E3779B97F4A7C15ull) >> 20) & mask;
    while (stamps_[i] == stamp_ && keys_[i] != key) i = (i + 1) & mask;
    return i;
  }
  void grow() {
    std::vector<std::pair<Packed, std::int64_t>> live;
    for (std::size_t i : touched_) live.emplace_back(keys_[i], vals_[i]);
    std::size_t n = std::max<std::size_t>(1024, keys_.size() * 2);
    keys_.assign(n, 0);
    vals_.assign(n, 0);
    stamps_.assign(n, 0);
    stamp_ = 1;
    touched_.clear();
    for (const auto& [k, v] : live) add(k, v);
  }

  std::vector<Packed> keys_;
  std::vector<std::int64_t> vals_;
  std::vector<std::uint32_t> stamps_;
  std::uint32_t stamp_ = 1;
  std::vector<std::size_t> touched_;
};

}  // namespace

bool collapse_nonzero(std::vector<std::pair<Packed, std::int64_t>>& terms) {
  std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::size_t i = 0;
  while (i < terms.size()) {
    std::int64_t sum = 0;
    std::size_t j = i;
    for (; j < terms.size() && terms[j].first == terms[i].first; ++j) sum += terms[j].second;
    if (sum != 0) return true;
    i = j;
  }
  return false;
}

namespace {

std::vector<std::pair<Packed, std::int64_t>> merged(std::vector<std::pair<Packed, std::int64_t>> terms) {
  std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<std::pair<Packed, std::int64_t>> out;
  for (const auto& t : terms) {
    if (!out.empty() && out.back().first == t.first)
      out.back().second += t.second;
    else
      out.push_back(t);
    if (out.size() >= 2 && out[out.size() - 2].second == 0) out.erase(out.end() - 2);
  }
  if (!out.empty() && out.back().second == 0) out.pop_back();
  return out;
}

}  // namespace

bool packed_jacobi_scan(const BracketSpec& spec, const std::vector<Word>& words,
                        const std::function<bool(std::size_t, std::size_t, std::size_t)>& visit) {
  int longest = 0;
  std::vector<Packed> pw;
  for (const Word& w : words) {
    auto p = pack(w);
    if (!p) return false;
    pw.push_back(*p);
    longest = std::max(longest, static_cast<int>(w.degree()));
  }
  auto ps = PackedSpec::make(spec, longest);
  if (!ps) return false;
  const std::size_t n = words.size();
  std::vector<std::vector<std::pair<Packed, std::int64_t>>> pb(n * n);
  std::vector<std::pair<Packed, std::int64_t>> buf;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      buf.clear();
      ps->mbracket(pw[i], pw[j], 1, buf);
      pb[i * n + j] = merged(buf);
    }
  Accumulator acc;
  auto emit = [&](Packed w, std::int64_t c) { acc.add(w, c); };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        acc.reset();
        for (const auto& [x, k] : pb[b * n + c]) ps->each_mbracket_term(pw[a], x, k, emit);
        for (const auto& [x, k] : pb[a * n + c]) ps->each_mbracket_term(pw[b], x, -k, emit);
        for (const auto& [x, k] : pb[a * n + b]) ps->each_mbracket_term(x, pw[c], -k, emit);
        if (acc.any_nonzero() && !visit(a, b, c)) return true;
      }
  return true;
}

}  // namespace ncdb::detail
