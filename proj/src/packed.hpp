#pragma once

// Internal fast path for bounded-degree sweeps: words of at most 16 letters are
// packed four bits per letter into a uint64 (first letter most significant, so
// integer order is deglex), and a bracket table whose coefficients share a small
// common denominator is rescaled to integers.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ncdb/bracket.hpp"

namespace ncdb::detail {

using Packed = std::uint64_t;

inline int packed_len(Packed x) { return x == 0 ? 0 : (63 - __builtin_clzll(x)) / 4 + 1; }
inline Packed low_mask(int n) { return n >= 16 ? ~Packed(0) : (Packed(1) << (4 * n)) - 1; }

std::optional<Packed> pack(const Word& w);
Word unpack(Packed x);

class PackedSpec {
 public:
  struct Term {
    Packed left, right;
    int left_len, right_len;
    std::int64_t coeff;
  };

  // Fails (returns nothing) when letters, degrees or coefficients are out of range.
  static std::optional<PackedSpec> make(const BracketSpec& spec, int longest_input);

  // Adds scale * {a,b} into out.
  void mbracket(Packed a, Packed b, std::int64_t scale, std::vector<std::pair<Packed, std::int64_t>>& out) const;
  // Calls emit(word, coeff) for every term of scale * {a,b}, unmerged.
  template <class Emit>
  void each_mbracket_term(Packed a, Packed b, std::int64_t scale, Emit&& emit) const;

 private:
  Packed concat(Packed x, Packed y) const;

  bool reducing_ = false;
  std::vector<std::vector<Term>> letters_;  // by (code_x + 1) * 16 + (code_y + 1)
};

// Sorts, merges and reports whether anything nonzero remains.
bool collapse_nonzero(std::vector<std::pair<Packed, std::int64_t>>& terms);

// Visits every ordered triple of the given words whose jacobiator is nonzero,
// in lexicographic index order; the visitor returns false to stop. Returns false
// when the packed path cannot represent the computation.
bool packed_jacobi_scan(const BracketSpec& spec, const std::vector<Word>& words,
                        const std::function<bool(std::size_t, std::size_t, std::size_t)>& visit);

}  // namespace ncdb::detail
