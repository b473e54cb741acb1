#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ncdb {

// A generator letter v_g or its inverse v_g^{-1}. Generators are 0-based here;
// renderings use the algebra's generator names.
class Letter {
 public:
  static constexpr int kMaxGenerators = 127;

  constexpr Letter() = default;
  constexpr Letter(int gen, bool inverse) : code_(static_cast<std::uint8_t>(gen * 2 + (inverse ? 1 : 0))) {}
  static constexpr Letter from_code(std::uint8_t code) {
    Letter l;
    l.code_ = code;
    return l;
  }

  constexpr int gen() const { return code_ >> 1; }
  constexpr bool inverse() const { return (code_ & 1) != 0; }
  constexpr int exponent() const { return inverse() ? -1 : 1; }
  constexpr std::uint8_t code() const { return code_; }
  constexpr Letter inverted() const { return from_code(static_cast<std::uint8_t>(code_ ^ 1)); }

  // Order: by generator, then +1 before -1.
  friend constexpr auto operator<=>(Letter, Letter) = default;

 private:
  std::uint8_t code_ = 0;
};

// Generator names plus the ordered list of generators that have been inverted
// (a Laurent localisation). An algebra with no inverted generators is free.
class Algebra {
 public:
  Algebra() = default;
  // Generators named x1..xd.
  explicit Algebra(int generators, std::string_view prefix = "x");
  explicit Algebra(std::vector<std::string> names, std::vector<int> inverted = {});

  int generators() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int gen) const { return names_.at(static_cast<std::size_t>(gen)); }
  std::optional<int> find(std::string_view name) const;

  bool invertible(int gen) const;
  const std::vector<int>& inverted() const { return inverted_; }
  bool is_free() const { return inverted_.empty(); }

  // Positive letters in generator order, then inverse letters in inversion order.
  std::vector<Letter> letters() const;
  bool admits(Letter l) const { return l.gen() < generators() && (!l.inverse() || invertible(l.gen())); }

  Algebra with_inverted(std::vector<int> inverted) const { return Algebra(names_, std::move(inverted)); }

  friend bool operator==(const Algebra&, const Algebra&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<int> inverted_;
};

// A reduced monomial: no letter is adjacent to its own inverse. The empty word
// is the unit 1. Letters are packed one per byte so short words stay inline.
class Word {
 public:
  Word() = default;
  explicit Word(Letter l) : letters_(1, static_cast<char>(l.code())) {}
  // Reduces the sequence (cancels adjacent inverse pairs).
  static Word from_letters(std::span<const Letter> letters);
  static Word from_letters(std::initializer_list<Letter> letters) {
    return from_letters(std::span<const Letter>(letters.begin(), letters.size()));
  }
  // Positive word v_{g1} v_{g2} ... from 0-based generator indices.
  static Word from_gens(std::initializer_list<int> gens);

  std::size_t degree() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return Letter::from_code(static_cast<std::uint8_t>(letters_[i])); }
  Letter front() const { return (*this)[0]; }
  Letter back() const { return (*this)[degree() - 1]; }
  std::vector<Letter> letters() const;

  // Appends with cancellation at the junction; both sides are already reduced.
  Word& append(Letter l);
  Word& append(const Word& w);
  Word& prepend(const Word& w);

  // Letters [pos, pos+len); a factor of a reduced word is reduced.
  Word subword(std::size_t pos, std::size_t len) const;
  Word rotated(std::size_t shift) const;

  bool valid_for(const Algebra& alg) const;
  const std::string& bytes() const { return letters_; }

  friend Word operator*(Word a, const Word& b) { return a.append(b); }
  friend bool operator==(const Word&, const Word&) = default;
  // Deglex: shorter words first, then lexicographic in letter order.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0) return c;
    int r = a.letters_.compare(b.letters_);
    return r <=> 0;
  }

 private:
  std::string letters_;
};

// All reduced words of degree 1..max_degree over the algebra's letters, in deglex order.
std::vector<Word> enumerate_words(const Algebra& alg, int max_degree);

}  // namespace ncdb

template <>
struct std::hash<ncdb::Word> {
  std::size_t operator()(const ncdb::Word& w) const noexcept { return std::hash<std::string>{}(w.bytes()); }
};
