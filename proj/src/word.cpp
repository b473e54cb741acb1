#include "ncdb/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncdb {

Algebra::Algebra(int generators, std::string_view prefix) {
  if (generators < 0 || generators > Letter::kMaxGenerators)
    throw std::invalid_argument("generator count out of range");
  names_.reserve(static_cast<std::size_t>(generators));
  for (int g = 0; g < generators; ++g) names_.push_back(std::string(prefix) + std::to_string(g + 1));
}

Algebra::Algebra(std::vector<std::string> names, std::vector<int> inverted)
    : names_(std::move(names)), inverted_(std::move(inverted)) {
  if (generators() > Letter::kMaxGenerators) throw std::invalid_argument("too many generators");
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (names_[i] == names_[j]) throw std::invalid_argument("duplicate generator name '" + names_[i] + "'");
  for (std::size_t i = 0; i < inverted_.size(); ++i) {
    if (inverted_[i] < 0 || inverted_[i] >= generators())
      throw std::invalid_argument("inverted generator index out of range");
    for (std::size_t j = 0; j < i; ++j)
      if (inverted_[i] == inverted_[j]) throw std::invalid_argument("generator inverted twice");
  }
}

std::optional<int> Algebra::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return std::nullopt;
}

bool Algebra::invertible(int gen) const {
  return std::find(inverted_.begin(), inverted_.end(), gen) != inverted_.end();
}

std::vector<Letter> Algebra::letters() const {
  std::vector<Letter> out;
  for (int g = 0; g < generators(); ++g) out.emplace_back(g, false);
  for (int g : inverted_) out.emplace_back(g, true);
  return out;
}

Word Word::from_letters(std::span<const Letter> letters) {
  Word w;
  w.letters_.reserve(letters.size());
  for (Letter l : letters) w.append(l);
  return w;
}

Word Word::from_gens(std::initializer_list<int> gens) {
  Word w;
  for (int g : gens) w.letters_.push_back(static_cast<char>(Letter(g, false).code()));
  return w;
}

std::vector<Letter> Word::letters() const {
  std::vector<Letter> out;
  out.reserve(degree());
  for (std::size_t i = 0; i < degree(); ++i) out.push_back((*this)[i]);
  return out;
}

Word& Word::append(Letter l) {
  if (!letters_.empty() && back() == l.inverted())
    letters_.pop_back();
  else
    letters_.push_back(static_cast<char>(l.code()));
  return *this;
}

Word& Word::append(const Word& w) {
  std::size_t k = 0;
  while (k < w.degree() && !empty() && back() == w[k].inverted()) {
    letters_.pop_back();
    ++k;
  }
  letters_.append(w.letters_, k, std::string::npos);
  return *this;
}

Word& Word::prepend(const Word& w) {
  Word out = w;
  out.append(*this);
  *this = std::move(out);
  return *this;
}

Word Word::subword(std::size_t pos, std::size_t len) const {
  if (pos > degree() || len > degree() - pos) throw std::out_of_range("subword range");
  Word w;
  w.letters_ = letters_.substr(pos, len);
  return w;
}

Word Word::rotated(std::size_t shift) const {
  if (empty()) return *this;
  shift %= degree();
  Word w;
  w.letters_ = letters_.substr(shift) + letters_.substr(0, shift);
  return w;
}

bool Word::valid_for(const Algebra& alg) const {
  for (std::size_t i = 0; i < degree(); ++i)
    if (!alg.admits((*this)[i])) return false;
  for (std::size_t i = 1; i < degree(); ++i)
    if ((*this)[i] == (*this)[i - 1].inverted()) return false;
  return true;
}

std::vector<Word> enumerate_words(const Algebra& alg, int max_degree) {
  std::vector<Letter> letters = alg.letters();
  std::sort(letters.begin(), letters.end());
  std::vector<Word> out;
  std::vector<Word> frontier{Word()};
  for (int deg = 1; deg <= max_degree; ++deg) {
    std::vector<Word> next;
    for (const Word& w : frontier)
      for (Letter l : letters) {
        if (!w.empty() && w.back() == l.inverted()) continue;
        Word x = w;
        x.append(l);
        next.push_back(std::move(x));
      }
    // Frontier words are sorted and letters ascend, so next is already deglex-sorted.
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

}  // namespace ncdb
