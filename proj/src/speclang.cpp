#include "ncdb/speclang.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace ncdb {

ParseError::ParseError(int line, int column, const std::string& message, std::string expected)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message +
                         (expected.empty() ? "" : " (expected " + expected + ")")),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

SpecDocument SpecDocument::from_spec(const BracketSpec& spec, std::optional<WeightVector> weight, std::string name) {
  SpecDocument d;
  d.name = std::move(name);
  std::vector<int> inv = spec.algebra().inverted();
  std::sort(inv.begin(), inv.end());
  d.algebra = Algebra(spec.algebra().names(), inv);
  if (weight && weight->size() != static_cast<std::size_t>(d.algebra.generators()))
    throw std::invalid_argument("weight length does not match the generator count");
  d.weight = std::move(weight);
  d.entries = spec.table();
  return d;
}

namespace {

enum class Tok { Ident, Number, String, LBrace, RBrace, Comma, Eq, Semi, Plus, Minus, Star, Caret, Tensor, End };

struct Token {
  Tok kind;
  std::string text;
  int line, col;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::Ident: return "'" + t.text + "'";
    case Tok::Number: return "number " + t.text;
    case Tok::String: return "string";
    case Tok::End: return "end of input";
    case Tok::Tensor: return "'(x)'";
    default: return "'" + t.text + "'";
  }
}

bool is_keyword(std::string_view s) { return s == "name" || s == "algebra" || s == "weight" || s == "bracket" || s == "inv"; }

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run(std::vector<std::string>& comments) {
    std::vector<Token> out;
    for (;;) {
      skip(comments);
      int l = line_, c = col_;
      if (pos_ >= src_.size()) {
        out.push_back({Tok::End, "", l, c});
        return out;
      }
      char ch = src_[pos_];
      auto single = [&](Tok k) {
        advance();
        out.push_back({k, std::string(1, ch), l, c});
      };
      if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
        std::size_t start = pos_;
        while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) advance();
        out.push_back({Tok::Ident, std::string(src_.substr(start, pos_ - start)), l, c});
      } else if (std::isdigit(static_cast<unsigned char>(ch))) {
        std::size_t start = pos_;
        digits();
        if (pos_ < src_.size() && src_[pos_] == '/') {
          advance();
          if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
            throw ParseError(line_, col_, "malformed rational literal", "denominator digits");
          digits();
        }
        out.push_back({Tok::Number, std::string(src_.substr(start, pos_ - start)), l, c});
      } else if (ch == '"') {
        advance();
        std::string s;
        for (;;) {
          if (pos_ >= src_.size() || src_[pos_] == '\n') throw ParseError(l, c, "unterminated string", "'\"'");
          char x = src_[pos_];
          advance();
          if (x == '"') break;
          if (x == '\\') {
            if (pos_ >= src_.size() || (src_[pos_] != '"' && src_[pos_] != '\\'))
              throw ParseError(line_, col_, "unknown escape", "'\\\"' or '\\\\'");
            x = src_[pos_];
            advance();
          }
          s += x;
        }
        out.push_back({Tok::String, s, l, c});
      } else if (ch == '(') {
        if (src_.substr(pos_, 3) != "(x)") throw ParseError(l, c, "unexpected '('", "'(x)'");
        for (int i = 0; i < 3; ++i) advance();
        out.push_back({Tok::Tensor, "(x)", l, c});
      } else if (src_.substr(pos_, 3) == "\xE2\x8A\x97") {  // U+2297
        for (int i = 0; i < 3; ++i) advance();
        out.push_back({Tok::Tensor, "(x)", l, c});
      } else {
        switch (ch) {
          case '{': single(Tok::LBrace); break;
          case '}': single(Tok::RBrace); break;
          case ',': single(Tok::Comma); break;
          case '=': single(Tok::Eq); break;
          case ';': single(Tok::Semi); break;
          case '+': single(Tok::Plus); break;
          case '-': single(Tok::Minus); break;
          case '*': single(Tok::Star); break;
          case '^': single(Tok::Caret); break;
          default: throw ParseError(l, c, "unexpected character '" + std::string(1, ch) + "'");
        }
      }
    }
  }

 private:
  void advance() {
    unsigned char ch = static_cast<unsigned char>(src_[pos_++]);
    if (ch == '\n') {
      ++line_;
      col_ = 1;
    } else if ((ch & 0xC0) != 0x80) {
      ++col_;
    }
  }
  void digits() {
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) advance();
  }
  void skip(std::vector<std::string>& comments) {
    while (pos_ < src_.size()) {
      char ch = src_[pos_];
      if (ch == '#') {
        std::size_t start = pos_ + 1;
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
        std::string text(src_.substr(start, pos_ - start));
        while (!text.empty() && (text.back() == '\r' || text.back() == ' ' || text.back() == '\t')) text.pop_back();
        comments.push_back(std::move(text));
      } else if (std::isspace(static_cast<unsigned char>(ch))) {
        advance();
      } else {
        return;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view text) { toks_ = Lexer(text).run(res_.doc.comments); }

  ParseResult run() {
    if (peek().kind == Tok::End) fail("empty document", "a block");
    std::set<std::string> seen;
    bool have_algebra = false;
    while (peek().kind != Tok::End) {
      const Token& t = peek();
      if (t.kind != Tok::Ident || (t.text != "name" && t.text != "algebra" && t.text != "weight" && t.text != "bracket"))
        fail("unexpected " + describe(t), "'name', 'algebra', 'weight' or 'bracket'");
      if (!seen.insert(t.text).second) fail("duplicate '" + t.text + "' block");
      if (t.text != "name" && t.text != "algebra" && !have_algebra) fail("'" + t.text + "' block before 'algebra'", "'algebra'");
      std::string kw = take().text;
      if (kw == "name") {
        const Token& n = peek();
        if (n.kind != Tok::String && (n.kind != Tok::Ident || is_keyword(n.text))) fail("unexpected " + describe(n), "a name");
        res_.doc.name = take().text;
        expect(Tok::Semi, "';'");
      } else if (kw == "algebra") {
        algebra();
        have_algebra = true;
      } else if (kw == "weight") {
        weight();
      } else {
        while (peek().kind == Tok::LBrace) entry();
      }
    }
    if (!have_algebra) fail("document has no 'algebra' block", "'algebra'");
    return std::move(res_);
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  Token take() { return toks_[i_ == toks_.size() - 1 ? i_ : i_++]; }
  [[noreturn]] void fail(const std::string& msg, const std::string& expected = {}) const {
    throw ParseError(peek().line, peek().col, msg, expected);
  }
  [[noreturn]] static void fail_at(const Token& t, const std::string& msg, const std::string& expected = {}) {
    throw ParseError(t.line, t.col, msg, expected);
  }
  Token expect(Tok k, const std::string& what) {
    if (peek().kind != k) fail("unexpected " + describe(peek()), what);
    return take();
  }

  void algebra() {
    std::vector<std::string> names;
    std::vector<int> inv;
    while (peek().kind == Tok::Ident) {
      bool invertible = false;
      if (peek().text == "inv") {
        take();
        invertible = true;
      }
      Token n = expect(Tok::Ident, "a generator name");
      if (is_keyword(n.text)) fail_at(n, "'" + n.text + "' is a keyword", "a generator name");
      if (std::find(names.begin(), names.end(), n.text) != names.end())
        fail_at(n, "generator '" + n.text + "' declared twice");
      if (invertible) inv.push_back(static_cast<int>(names.size()));
      names.push_back(n.text);
    }
    if (names.empty()) fail("unexpected " + describe(peek()), "a generator name");
    expect(Tok::Semi, "';'");
    res_.doc.algebra = Algebra(names, inv);
  }

  Rational rational_literal() {
    bool neg = false;
    if (peek().kind == Tok::Minus || peek().kind == Tok::Plus) neg = take().kind == Tok::Minus;
    Token n = expect(Tok::Number, "a rational");
    Rational q = number(n);
    return neg ? -q : q;
  }

  static Rational number(const Token& n) {
    auto slash = n.text.find('/');
    if (slash != std::string::npos && n.text.find_first_not_of('0', slash + 1) == std::string::npos)
      fail_at(n, "zero denominator");
    return Rational::parse(n.text);
  }

  void weight() {
    WeightVector w;
    while (peek().kind != Tok::Semi) w.push_back(rational_literal());
    Token semi = take();
    if (w.size() != static_cast<std::size_t>(res_.doc.algebra.generators()))
      fail_at(semi, "weight has " + std::to_string(w.size()) + " entries for " +
                        std::to_string(res_.doc.algebra.generators()) + " generators");
    res_.doc.weight = std::move(w);
  }

  int generator(const Token& t) const {
    auto g = res_.doc.algebra.find(t.text);
    if (!g) fail_at(t, "undeclared generator '" + t.text + "'", "a declared generator");
    return *g;
  }

  void entry() {
    Token open = take();
    int i = generator(expect(Tok::Ident, "a generator name"));
    expect(Tok::Comma, "','");
    int j = generator(expect(Tok::Ident, "a generator name"));
    expect(Tok::RBrace, "'}'");
    expect(Tok::Eq, "'='");
    Tensor2 value;
    bool first = true;
    for (;;) {
      Rational sign(1);
      if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
        sign = take().kind == Tok::Minus ? Rational(-1) : Rational(1);
      } else if (!first) {
        break;
      }
      first = false;
      auto [c1, w1] = monomial();
      if (peek().kind == Tok::Tensor) {
        take();
        auto [c2, w2] = monomial();
        value += tensor(w1, w2, sign * c1 * c2);
      } else if (!(c1.is_zero() && w1.empty())) {
        fail("unexpected " + describe(peek()), "'(x)'");
      }
    }
    expect(Tok::Semi, "';'");
    auto key = std::make_pair(i, j);
    if (res_.doc.entries.count(key))
      fail_at(open, "duplicate entry {" + res_.doc.algebra.name(i) + "," + res_.doc.algebra.name(j) + "}");
    bool quadratic = true;
    for (const auto& [p, c] : value) quadratic = quadratic && p[0].degree() + p[1].degree() == 2;
    if (!quadratic)
      res_.warnings.push_back({open.line, open.col,
                               "entry {" + res_.doc.algebra.name(i) + "," + res_.doc.algebra.name(j) + "} is not quadratic"});
    if (!value.is_zero()) res_.doc.entries.emplace(key, std::move(value));
  }

  std::pair<Rational, Word> monomial() {
    Rational c(1);
    std::vector<Letter> letters;
    for (;;) {
      const Token& t = peek();
      if (t.kind == Tok::Number) {
        c *= number(take());
      } else if (t.kind == Tok::Ident && !is_keyword(t.text)) {
        Token g = take();
        int gen = generator(g);
        long long e = 1;
        if (peek().kind == Tok::Caret) {
          take();
          bool neg = false;
          if (peek().kind == Tok::Minus) {
            take();
            neg = true;
          }
          Token n = expect(Tok::Number, "an integer exponent");
          if (n.text.find('/') != std::string::npos || n.text.size() > 6) fail_at(n, "bad exponent", "an integer");
          e = std::stoll(n.text) * (neg ? -1 : 1);
        }
        if (e < 0 && !res_.doc.algebra.invertible(gen))
          fail_at(g, "generator '" + g.text + "' is not marked inv", "an invertible generator");
        for (long long k = 0; k < (e < 0 ? -e : e); ++k) letters.emplace_back(gen, e < 0);
      } else {
        fail("unexpected " + describe(t), "a number or a generator");
      }
      if (peek().kind != Tok::Star) break;
      take();
    }
    return {c, Word::from_letters(letters)};
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
  ParseResult res_;
};

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

ParseResult parse_document(std::string_view text) {
  return Parser(text).run();
}

std::string render(const SpecDocument& doc) {
  std::string out;
  for (const auto& c : doc.comments) out += "#" + c + "\n";
  if (!doc.name.empty()) out += "name " + quoted(doc.name) + ";\n";
  const Algebra& alg = doc.algebra;
  out += "algebra";
  for (int g = 0; g < alg.generators(); ++g) out += (alg.invertible(g) ? " inv " : " ") + alg.name(g);
  out += ";\n";
  if (doc.weight) {
    out += "weight";
    for (const auto& x : *doc.weight) out += " " + x.to_string();
    out += ";\n";
  }
  out += "bracket\n";
  for (const auto& [key, value] : doc.entries)
    out += "  {" + alg.name(key.first) + "," + alg.name(key.second) + "} = " + render(alg, value) + ";\n";
  return out;
}

}  // namespace ncdb
