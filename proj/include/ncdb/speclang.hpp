#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ncdb/bracket.hpp"

namespace ncdb {

// A bracket specification as written in a .ndb file. Inverted generators are
// kept in ascending order so that equal documents render identically.
struct SpecDocument {
  std::string name;
  std::vector<std::string> comments;  // text after '#', one per comment line
  Algebra algebra;
  std::optional<WeightVector> weight;  // one entry per generator
  BracketSpec::Table entries;          // never holds a zero tensor

  BracketSpec spec() const { return BracketSpec(algebra, entries); }
  static SpecDocument from_spec(const BracketSpec& spec, std::optional<WeightVector> weight = std::nullopt,
                                std::string name = {});

  friend bool operator==(const SpecDocument&, const SpecDocument&) = default;
};

struct Diagnostic {
  int line = 0, column = 0;
  std::string message;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message, std::string expected = {});
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& expected() const { return expected_; }

 private:
  int line_, column_;
  std::string expected_;
};

struct ParseResult {
  SpecDocument doc;
  std::vector<Diagnostic> warnings;  // informational, e.g. entries that are not quadratic
};

ParseResult parse_document(std::string_view text);
std::string render(const SpecDocument& doc);

// The ncdb command line. Exit 0 when every check passes, 1 when one fails,
// 2 on usage or parse errors.
int cli_main(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);
int cli_main(int argc, char** argv);

}  // namespace ncdb
