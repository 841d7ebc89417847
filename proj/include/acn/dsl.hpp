#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "acn/errors.hpp"
#include "acn/model.hpp"

namespace acn {

// Line-oriented reaction-system format (.acn):
//
//   # comment
//   food: f1 f2
//   stimulus: s
//   derived: x                       (only for derived ids no reaction produces)
//   reaction R1: f1 + f2 -> d1 cat s, d2
//
// Ids match [A-Za-z_][A-Za-z0-9_]*. Any id produced by a reaction is a
// derived element. The `cat` clause may be omitted for uncatalysed reactions.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& detail() const { return detail_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string detail_;
};

struct SystemDocument {
  std::vector<std::string> lines;
  ReactionSystem system;
  // 1-based line of each declaration
  std::map<std::string, std::size_t> element_lines;
  std::map<std::string, std::size_t> reaction_lines;
};

SystemDocument parse_document(std::string_view text);
ReactionSystem parse_system(std::string_view text);

// Canonical text: food line, stimulus line, reactions sorted by id.
std::string serialize_system(const ReactionSystem& system);

}  // namespace acn
