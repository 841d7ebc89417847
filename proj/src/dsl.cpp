#include "acn/dsl.hpp"

#include <optional>
#include <set>
#include <sstream>

namespace acn {
namespace {

enum class Tok { Ident, Colon, Plus, Arrow, Comma };

struct Token {
  Tok kind;
  std::string text;
  std::size_t column;  // 1-based
};

bool ident_start(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; }
bool ident_char(char c) { return ident_start(c) || (c >= '0' && c <= '9'); }

std::vector<Token> lex(std::string_view line, std::size_t line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    const std::size_t col = i + 1;
    if (c == '#') break;
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
    } else if (ident_start(c)) {
      std::size_t j = i;
      while (j < line.size() && ident_char(line[j])) ++j;
      out.push_back({Tok::Ident, std::string(line.substr(i, j - i)), col});
      i = j;
    } else if (c == ':') {
      out.push_back({Tok::Colon, ":", col}), ++i;
    } else if (c == '+') {
      out.push_back({Tok::Plus, "+", col}), ++i;
    } else if (c == ',') {
      out.push_back({Tok::Comma, ",", col}), ++i;
    } else if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') {
      out.push_back({Tok::Arrow, "->", col}), i += 2;
    } else {
      throw ParseError(line_no, col, std::string("unexpected character '") + c + "'");
    }
  }
  return out;
}

struct Ref {
  std::string id;
  std::size_t line;
  std::size_t column;
};

struct PendingReaction {
  std::string id;
  std::size_t line;
  std::vector<Ref> reactants, products, catalysts;
};

class LineParser {
 public:
  LineParser(std::vector<Token> tokens, std::size_t line_no, std::size_t line_len)
      : toks_(std::move(tokens)), line_(line_no), end_col_(line_len + 1) {}

  bool done() const { return pos_ == toks_.size(); }
  const Token* peek() const { return done() ? nullptr : &toks_[pos_]; }

  const Token& expect(Tok kind, const char* what) {
    if (done() || toks_[pos_].kind != kind) {
      throw ParseError(line_, column(), std::string("expected ") + what);
    }
    return toks_[pos_++];
  }

  bool accept(Tok kind) {
    if (!done() && toks_[pos_].kind == kind) return ++pos_, true;
    return false;
  }

  bool accept_keyword(std::string_view word) {
    if (!done() && toks_[pos_].kind == Tok::Ident && toks_[pos_].text == word) return ++pos_, true;
    return false;
  }

  std::vector<Ref> id_list(Tok separator, const char* what) {
    std::vector<Ref> out;
    do {
      const auto& t = expect(Tok::Ident, what);
      out.push_back({t.text, line_, t.column});
    } while (accept(separator));
    return out;
  }

  std::vector<Ref> rest_as_ids() {
    std::vector<Ref> out;
    while (!done()) {
      const auto& t = expect(Tok::Ident, "element id");
      out.push_back({t.text, line_, t.column});
    }
    return out;
  }

  std::size_t column() const { return done() ? end_col_ : toks_[pos_].column; }
  std::size_t line() const { return line_; }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t end_col_;
};

void append_joined(std::ostringstream& os, const ElementSet& ids, std::string_view sep) {
  bool first = true;
  for (const auto& id : ids) {
    if (!first) os << sep;
    os << id;
    first = false;
  }
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : InputError(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      detail_(message) {}

SystemDocument parse_document(std::string_view text) {
  SystemDocument doc;
  {
    std::size_t start = 0;
    while (start <= text.size()) {
      const auto nl = text.find('\n', start);
      if (nl == std::string_view::npos) {
        if (start < text.size()) doc.lines.emplace_back(text.substr(start));
        break;
      }
      doc.lines.emplace_back(text.substr(start, nl - start));
      start = nl + 1;
    }
  }

  std::map<std::string, std::pair<ElementKind, Ref>> declared;
  std::optional<std::size_t> food_line, stimulus_line, derived_line;
  std::vector<PendingReaction> pending;
  std::set<std::string> reaction_ids;

  auto declare = [&](const std::vector<Ref>& ids, ElementKind kind) {
    for (const auto& r : ids) {
      if (declared.contains(r.id)) {
        throw ParseError(r.line, r.column, "duplicate element id '" + r.id + "'");
      }
      declared.emplace(r.id, std::pair{kind, r});
    }
  };

  for (std::size_t i = 0; i < doc.lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    LineParser p(lex(doc.lines[i], line_no), line_no, doc.lines[i].size());
    if (p.done()) continue;

    const std::size_t head_col = p.column();
    auto once = [&](std::optional<std::size_t>& slot, const char* what) {
      if (slot) {
        throw ParseError(line_no, head_col,
                         std::string("duplicate ") + what + " line (first at line " +
                             std::to_string(*slot) + ")");
      }
      slot = line_no;
    };

    if (p.accept_keyword("food")) {
      p.expect(Tok::Colon, "':' after 'food'");
      once(food_line, "food");
      auto ids = p.rest_as_ids();
      if (ids.empty()) throw ParseError(line_no, head_col, "empty foodset");
      declare(ids, ElementKind::Food);
    } else if (p.accept_keyword("stimulus")) {
      p.expect(Tok::Colon, "':' after 'stimulus'");
      once(stimulus_line, "stimulus");
      declare(p.rest_as_ids(), ElementKind::Stimulus);
    } else if (p.accept_keyword("derived")) {
      p.expect(Tok::Colon, "':' after 'derived'");
      once(derived_line, "derived");
      declare(p.rest_as_ids(), ElementKind::Derived);
    } else if (p.accept_keyword("reaction")) {
      const auto& id_tok = p.expect(Tok::Ident, "reaction id");
      if (!reaction_ids.insert(id_tok.text).second) {
        throw ParseError(line_no, id_tok.column, "duplicate reaction id '" + id_tok.text + "'");
      }
      PendingReaction r{id_tok.text, line_no, {}, {}, {}};
      p.expect(Tok::Colon, "':' after reaction id");
      r.reactants = p.id_list(Tok::Plus, "reactant id");
      p.expect(Tok::Arrow, "'->' or '+'");
      r.products = p.id_list(Tok::Plus, "product id");
      if (p.accept_keyword("cat")) r.catalysts = p.id_list(Tok::Comma, "catalyst id");
      if (!p.done()) throw ParseError(line_no, p.column(), "unexpected trailing input");
      pending.push_back(std::move(r));
    } else {
      throw ParseError(line_no, head_col,
                       "expected 'food:', 'stimulus:', 'derived:' or 'reaction'");
    }
  }

  if (!food_line) throw ParseError(1, 1, "empty foodset");

  // Products not declared elsewhere become derived elements.
  std::map<std::string, Ref> produced;
  for (const auto& r : pending) {
    for (const auto& ref : r.products) produced.emplace(ref.id, ref);
  }
  for (const auto& [id, entry] : declared) {
    doc.system.elements.emplace(id, entry.first);
    doc.element_lines.emplace(id, entry.second.line);
  }
  for (const auto& [id, ref] : produced) {
    if (doc.system.elements.emplace(id, ElementKind::Derived).second) {
      doc.element_lines.emplace(id, ref.line);
    }
  }

  for (const auto& r : pending) {
    Reaction out;
    out.id = r.id;
    auto resolve = [&](const std::vector<Ref>& refs, ElementSet& into, const char* role) {
      for (const auto& ref : refs) {
        if (!doc.system.elements.contains(ref.id)) {
          throw ParseError(ref.line, ref.column,
                           "unknown element '" + ref.id + "' in reaction " + r.id);
        }
        if (!into.insert(ref.id).second) {
          throw ParseError(ref.line, ref.column,
                           std::string("repeated ") + role + " '" + ref.id + "' in reaction " +
                               r.id);
        }
      }
    };
    resolve(r.reactants, out.reactants, "reactant");
    resolve(r.products, out.products, "product");
    resolve(r.catalysts, out.catalysts, "catalyst");
    doc.reaction_lines.emplace(r.id, r.line);
    doc.system.reactions.push_back(std::move(out));
  }

  if (auto violations = validate_system(doc.system); !violations.empty()) {
    const auto& v = violations.front();
    std::size_t line = 1;
    if (auto it = doc.reaction_lines.find(v.subject); it != doc.reaction_lines.end()) {
      line = it->second;
    } else if (auto el = doc.element_lines.find(v.subject); el != doc.element_lines.end()) {
      line = el->second;
    }
    std::string msg = v.message;
    if (v.subject != "system") msg += " in " + v.subject;
    if (!v.element.empty() && v.element != v.subject) msg += " ('" + v.element + "')";
    throw ParseError(line, 1, msg);
  }
  return doc;
}

ReactionSystem parse_system(std::string_view text) { return parse_document(text).system; }

std::string serialize_system(const ReactionSystem& system) {
  std::ostringstream os;
  os << "food: ";
  append_joined(os, system.foodset(), " ");
  os << '\n';

  if (const auto stimuli = system.stimuli(); !stimuli.empty()) {
    os << "stimulus: ";
    append_joined(os, stimuli, " ");
    os << '\n';
  }

  ElementSet orphans = system.elements_of_kind(ElementKind::Derived);
  for (const auto& r : system.reactions) {
    for (const auto& p : r.products) orphans.erase(p);
  }
  if (!orphans.empty()) {
    os << "derived: ";
    append_joined(os, orphans, " ");
    os << '\n';
  }

  for (const auto& r : canonical_order(system).reactions) {
    os << "reaction " << r.id << ": ";
    append_joined(os, r.reactants, " + ");
    os << " -> ";
    append_joined(os, r.products, " + ");
    if (!r.catalysts.empty()) {
      os << " cat ";
      append_joined(os, r.catalysts, ", ");
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace acn
