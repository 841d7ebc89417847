#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace acn::testing {

// Strict RFC 4180 reader: LF records, quoted fields, every record must have
// as many fields as the header. Throws std::runtime_error otherwise.
inline std::vector<std::vector<std::string>> read_csv_strict(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false, in_quotes = false, field_started = false;
  auto end_field = [&] {
    row.push_back(field);
    field.clear();
    quoted = in_quotes = field_started = false;
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        field += c;
      }
      continue;
    }
    if (c == '"') {
      if (field_started) throw std::runtime_error("quote inside unquoted field");
      quoted = in_quotes = field_started = true;
    } else if (c == ',') {
      end_field();
    } else if (c == '\n') {
      end_field();
      rows.push_back(std::move(row));
      row.clear();
    } else if (c == '\r') {
      throw std::runtime_error("CR line ending");
    } else {
      if (quoted) throw std::runtime_error("text after closing quote");
      field += c;
      field_started = true;
    }
  }
  if (in_quotes) throw std::runtime_error("unterminated quote");
  if (field_started || !row.empty()) throw std::runtime_error("missing final newline");
  if (rows.empty()) throw std::runtime_error("no header");
  for (const auto& r : rows) {
    if (r.size() != rows.front().size()) throw std::runtime_error("ragged record");
  }
  return rows;
}

}  // namespace acn::testing
