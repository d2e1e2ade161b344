#include "hcentral/csv.hpp"

#include <cctype>
#include <string_view>

namespace hcentral::csv {

std::vector<std::string> parse_line(const std::string& line, std::size_t line_number) {
  std::string_view view{line};
  if (view.ends_with('\r')) view.remove_suffix(1);

  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  std::size_t i = 0;
  const std::size_t n = view.size();
  bool field_was_quoted = false;

  while (i <= n) {
    if (i == n) {
      if (quoted) throw ParseError(line_number, "unterminated quoted field");
      fields.push_back(std::move(field));
      break;
    }
    const char c = view[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < n && view[i + 1] == '"') {
          field.push_back('"');
          i += 2;
        } else {
          quoted = false;
          ++i;
        }
      } else {
        field.push_back(c);
        ++i;
      }
    } else if (c == '"') {
      if (!field.empty() || field_was_quoted) {
        throw ParseError(line_number, "quote inside unquoted field");
      }
      quoted = true;
      field_was_quoted = true;
      ++i;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
      field_was_quoted = false;
      ++i;
    } else {
      if (field_was_quoted) {
        throw ParseError(line_number, "content after closing quote");
      }
      field.push_back(c);
      ++i;
    }
  }
  return fields;
}

std::string escape(const std::string& field) {
  const bool needs_quotes =
      field.find_first_of(",\"") != std::string::npos ||
      (!field.empty() && (std::isspace(static_cast<unsigned char>(field.front())) != 0 ||
                          std::isspace(static_cast<unsigned char>(field.back())) != 0));
  if (!needs_quotes) return field;
  std::string out;
  out.reserve(field.size() + 2);
  out.push_back('"');
  for (const char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string join(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out.push_back(',');
    out += escape(fields[i]);
  }
  return out;
}

}  // namespace hcentral::csv
