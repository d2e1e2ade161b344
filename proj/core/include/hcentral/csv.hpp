#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hcentral/types.hpp"

namespace hcentral::csv {

/// Splits one line into fields. Fields containing commas or quotes must be
/// quoted; quotes inside quoted fields are doubled. Embedded newlines are
/// not supported. Throws ParseError (with the given 1-based line number) on
/// malformed quoting. A trailing "\r" (CRLF input) is dropped.
std::vector<std::string> parse_line(const std::string& line, std::size_t line_number);

/// Quotes the field if it contains a comma, quote, or leading/trailing
/// whitespace; doubles embedded quotes.
std::string escape(const std::string& field);

/// Joins escaped fields with commas. No trailing newline.
std::string join(const std::vector<std::string>& fields);

}  // namespace hcentral::csv
