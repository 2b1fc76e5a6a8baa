#include "kv_lines.hpp"

#include <string>

#include "fsgss/errors.hpp"

namespace fsgss::detail {

std::vector<KeyValueLine> SplitKeyValueLines(std::string_view text) {
  std::vector<KeyValueLine> lines;
  std::size_t pos = 0;
  std::size_t line_number = 0;
  while (pos < text.size()) {
    ++line_number;
    const std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) {
      throw ParseError("truncated line (no trailing newline)", line_number);
    }
    const std::string_view line = text.substr(pos, end - pos);
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos || eq == 0) {
      throw ParseError("expected name=value", line_number);
    }
    lines.push_back({line.substr(0, eq), line.substr(eq + 1), line_number});
    pos = end + 1;
  }
  return lines;
}

BigUint ExpectHexField(const KeyValueLine& line, std::string_view expected) {
  if (line.key != expected) {
    throw ParseError("expected field '" + std::string(expected) + "', found '" + std::string(line.key) + "'",
                     line.line_number);
  }
  auto value = ParseCanonicalHex(line.value);
  if (!value) {
    throw ParseError("field '" + std::string(expected) + "' is not canonical hex", line.line_number);
  }
  return *value;
}

}  // namespace fsgss::detail
