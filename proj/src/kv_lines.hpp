#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "fsgss/bigint.hpp"

namespace fsgss::detail {

struct KeyValueLine {
  std::string_view key;
  std::string_view value;
  std::size_t line_number;
};

// Splits newline-terminated `key=value` lines. Throws ParseError on a missing
// final newline, an empty line or a line without '='.
std::vector<KeyValueLine> SplitKeyValueLines(std::string_view text);

// Throws ParseError unless `line` has key `expected` and a canonical hex value.
BigUint ExpectHexField(const KeyValueLine& line, std::string_view expected);

}  // namespace fsgss::detail
