#pragma once

#include <string>
#include <string_view>

#include "poskit/group.hpp"

namespace poskit {

// Grammar:
//   expr := term { "x" term }
//   term := "Z(" int ")" | "S(" int ")" | "Sd(" int "," int "," int ")" | "(" expr ")"
// Whitespace is insignificant. A single term parses to itself, two or more
// to a direct product. Unit/size validation happens at group construction,
// not here.
GroupSpec parse_spec(std::string_view text);

// Inverse of parse_spec on canonical trees (products have >= 2 factors).
std::string print_spec(const GroupSpec& spec);

} // namespace poskit
