#pragma once

// Element-expression parser for the CLI wire format:
//   element := term ('+' term)*
//   term    := factor ('*' factor)*
//   factor  := atom ('^' nat)?
//   atom    := sym '(' sub ')' | '1' | '0'
//   sub     := int | int '/' '2'
// with sym in {x,a,b,c,d} and insignificant whitespace. x(0) evaluates to
// the zero element; '1' is the empty diagram; '0' the zero element.

#include <stdexcept>
#include <string>
#include <string_view>

#include "stringhom/diagrams.hpp"

namespace stringhom {

struct ParseError : std::runtime_error {
    ParseError(std::size_t pos, const std::string& what)
        : std::runtime_error("at position " + std::to_string(pos) + ": " + what),
          position(pos) {}
    std::size_t position;
};

Element parse_element(std::string_view text, Cx cx);

} // namespace stringhom
