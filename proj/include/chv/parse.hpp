#pragma once
#include <string_view>

#include "chv/poly.hpp"

namespace chv {

// Parses an entry expression into a canonical polynomial.
//
//   EXPR   := TERM (('+'|'-') TERM)*
//   TERM   := FACTOR ('*' FACTOR)*
//   FACTOR := INT | INT '/' UINT | IDENT ['^' UINT]
//           | '(' EXPR ')' ['^' UINT] | '-' FACTOR
//   IDENT  := [A-Za-z][A-Za-z0-9_]*
//
// Whitespace is insignificant. Identifiers are interned on first sight.
// Malformed input raises ParseError carrying the byte offset.
PolyElem parse_entry(std::string_view text);

}  // namespace chv
