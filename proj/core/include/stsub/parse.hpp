#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "stsub/type.hpp"

namespace stsub {

/// Syntax error with 1-based source position.
struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::size_t line, std::size_t col)
      : std::runtime_error(msg + " at " + std::to_string(line) + ":" +
                           std::to_string(col)),
        line(line),
        col(col) {}
  std::size_t line;
  std::size_t col;
};

/// Well-formedness failure discovered after parsing.
struct ValidationError : std::runtime_error {
  explicit ValidationError(std::vector<Violation> vs)
      : std::runtime_error(describe(vs)), violations(std::move(vs)) {}
  std::vector<Violation> violations;

private:
  static std::string describe(const std::vector<Violation>& vs);
};

/// Parses the textual grammar
///
///   type := "end" | ident | "rec" ident "." type
///         | "+{" sbr ("," sbr)* "}" | "&{" rbr ("," rbr)* "}"
///         | "!" ident "." type            (sugar for a one-branch +{...})
///         | "?" ident "." type            (sugar for a one-branch &{...})
///   sbr  := "!" ident "." type
///   rbr  := "?" ident "." type
///
/// Whitespace-insensitive; `#` starts a line comment. Binders are renamed
/// apart and the result is validated (closedness not required). Throws
/// ParseError or ValidationError.
TypeRef parse_type(std::string_view text);

/// parse_type plus a closedness check.
TypeRef parse_closed_type(std::string_view text);

/// Canonical text; re-parsing yields a type structurally equal to t up to
/// the choice of bound names. Single-branch choices print with the !a.T /
/// ?a.T sugar.
std::string print_type(const TypeRef& t);

}  // namespace stsub
