#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "slt/ast.hpp"
#include "slt/diagnostics.hpp"

namespace slt {

/// A parsed .lgt source file: declarations followed by exactly one main type.
struct SourceFile {
  TypePtr main;
  Declarations decls;
};

struct ParseResult {
  std::optional<SourceFile> file;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return file.has_value(); }
};

/// Parses the textual format:
///
///   file   ::= (`let` name `=` type `;`)* `main` `=` type `;`
///   type   ::= `end` | recvar | `rec` recvar `.` type | `call` name
///            | role `->` role `:` branch
///            | role `->` role `:` `{` branch (`,` branch)* `}`
///   branch ::= label `(` sort? `)` `.` type
///   sort   ::= `unit` | `nat` | `str` | `bool` (`int` reads as `nat`)
///
/// Line comments start with `//`. An omitted sort means `unit`. Never throws
/// on malformed input; faults come back as diagnostics with line:column.
ParseResult parse(std::string_view text);

/// Canonical pretty-printer: declarations before main in table order, one
/// branch per line inside braces, two-space indentation per brace level,
/// unit sorts abbreviated to `()`. parse(print_source(m, d)) is structurally
/// identical to (m, d).
std::string print_source(const TypePtr& main, const Declarations& decls);

/// Renders one type without the surrounding `main = ...;` frame.
std::string print_type(const TypePtr& t);

}  // namespace slt
