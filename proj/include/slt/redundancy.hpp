#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "slt/ast.hpp"

namespace slt {

// Path from the root of a type to a nested interaction: the branch labels
// chosen at each enclosing branching. Paths never cross a rec binder or a
// call, mirroring the contexts in which removal is defined.
struct ContextPath {
  std::vector<Label> steps;

  // "l1/l2/l3"; the empty path renders as "/".
  std::string render() const;

  // Inverse of render; also accepts "" for the empty path. Returns nullopt
  // on malformed label segments.
  static std::optional<ContextPath> parse(std::string_view text);

  bool operator==(const ContextPath&) const = default;
};

// A removable interaction: a single-branch, unit-payload exchange reachable
// from the root through branching frames only.
struct RedundantSite {
  ContextPath path;
  Role sender;
  Role receiver;
  Label label;
  TypePtr continuation;
};

// All redundant sites in t, in preorder (a site's own continuation is
// scanned too; nested sites are listed after their enclosing ones).
std::vector<RedundantSite> find_redundant(const TypePtr& t);

// Subtree of t at the given path, or nullptr if the path does not name a
// chain of branch choices (wrong label, or a non-branching node en route).
TypePtr resolve_path(const TypePtr& t, const ContextPath& path);

}  // namespace slt
