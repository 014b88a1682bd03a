#pragma once

#include <string>
#include <vector>

#include "slt/ast.hpp"

namespace slt {

/// One rendered protocol block. `roles` lists the participants of the
/// protocol's own interactions in first-occurrence order; roles that only
/// appear inside protocols it runs are not part of its signature. `body`
/// holds the statement lines with relative indentation (two spaces per
/// level) already applied.
struct ProtocolDoc {
  std::string name;
  std::vector<Role> roles;
  std::vector<std::string> body;

  /// "protocol <name>(role a, role b) {" + indented body + "}"; an empty
  /// body collapses to "protocol <name>() { }".
  std::string render() const;
};

/// Protocol blocks for the main type (first) and every declaration in table
/// order. Rendering rules:
///   single-branch interaction  ->  "l(S x1) from r1 to r2;" then the
///                                  continuation ("l() ..." when unit)
///   multi-branch               ->  "choice at r1 {" arms "} or {" ... "}"
///   call ℓ                     ->  "run protocol ℓ(role ...) at r;" where r
///                                  is the sender of the first interaction
///                                  reachable in ℓ's body; " at r" is
///                                  omitted when the body has none
///   rec t / variable t         ->  "rec t {" ... "}" / "continue t;"
///   end                        ->  nothing
/// Payload variables are synthesized x1, x2, ... per protocol for non-unit
/// sorts. Throws Error{UnboundCall} on a missing run target.
std::vector<ProtocolDoc> emit_scribble(const std::string& main_name, const TypePtr& main,
                                       const Declarations& decls);

/// The blocks joined with one blank line between them.
std::string render_concatenated(const std::vector<ProtocolDoc>& docs);

}  // namespace slt
