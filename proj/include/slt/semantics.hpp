#pragma once

#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "slt/ast.hpp"

namespace slt {

/// A visible communication. Compares by (sender, receiver, label, sort);
/// payload values play no part in the semantics.
struct CommAction {
  Role sender;
  Role receiver;
  Label label;
  Sort sort;

  auto operator<=>(const CommAction&) const = default;
};

/// Session termination.
struct Tick {
  auto operator<=>(const Tick&) const = default;
};

/// A silent step: a call expansion or a single-branch unit interaction.
struct Tau {
  auto operator<=>(const Tau&) const = default;
};

using Action = std::variant<CommAction, Tick, Tau>;

/// One transition out of a state. `next` is null exactly for Tick, which has
/// no successor.
struct Step {
  Action action;
  TypePtr next;
};

/// All transitions of t under the fixed declaration table:
///   call ℓ        –τ→ body of ℓ
///   μt.L, end     –✓→           (recursion never unfolds)
///   r1→r2: l().L  –τ→ L         (single branch, unit payload)
///   r1→r2:{...}   –l_j(S_j)→ L_j per branch, when not single-branch-unit
///   recursion variable: none
/// Throws Error{UnboundCall} on a missing call target.
std::vector<Step> step(const TypePtr& t, const Declarations& decls);

/// A weak trace: the visible communications in order, plus whether the run
/// ended with ✓ at that point.
struct Trace {
  std::vector<CommAction> visible;
  bool terminated = false;

  auto operator<=>(const Trace&) const = default;
};

/// Finite; contains the empty trace and every visible prefix of each member.
using TraceLanguage = std::set<Trace>;

/// "a->b:l(nat) b->a:ok(unit) tick"; the empty unterminated trace renders
/// as "<eps>", the empty terminated one as "tick".
std::string render(const CommAction& a);
std::string render(const Trace& t);

/// One rendered trace per line, sorted as strings.
std::vector<std::string> render_lines(const TraceLanguage& lang);

struct TraceStats {
  std::size_t states = 0;  // distinct states entered during enumeration
};

/// The set of weak action sequences of t: silent steps absorbed, every
/// prefix recorded, termination marked where ✓ fires. Finite because calls
/// are acyclic and recursion does not unfold; enumeration is memoized per
/// state and never visits more states than there are nodes.
TraceLanguage traces(const TypePtr& t, const Declarations& decls, TraceStats* stats = nullptr);

struct LangEqResult {
  bool equal = false;
  std::optional<Trace> witness;  // smallest trace in the symmetric difference
  int witness_side = 0;          // 1 or 2: which language contains the witness

  explicit operator bool() const { return equal; }
};

/// Trace-language equality of two types relative to their own declaration
/// tables, with the smallest separating trace on failure.
LangEqResult lang_eq(const TypePtr& t1, const Declarations& d1, const TypePtr& t2,
                     const Declarations& d2);

}  // namespace slt
