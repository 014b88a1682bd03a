#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "slt/diagnostics.hpp"

namespace slt {

bool is_identifier(std::string_view s);

namespace detail {
std::string checked_identifier(std::string name, std::string_view what);
}

/// A session participant.
struct Role {
  explicit Role(std::string n) : name(detail::checked_identifier(std::move(n), "role")) {}
  std::string name;
  auto operator<=>(const Role&) const = default;
};

/// A message label offered by a branching.
struct Label {
  explicit Label(std::string n) : name(detail::checked_identifier(std::move(n), "label")) {}
  std::string name;
  auto operator<=>(const Label&) const = default;
};

/// A recursion variable. Lives in its own namespace, separate from
/// declaration names and labels.
struct RecVar {
  explicit RecVar(std::string n) : name(detail::checked_identifier(std::move(n), "recursion variable")) {}
  std::string name;
  auto operator<=>(const RecVar&) const = default;
};

/// The name a declaration binds a light global type to.
struct DeclName {
  explicit DeclName(std::string n) : name(detail::checked_identifier(std::move(n), "declaration name")) {}
  std::string name;
  auto operator<=>(const DeclName&) const = default;
};

/// Payload sorts. l() is canonicalized to l(unit) in the tree; the printer
/// re-abbreviates.
enum class Sort { Unit, Nat, Str, Bool };

std::string_view to_string(Sort s);

class LightType;
using TypePtr = std::shared_ptr<const LightType>;

struct Branch {
  Label label;
  Sort sort;
  TypePtr continuation;
};

/// Immutable tree of branchings, recursion, recursion variables, end and
/// call nodes. Global types are the call-free, closed subset. Nodes carry an
/// optional source location which never participates in equality.
class LightType {
 public:
  struct Branching {
    Role sender;
    Role receiver;
    std::vector<Branch> branches;  // non-empty, labels pairwise distinct
  };
  struct Rec {
    RecVar var;
    TypePtr body;
  };
  struct Var {
    RecVar var;
  };
  struct End {};
  struct Call {
    DeclName target;
  };

  using Node = std::variant<Branching, Rec, Var, End, Call>;

  LightType(Node node, std::optional<SourceLoc> loc) : node_(std::move(node)), loc_(loc) {}

  const Node& node() const { return node_; }
  std::optional<SourceLoc> loc() const { return loc_; }

  const Branching* as_branching() const { return std::get_if<Branching>(&node_); }
  const Rec* as_rec() const { return std::get_if<Rec>(&node_); }
  const Var* as_var() const { return std::get_if<Var>(&node_); }
  bool is_end() const { return std::holds_alternative<End>(node_); }
  const Call* as_call() const { return std::get_if<Call>(&node_); }

 private:
  Node node_;
  std::optional<SourceLoc> loc_;
};

/// Throws std::invalid_argument when sender == receiver, the branch list is
/// empty, or two branches share a label.
TypePtr make_branching(Role sender, Role receiver, std::vector<Branch> branches,
                       std::optional<SourceLoc> loc = std::nullopt);
TypePtr make_rec(RecVar var, TypePtr body, std::optional<SourceLoc> loc = std::nullopt);
TypePtr make_var(RecVar var, std::optional<SourceLoc> loc = std::nullopt);
TypePtr make_end(std::optional<SourceLoc> loc = std::nullopt);
TypePtr make_call(DeclName target, std::optional<SourceLoc> loc = std::nullopt);

/// Convenience for the common single-branch interaction r1 -> r2 : l(S) . cont.
TypePtr make_interaction(Role sender, Role receiver, Label label, Sort sort, TypePtr cont);

/// Deep equality. Branch order and exact names matter; source locations do not.
bool structurally_equal(const TypePtr& a, const TypePtr& b);

/// Number of nodes in the tree (branch continuations included).
std::size_t count_nodes(const TypePtr& t);

/// Ordered, name-keyed table of declarations.
class Declarations {
 public:
  using Entry = std::pair<DeclName, TypePtr>;

  Declarations() = default;

  /// Throws std::invalid_argument on a duplicate name.
  void add(DeclName name, TypePtr body);

  /// Appends every entry of other; throws std::invalid_argument on clashes.
  void merge(const Declarations& other);

  /// Replaces the body of an existing entry, keeping table order.
  void replace(const DeclName& name, TypePtr body);

  void remove(const DeclName& name);

  const TypePtr* find(const DeclName& name) const;
  bool contains(const DeclName& name) const;

  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

 private:
  std::vector<Entry> entries_;
};

bool structurally_equal(const Declarations& a, const Declarations& b);

/// Empty iff all tree invariants hold for main and every declaration body,
/// every call target is bound, and the call graph is acyclic. Deterministic
/// in content and order.
std::vector<Diagnostic> well_formed(const TypePtr& main, const Declarations& decls);

/// True iff the tree contains no call node and every recursion variable is
/// bound.
bool is_global(const TypePtr& t);

/// Roles occurring in t and, transitively, in the bodies of called
/// declarations. Throws Error{UnboundCall} on a missing target.
std::set<Role> roles_of(const TypePtr& t, const Declarations& decls);

/// Equality up to a bijective renaming of reachable declaration names and a
/// consistent renaming of recursion variables. Branches compare as
/// label-indexed sets.
bool alpha_eq_decls(const TypePtr& main1, const Declarations& decls1,
                    const TypePtr& main2, const Declarations& decls2);

}  // namespace slt
