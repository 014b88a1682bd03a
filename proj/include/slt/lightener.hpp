#pragma once

#include <set>
#include <string>
#include <vector>

#include "slt/ast.hpp"
#include "slt/redundancy.hpp"

namespace slt {

// Issues declaration names `<prefix>1`, `<prefix>2`, ... skipping names that
// are already taken. One namer per rewrite run; issued names are recorded as
// taken, so a namer never repeats itself.
class FreshNamer {
 public:
  explicit FreshNamer(std::string prefix, const Declarations& existing);

  DeclName issue();

  // Marks a name as taken without issuing it.
  void reserve(const DeclName& name);

 private:
  std::string prefix_;
  unsigned counter_ = 0;
  std::set<DeclName> taken_;
};

// One rewrite step's output: the rewritten type plus the declarations minted
// for subtrees that were moved out of it.
struct LighteningResult {
  TypePtr result;
  Declarations new_decls;
};

// Replaces the first communications towards r inside t by calls to fresh
// declarations, erasing them outright where they are single-branch and carry
// unit. Never descends under a rec binder. All calls introduced point into
// new_decls.
LighteningResult descend(const TypePtr& t, const Role& r, FreshNamer& namer);

// Removes one redundant interaction from t. Walks the site's path frame by
// frame: as soon as the site's receiver is the sender or receiver of a frame,
// the node is deleted in place; otherwise every sibling branch is descended
// towards the site's receiver and the walk continues into the hole branch.
// Throws Error(SiteStale) when the path no longer addresses a single-branch
// unit interaction matching the site.
LighteningResult eliminate(const TypePtr& t, const RedundantSite& site, FreshNamer& namer);

// Fixpoint driver output. `decls` is the full final table: the input entries
// in their original order (bodies possibly rewritten) followed by the fresh
// entries, whose names are listed in `fresh_names` in order of creation.
struct LightenResult {
  TypePtr main;
  Declarations decls;
  std::vector<DeclName> fresh_names;
};

// Eliminates redundant interactions until none is left anywhere, taking the
// first site in preorder on the main type first, then on each declaration
// body in table order. The number of sites drops on every step, so this
// terminates; the result has no redundant interaction and the same traces.
LightenResult lighten_fully(const TypePtr& main, const Declarations& decls,
                            const std::string& prefix = "L");

// Merges fresh declarations whose bodies are interchangeable with an earlier
// entry, rewriting calls and dropping the later duplicates. Only names listed
// in fresh_names may be dropped. Runs to a fixpoint so chains of duplicates
// collapse. Used by the --dedup flag.
LightenResult dedup_declarations(const LightenResult& in);

}  // namespace slt
