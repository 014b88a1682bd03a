#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "slt/ast.hpp"

namespace slt {

namespace {

std::string join_path(const std::vector<std::string>& steps) {
  std::string out;
  for (const auto& s : steps) {
    if (!out.empty()) out += '/';
    out += s;
  }
  return out;
}

struct Binder {
  std::string name;
  std::size_t branching_depth;  // branchings crossed when the binder opened
};

// One pass per type: closedness, guardedness and call-target binding.
// A recursion variable is guarded when at least one branching lies between
// its binder and the occurrence; a call never guards.
void check_type(const TypePtr& t, const Declarations& decls, const std::string& owner,
                std::vector<Binder>& binders, std::size_t branching_depth,
                std::vector<std::string>& path, std::vector<Diagnostic>& out) {
  if (const auto* br = t->as_branching()) {
    for (const auto& b : br->branches) {
      path.push_back(b.label.name);
      check_type(b.continuation, decls, owner, binders, branching_depth + 1, path, out);
      path.pop_back();
    }
    return;
  }
  if (const auto* rec = t->as_rec()) {
    binders.push_back(Binder{rec->var.name, branching_depth});
    check_type(rec->body, decls, owner, binders, branching_depth, path, out);
    binders.pop_back();
    return;
  }
  if (const auto* var = t->as_var()) {
    for (auto it = binders.rbegin(); it != binders.rend(); ++it) {
      if (it->name == var->var.name) {
        if (branching_depth <= it->branching_depth) {
          out.push_back(error_at(
              DiagCode::UnguardedRec,
              "recursion variable '" + var->var.name + "' is not guarded by an interaction in " + owner,
              t->loc(), join_path(path)));
        }
        return;
      }
    }
    out.push_back(error_at(DiagCode::FreeVar,
                           "unbound recursion variable '" + var->var.name + "' in " + owner,
                           t->loc(), join_path(path)));
    return;
  }
  if (const auto* call = t->as_call()) {
    if (!decls.contains(call->target)) {
      out.push_back(error_at(DiagCode::UnboundCall,
                             "call target '" + call->target.name + "' is not declared",
                             t->loc(), join_path(path)));
    }
    return;
  }
  // End: nothing to check.
}

void collect_call_targets(const TypePtr& t, std::vector<DeclName>& out) {
  if (const auto* br = t->as_branching()) {
    for (const auto& b : br->branches) collect_call_targets(b.continuation, out);
  } else if (const auto* rec = t->as_rec()) {
    collect_call_targets(rec->body, out);
  } else if (const auto* call = t->as_call()) {
    out.push_back(call->target);
  }
}

enum class VisitState { Unvisited, InProgress, Done };

void visit_calls(const DeclName& name, const Declarations& decls,
                 std::map<std::string, VisitState>& state, std::vector<std::string>& stack,
                 std::vector<Diagnostic>& out) {
  auto& st = state[name.name];
  if (st == VisitState::Done) return;
  if (st == VisitState::InProgress) {
    std::string cycle;
    auto it = std::find(stack.begin(), stack.end(), name.name);
    for (; it != stack.end(); ++it) cycle += *it + " -> ";
    cycle += name.name;
    out.push_back(error_at(DiagCode::CyclicCalls, "declarations call each other in a cycle: " + cycle));
    return;
  }
  st = VisitState::InProgress;
  stack.push_back(name.name);
  if (const auto* body = decls.find(name)) {
    std::vector<DeclName> targets;
    collect_call_targets(*body, targets);
    for (const auto& target : targets) {
      if (decls.contains(target)) visit_calls(target, decls, state, stack, out);
    }
  }
  stack.pop_back();
  state[name.name] = VisitState::Done;
}

}  // namespace

std::vector<Diagnostic> well_formed(const TypePtr& main, const Declarations& decls) {
  std::vector<Diagnostic> out;
  std::vector<Binder> binders;
  std::vector<std::string> path;

  check_type(main, decls, "the main type", binders, 0, path, out);
  for (const auto& [name, body] : decls) {
    check_type(body, decls, "declaration '" + name.name + "'", binders, 0, path, out);
  }

  std::map<std::string, VisitState> state;
  std::vector<std::string> stack;
  std::vector<DeclName> roots;
  collect_call_targets(main, roots);
  for (const auto& root : roots) {
    if (decls.contains(root)) visit_calls(root, decls, state, stack, out);
  }
  for (const auto& [name, body] : decls) visit_calls(name, decls, state, stack, out);

  return out;
}

namespace {

bool is_global_impl(const TypePtr& t, std::vector<std::string>& bound) {
  if (const auto* br = t->as_branching()) {
    for (const auto& b : br->branches) {
      if (!is_global_impl(b.continuation, bound)) return false;
    }
    return true;
  }
  if (const auto* rec = t->as_rec()) {
    bound.push_back(rec->var.name);
    const bool ok = is_global_impl(rec->body, bound);
    bound.pop_back();
    return ok;
  }
  if (const auto* var = t->as_var()) {
    return std::find(bound.rbegin(), bound.rend(), var->var.name) != bound.rend();
  }
  return !t->as_call();
}

}  // namespace

bool is_global(const TypePtr& t) {
  std::vector<std::string> bound;
  return is_global_impl(t, bound);
}

namespace {

void roles_of_impl(const TypePtr& t, const Declarations& decls, std::set<Role>& out,
                   std::set<std::string>& seen_decls) {
  if (const auto* br = t->as_branching()) {
    out.insert(br->sender);
    out.insert(br->receiver);
    for (const auto& b : br->branches) roles_of_impl(b.continuation, decls, out, seen_decls);
  } else if (const auto* rec = t->as_rec()) {
    roles_of_impl(rec->body, decls, out, seen_decls);
  } else if (const auto* call = t->as_call()) {
    const auto* body = decls.find(call->target);
    if (!body) {
      throw Error(error_at(DiagCode::UnboundCall,
                           "call target '" + call->target.name + "' is not declared"));
    }
    if (seen_decls.insert(call->target.name).second) {
      roles_of_impl(*body, decls, out, seen_decls);
    }
  }
}

}  // namespace

std::set<Role> roles_of(const TypePtr& t, const Declarations& decls) {
  std::set<Role> out;
  std::set<std::string> seen;
  roles_of_impl(t, decls, out, seen);
  return out;
}

namespace {

struct AlphaCtx {
  const Declarations& decls1;
  const Declarations& decls2;
  std::map<std::string, std::string> fwd;  // decl-name bijection, side 1 -> 2
  std::map<std::string, std::string> bwd;
};

bool alpha_eq_types(const TypePtr& a, const TypePtr& b,
                    std::vector<std::pair<std::string, std::string>>& rec_env, AlphaCtx& ctx);

// Declaration bodies are closed types of their own, so paired bodies start
// from an empty recursion environment. Each name pair is descended once; the
// acyclic call graph bounds the recursion.
bool alpha_eq_calls(const DeclName& n1, const DeclName& n2, AlphaCtx& ctx) {
  const auto f = ctx.fwd.find(n1.name);
  const auto g = ctx.bwd.find(n2.name);
  if (f != ctx.fwd.end() || g != ctx.bwd.end()) {
    return f != ctx.fwd.end() && g != ctx.bwd.end() && f->second == n2.name && g->second == n1.name;
  }
  const auto* body1 = ctx.decls1.find(n1);
  const auto* body2 = ctx.decls2.find(n2);
  if (!body1 || !body2) return false;
  ctx.fwd.emplace(n1.name, n2.name);
  ctx.bwd.emplace(n2.name, n1.name);
  std::vector<std::pair<std::string, std::string>> fresh_env;
  return alpha_eq_types(*body1, *body2, fresh_env, ctx);
}

bool alpha_eq_types(const TypePtr& a, const TypePtr& b,
                    std::vector<std::pair<std::string, std::string>>& rec_env, AlphaCtx& ctx) {
  if (a->node().index() != b->node().index()) return false;
  if (const auto* ba = a->as_branching()) {
    const auto* bb = b->as_branching();
    if (ba->sender != bb->sender || ba->receiver != bb->receiver) return false;
    if (ba->branches.size() != bb->branches.size()) return false;
    // Branches compare as a label-indexed set; order is a printing concern.
    std::map<Label, const Branch*> by_label;
    for (const auto& br : bb->branches) by_label.emplace(br.label, &br);
    for (const auto& br : ba->branches) {
      const auto it = by_label.find(br.label);
      if (it == by_label.end()) return false;
      if (br.sort != it->second->sort) return false;
      if (!alpha_eq_types(br.continuation, it->second->continuation, rec_env, ctx)) return false;
    }
    return true;
  }
  if (const auto* ra = a->as_rec()) {
    const auto* rb = b->as_rec();
    rec_env.emplace_back(ra->var.name, rb->var.name);
    const bool ok = alpha_eq_types(ra->body, rb->body, rec_env, ctx);
    rec_env.pop_back();
    return ok;
  }
  if (const auto* va = a->as_var()) {
    const auto* vb = b->as_var();
    for (auto it = rec_env.rbegin(); it != rec_env.rend(); ++it) {
      const bool hit1 = it->first == va->var.name;
      const bool hit2 = it->second == vb->var.name;
      if (hit1 || hit2) return hit1 && hit2;
    }
    return va->var == vb->var;  // both free; well-formed inputs never get here
  }
  if (a->is_end()) return true;
  return alpha_eq_calls(a->as_call()->target, b->as_call()->target, ctx);
}

}  // namespace

bool alpha_eq_decls(const TypePtr& main1, const Declarations& decls1, const TypePtr& main2,
                    const Declarations& decls2) {
  AlphaCtx ctx{decls1, decls2, {}, {}};
  std::vector<std::pair<std::string, std::string>> rec_env;
  return alpha_eq_types(main1, main2, rec_env, ctx);
}

}  // namespace slt
