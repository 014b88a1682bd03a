#pragma once

#include <map>

#include "slt/ast.hpp"
#include "slt/semantics.hpp"

namespace slt::testing {

// Independent route to the trace language, computed compositionally on the
// tree instead of by walking the transition system:
//   end, rec t.L       -> { eps, tick }
//   recursion variable -> { eps }
//   call l             -> language of the body
//   single unit branch -> language of the continuation
//   otherwise          -> { eps }  u  U_j  action_j . language(L_j)
// Used to cross-check the operational enumeration.
class Denotational {
 public:
  explicit Denotational(const Declarations& decls) : decls_(decls) {}

  const TraceLanguage& language(const TypePtr& t) {
    auto it = memo_.find(t.get());
    if (it != memo_.end()) return it->second;
    TraceLanguage lang;
    if (t->is_end() || t->as_rec() != nullptr) {
      lang.insert(Trace{});
      lang.insert(Trace{{}, true});
    } else if (t->as_var() != nullptr) {
      lang.insert(Trace{});
    } else if (const auto* call = t->as_call()) {
      lang = language(*decls_.find(call->target));
    } else {
      const auto& br = *t->as_branching();
      if (br.branches.size() == 1 && br.branches.front().sort == Sort::Unit) {
        lang = language(br.branches.front().continuation);
      } else {
        lang.insert(Trace{});
        for (const auto& b : br.branches) {
          CommAction head{br.sender, br.receiver, b.label, b.sort};
          for (const Trace& tail : language(b.continuation)) {
            Trace extended;
            extended.visible.push_back(head);
            extended.visible.insert(extended.visible.end(), tail.visible.begin(),
                                    tail.visible.end());
            extended.terminated = tail.terminated;
            lang.insert(std::move(extended));
          }
        }
      }
    }
    return memo_.emplace(t.get(), std::move(lang)).first->second;
  }

 private:
  const Declarations& decls_;
  std::map<const LightType*, TraceLanguage> memo_;
};

inline TraceLanguage denotational_language(const TypePtr& t, const Declarations& decls) {
  Denotational d(decls);
  return d.language(t);
}

}  // namespace slt::testing
