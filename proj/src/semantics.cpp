#include "slt/semantics.hpp"

#include <map>
#include <stdexcept>
#include <utility>

#include "slt/diagnostics.hpp"

namespace slt {

std::vector<Step> step(const TypePtr& t, const Declarations& decls) {
  std::vector<Step> out;
  if (const auto* br = t->as_branching()) {
    if (br->branches.size() == 1 && br->branches.front().sort == Sort::Unit) {
      out.push_back({Tau{}, br->branches.front().continuation});
      return out;
    }
    out.reserve(br->branches.size());
    for (const auto& b : br->branches) {
      out.push_back({CommAction{br->sender, br->receiver, b.label, b.sort}, b.continuation});
    }
    return out;
  }
  if (t->as_rec() != nullptr || t->is_end()) {
    out.push_back({Tick{}, nullptr});
    return out;
  }
  if (const auto* call = t->as_call()) {
    const TypePtr* body = decls.find(call->target);
    if (body == nullptr) {
      throw Error(
          error_at(DiagCode::UnboundCall, "call to undeclared name '" + call->target.name + "'"));
    }
    out.push_back({Tau{}, *body});
    return out;
  }
  return out;  // recursion variable: no transition
}

std::string render(const CommAction& a) {
  return a.sender.name + "->" + a.receiver.name + ":" + a.label.name + "(" +
         std::string(to_string(a.sort)) + ")";
}

std::string render(const Trace& t) {
  if (t.visible.empty()) return t.terminated ? "tick" : "<eps>";
  std::string out;
  for (std::size_t i = 0; i < t.visible.size(); ++i) {
    if (i > 0) out += ' ';
    out += render(t.visible[i]);
  }
  if (t.terminated) out += " tick";
  return out;
}

std::vector<std::string> render_lines(const TraceLanguage& lang) {
  std::set<std::string> sorted;
  for (const auto& t : lang) sorted.insert(render(t));
  return {sorted.begin(), sorted.end()};
}

namespace {

// Memoized per state; states are shared subtrees, so the memo never exceeds
// the total node count of the main type and all declaration bodies.
class Enumerator {
 public:
  Enumerator(const Declarations& decls, std::size_t state_bound)
      : decls_(decls), state_bound_(state_bound) {}

  const TraceLanguage& language(const TypePtr& t) {
    auto it = memo_.find(t.get());
    if (it != memo_.end()) return it->second;
    if (memo_.size() >= state_bound_) {
      throw std::logic_error("trace enumeration exceeded its state bound");
    }
    TraceLanguage lang;
    lang.insert(Trace{});  // the empty sequence is always observable
    for (const Step& s : step(t, decls_)) {
      if (std::holds_alternative<Tick>(s.action)) {
        lang.insert(Trace{{}, true});
        continue;
      }
      const TraceLanguage& sub = language(s.next);
      if (std::holds_alternative<Tau>(s.action)) {
        lang.insert(sub.begin(), sub.end());
        continue;
      }
      const auto& comm = std::get<CommAction>(s.action);
      for (const Trace& tail : sub) {
        Trace extended;
        extended.visible.reserve(tail.visible.size() + 1);
        extended.visible.push_back(comm);
        extended.visible.insert(extended.visible.end(), tail.visible.begin(),
                                tail.visible.end());
        extended.terminated = tail.terminated;
        lang.insert(std::move(extended));
      }
    }
    return memo_.emplace(t.get(), std::move(lang)).first->second;
  }

  std::size_t states() const { return memo_.size(); }

 private:
  const Declarations& decls_;
  std::size_t state_bound_;
  std::map<const LightType*, TraceLanguage> memo_;
};

}  // namespace

TraceLanguage traces(const TypePtr& t, const Declarations& decls, TraceStats* stats) {
  std::size_t bound = count_nodes(t);
  for (const auto& [name, body] : decls) bound += count_nodes(body);
  Enumerator e(decls, bound);
  TraceLanguage lang = e.language(t);
  if (stats != nullptr) stats->states = e.states();
  return lang;
}

LangEqResult lang_eq(const TypePtr& t1, const Declarations& d1, const TypePtr& t2,
                     const Declarations& d2) {
  TraceLanguage l1 = traces(t1, d1);
  TraceLanguage l2 = traces(t2, d2);
  if (l1 == l2) return {true, std::nullopt, 0};
  auto i1 = l1.begin();
  auto i2 = l2.begin();
  while (i1 != l1.end() && i2 != l2.end()) {
    if (*i1 < *i2) return {false, *i1, 1};
    if (*i2 < *i1) return {false, *i2, 2};
    ++i1;
    ++i2;
  }
  if (i1 != l1.end()) return {false, *i1, 1};
  return {false, *i2, 2};
}

}  // namespace slt
