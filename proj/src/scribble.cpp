#include "slt/scribble.hpp"

#include <optional>
#include <set>
#include <string>

#include "slt/diagnostics.hpp"

namespace slt {

std::string ProtocolDoc::render() const {
  std::string head = "protocol " + name + "(";
  for (std::size_t i = 0; i < roles.size(); ++i) {
    if (i > 0) head += ", ";
    head += "role " + roles[i].name;
  }
  head += ")";
  if (body.empty()) return head + " { }\n";
  std::string out = head + " {\n";
  for (const auto& line : body) out += "  " + line + "\n";
  out += "}\n";
  return out;
}

namespace {

// Participants of t's own interactions, senders before receivers, in the
// order the statements will be rendered. Calls contribute nothing.
void direct_roles(const TypePtr& t, std::vector<Role>& out, std::set<Role>& seen) {
  if (const auto* br = t->as_branching()) {
    if (seen.insert(br->sender).second) out.push_back(br->sender);
    if (seen.insert(br->receiver).second) out.push_back(br->receiver);
    for (const auto& b : br->branches) direct_roles(b.continuation, out, seen);
    return;
  }
  if (const auto* rec = t->as_rec()) direct_roles(rec->body, out, seen);
}

std::vector<Role> direct_roles(const TypePtr& t) {
  std::vector<Role> out;
  std::set<Role> seen;
  direct_roles(t, out, seen);
  return out;
}

const TypePtr& resolve_call(const DeclName& target, const Declarations& decls) {
  const TypePtr* body = decls.find(target);
  if (body == nullptr) {
    throw Error(error_at(DiagCode::UnboundCall, "run of undeclared name '" + target.name + "'"));
  }
  return *body;
}

// Sender of the first interaction reachable in t, looking through rec
// binders and calls. Nullopt when t never communicates.
std::optional<Role> first_sender(const TypePtr& t, const Declarations& decls,
                                 std::set<DeclName>& walked) {
  if (const auto* br = t->as_branching()) return br->sender;
  if (const auto* rec = t->as_rec()) return first_sender(rec->body, decls, walked);
  if (const auto* call = t->as_call()) {
    if (!walked.insert(call->target).second) return std::nullopt;
    return first_sender(resolve_call(call->target, decls), decls, walked);
  }
  return std::nullopt;
}

class BodyRenderer {
 public:
  explicit BodyRenderer(const Declarations& decls) : decls_(decls) {}

  std::vector<std::string> render(const TypePtr& t) {
    lines_.clear();
    next_var_ = 0;
    statements(t, 0);
    return std::move(lines_);
  }

 private:
  void emit(int indent, std::string text) {
    lines_.push_back(std::string(static_cast<std::size_t>(indent) * 2, ' ') + std::move(text));
  }

  std::string payload(Sort s) {
    if (s == Sort::Unit) return "()";
    return "(" + std::string(to_string(s)) + " x" + std::to_string(++next_var_) + ")";
  }

  void message(const LightType::Branching& br, const Branch& b, int indent) {
    emit(indent,
         b.label.name + payload(b.sort) + " from " + br.sender.name + " to " + br.receiver.name +
             ";");
  }

  void statements(const TypePtr& t, int indent) {
    if (const auto* br = t->as_branching()) {
      if (br->branches.size() == 1) {
        message(*br, br->branches.front(), indent);
        statements(br->branches.front().continuation, indent);
        return;
      }
      emit(indent, "choice at " + br->sender.name + " {");
      for (std::size_t i = 0; i < br->branches.size(); ++i) {
        if (i > 0) emit(indent, "} or {");
        message(*br, br->branches[i], indent + 1);
        statements(br->branches[i].continuation, indent + 1);
      }
      emit(indent, "}");
      return;
    }
    if (const auto* rec = t->as_rec()) {
      emit(indent, "rec " + rec->var.name + " {");
      statements(rec->body, indent + 1);
      emit(indent, "}");
      return;
    }
    if (const auto* var = t->as_var()) {
      emit(indent, "continue " + var->var.name + ";");
      return;
    }
    if (const auto* call = t->as_call()) {
      const TypePtr& body = resolve_call(call->target, decls_);
      std::string line = "run protocol " + call->target.name + "(";
      std::vector<Role> roles = direct_roles(body);
      for (std::size_t i = 0; i < roles.size(); ++i) {
        if (i > 0) line += ", ";
        line += "role " + roles[i].name;
      }
      line += ")";
      std::set<DeclName> walked{call->target};
      if (std::optional<Role> at = first_sender(body, decls_, walked)) {
        line += " at " + at->name;
      }
      emit(indent, line + ";");
      return;
    }
    // end: no statement
  }

  const Declarations& decls_;
  std::vector<std::string> lines_;
  unsigned next_var_ = 0;
};

ProtocolDoc document(const std::string& name, const TypePtr& t, const Declarations& decls) {
  BodyRenderer renderer(decls);
  return {name, direct_roles(t), renderer.render(t)};
}

}  // namespace

std::vector<ProtocolDoc> emit_scribble(const std::string& main_name, const TypePtr& main,
                                       const Declarations& decls) {
  std::vector<ProtocolDoc> docs;
  docs.push_back(document(main_name, main, decls));
  for (const auto& [name, body] : decls) docs.push_back(document(name.name, body, decls));
  return docs;
}

std::string render_concatenated(const std::vector<ProtocolDoc>& docs) {
  std::string out;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    if (i > 0) out += "\n";
    out += docs[i].render();
  }
  return out;
}

}  // namespace slt
