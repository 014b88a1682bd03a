#include <string>

#include "slt/syntax.hpp"

namespace slt {

namespace {

std::string indent(int level) { return std::string(static_cast<std::size_t>(level) * 2, ' '); }

std::string render_sort(Sort s) {
  return s == Sort::Unit ? "()" : "(" + std::string(to_string(s)) + ")";
}

// level counts enclosing brace nesting; single-branch interactions chain on
// one line, multi-branch interactions open a brace block.
void render(const TypePtr& t, int level, std::string& out) {
  if (const auto* br = t->as_branching()) {
    out += br->sender.name + " -> " + br->receiver.name + " : ";
    if (br->branches.size() == 1) {
      const auto& b = br->branches.front();
      out += b.label.name + render_sort(b.sort) + " . ";
      render(b.continuation, level, out);
      return;
    }
    out += "{\n";
    for (std::size_t i = 0; i < br->branches.size(); ++i) {
      const auto& b = br->branches[i];
      out += indent(level + 1) + b.label.name + render_sort(b.sort) + " . ";
      render(b.continuation, level + 1, out);
      if (i + 1 < br->branches.size()) out += ',';
      out += '\n';
    }
    out += indent(level) + "}";
    return;
  }
  if (const auto* rec = t->as_rec()) {
    out += "rec " + rec->var.name + " . ";
    render(rec->body, level, out);
    return;
  }
  if (const auto* var = t->as_var()) {
    out += var->var.name;
    return;
  }
  if (t->is_end()) {
    out += "end";
    return;
  }
  out += "call " + t->as_call()->target.name;
}

}  // namespace

std::string print_type(const TypePtr& t) {
  std::string out;
  render(t, 0, out);
  return out;
}

std::string print_source(const TypePtr& main, const Declarations& decls) {
  std::string out;
  for (const auto& [name, body] : decls) {
    out += "let " + name.name + " = ";
    render(body, 0, out);
    out += ";\n\n";
  }
  out += "main = ";
  render(main, 0, out);
  out += ";\n";
  return out;
}

}  // namespace slt
