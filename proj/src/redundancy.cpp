#include "slt/redundancy.hpp"

#include <string>
#include <string_view>

namespace slt {

std::string ContextPath::render() const {
  if (steps.empty()) return "/";
  std::string out;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (i > 0) out += '/';
    out += steps[i].name;
  }
  return out;
}

std::optional<ContextPath> ContextPath::parse(std::string_view text) {
  ContextPath path;
  if (text.empty() || text == "/") return path;
  std::size_t start = 0;
  while (true) {
    std::size_t slash = text.find('/', start);
    std::string_view seg =
        slash == std::string_view::npos ? text.substr(start) : text.substr(start, slash - start);
    if (!is_identifier(seg)) return std::nullopt;
    path.steps.emplace_back(std::string(seg));
    if (slash == std::string_view::npos) break;
    start = slash + 1;
  }
  return path;
}

namespace {

void collect(const TypePtr& t, ContextPath& path, std::vector<RedundantSite>& out) {
  const auto* br = t->as_branching();
  if (br == nullptr) return;  // rec, var, end, call: no frames below
  if (br->branches.size() == 1 && br->branches.front().sort == Sort::Unit) {
    const auto& b = br->branches.front();
    out.push_back({path, br->sender, br->receiver, b.label, b.continuation});
  }
  for (const auto& b : br->branches) {
    path.steps.push_back(b.label);
    collect(b.continuation, path, out);
    path.steps.pop_back();
  }
}

}  // namespace

std::vector<RedundantSite> find_redundant(const TypePtr& t) {
  std::vector<RedundantSite> out;
  ContextPath path;
  collect(t, path, out);
  return out;
}

TypePtr resolve_path(const TypePtr& t, const ContextPath& path) {
  TypePtr cur = t;
  for (const auto& step : path.steps) {
    const auto* br = cur->as_branching();
    if (br == nullptr) return nullptr;
    const Branch* hit = nullptr;
    for (const auto& b : br->branches) {
      if (b.label == step) {
        hit = &b;
        break;
      }
    }
    if (hit == nullptr) return nullptr;
    cur = hit->continuation;
  }
  return cur;
}

}  // namespace slt
