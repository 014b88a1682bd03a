#include "slt/ast.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace slt {

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  const auto head = static_cast<unsigned char>(s.front());
  if (!(std::isalpha(head) || head == '_')) return false;
  return std::all_of(s.begin() + 1, s.end(), [](char c) {
    const auto u = static_cast<unsigned char>(c);
    return std::isalnum(u) || u == '_';
  });
}

namespace detail {

std::string checked_identifier(std::string name, std::string_view what) {
  if (!is_identifier(name)) {
    throw std::invalid_argument("invalid " + std::string(what) + " identifier: '" + name + "'");
  }
  return name;
}

}  // namespace detail

std::string_view to_string(Sort s) {
  switch (s) {
    case Sort::Unit: return "unit";
    case Sort::Nat: return "nat";
    case Sort::Str: return "str";
    case Sort::Bool: return "bool";
  }
  return "unit";
}

TypePtr make_branching(Role sender, Role receiver, std::vector<Branch> branches,
                       std::optional<SourceLoc> loc) {
  if (sender == receiver) {
    throw std::invalid_argument("branching sender and receiver must differ: '" + sender.name + "'");
  }
  if (branches.empty()) {
    throw std::invalid_argument("branching must offer at least one branch");
  }
  std::set<Label> seen;
  for (const auto& b : branches) {
    if (!b.continuation) throw std::invalid_argument("branch continuation must not be null");
    if (!seen.insert(b.label).second) {
      throw std::invalid_argument("duplicate branch label: '" + b.label.name + "'");
    }
  }
  return std::make_shared<const LightType>(
      LightType::Branching{std::move(sender), std::move(receiver), std::move(branches)}, loc);
}

TypePtr make_rec(RecVar var, TypePtr body, std::optional<SourceLoc> loc) {
  if (!body) throw std::invalid_argument("rec body must not be null");
  return std::make_shared<const LightType>(LightType::Rec{std::move(var), std::move(body)}, loc);
}

TypePtr make_var(RecVar var, std::optional<SourceLoc> loc) {
  return std::make_shared<const LightType>(LightType::Var{std::move(var)}, loc);
}

TypePtr make_end(std::optional<SourceLoc> loc) {
  return std::make_shared<const LightType>(LightType::End{}, loc);
}

TypePtr make_call(DeclName target, std::optional<SourceLoc> loc) {
  return std::make_shared<const LightType>(LightType::Call{std::move(target)}, loc);
}

TypePtr make_interaction(Role sender, Role receiver, Label label, Sort sort, TypePtr cont) {
  std::vector<Branch> branches;
  branches.push_back(Branch{std::move(label), sort, std::move(cont)});
  return make_branching(std::move(sender), std::move(receiver), std::move(branches));
}

bool structurally_equal(const TypePtr& a, const TypePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->node().index() != b->node().index()) return false;
  if (const auto* ba = a->as_branching()) {
    const auto* bb = b->as_branching();
    if (ba->sender != bb->sender || ba->receiver != bb->receiver) return false;
    if (ba->branches.size() != bb->branches.size()) return false;
    for (std::size_t i = 0; i < ba->branches.size(); ++i) {
      const auto& x = ba->branches[i];
      const auto& y = bb->branches[i];
      if (x.label != y.label || x.sort != y.sort) return false;
      if (!structurally_equal(x.continuation, y.continuation)) return false;
    }
    return true;
  }
  if (const auto* ra = a->as_rec()) {
    const auto* rb = b->as_rec();
    return ra->var == rb->var && structurally_equal(ra->body, rb->body);
  }
  if (const auto* va = a->as_var()) {
    return va->var == b->as_var()->var;
  }
  if (a->is_end()) return true;
  return a->as_call()->target == b->as_call()->target;
}

std::size_t count_nodes(const TypePtr& t) {
  if (!t) return 0;
  std::size_t n = 1;
  if (const auto* br = t->as_branching()) {
    for (const auto& b : br->branches) n += count_nodes(b.continuation);
  } else if (const auto* rec = t->as_rec()) {
    n += count_nodes(rec->body);
  }
  return n;
}

void Declarations::add(DeclName name, TypePtr body) {
  if (!body) throw std::invalid_argument("declaration body must not be null");
  if (contains(name)) {
    throw std::invalid_argument("duplicate declaration name: '" + name.name + "'");
  }
  entries_.emplace_back(std::move(name), std::move(body));
}

void Declarations::merge(const Declarations& other) {
  for (const auto& [name, body] : other.entries_) add(name, body);
}

void Declarations::replace(const DeclName& name, TypePtr body) {
  if (!body) throw std::invalid_argument("declaration body must not be null");
  for (auto& [n, b] : entries_) {
    if (n == name) {
      b = std::move(body);
      return;
    }
  }
  throw std::invalid_argument("no declaration named '" + name.name + "'");
}

void Declarations::remove(const DeclName& name) {
  std::erase_if(entries_, [&](const Entry& e) { return e.first == name; });
}

const TypePtr* Declarations::find(const DeclName& name) const {
  for (const auto& [n, b] : entries_) {
    if (n == name) return &b;
  }
  return nullptr;
}

bool Declarations::contains(const DeclName& name) const { return find(name) != nullptr; }

bool structurally_equal(const Declarations& a, const Declarations& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.entries()[i].first != b.entries()[i].first) return false;
    if (!structurally_equal(a.entries()[i].second, b.entries()[i].second)) return false;
  }
  return true;
}

}  // namespace slt
