#include "slt/lightener.hpp"

#include <stdexcept>
#include <utility>

#include "slt/diagnostics.hpp"

namespace slt {

FreshNamer::FreshNamer(std::string prefix, const Declarations& existing)
    : prefix_(std::move(prefix)) {
  for (const auto& [name, body] : existing) taken_.insert(name);
}

DeclName FreshNamer::issue() {
  while (true) {
    DeclName candidate(prefix_ + std::to_string(++counter_));
    if (taken_.insert(candidate).second) return candidate;
  }
}

void FreshNamer::reserve(const DeclName& name) { taken_.insert(name); }

LighteningResult descend(const TypePtr& t, const Role& r, FreshNamer& namer) {
  const auto* br = t->as_branching();
  if (br == nullptr) return {t, {}};  // end, variable, call and rec are untouched
  if (br->receiver == r) {
    if (br->branches.size() == 1 && br->branches.front().sort == Sort::Unit)
      return {br->branches.front().continuation, {}};
    Declarations minted;
    DeclName fresh = namer.issue();
    minted.add(fresh, t);
    return {make_call(std::move(fresh)), std::move(minted)};
  }
  std::vector<Branch> rebuilt;
  rebuilt.reserve(br->branches.size());
  Declarations minted;
  for (const auto& b : br->branches) {
    LighteningResult sub = descend(b.continuation, r, namer);
    rebuilt.push_back({b.label, b.sort, std::move(sub.result)});
    minted.merge(sub.new_decls);
  }
  return {make_branching(br->sender, br->receiver, std::move(rebuilt), t->loc()),
          std::move(minted)};
}

namespace {

// True when the path still addresses a single-branch unit interaction with
// the site's endpoints and label.
bool site_intact(const TypePtr& t, const RedundantSite& site) {
  TypePtr at = resolve_path(t, site.path);
  if (at == nullptr) return false;
  const auto* br = at->as_branching();
  if (br == nullptr || br->branches.size() != 1) return false;
  const Branch& b = br->branches.front();
  return b.sort == Sort::Unit && b.label == site.label && br->sender == site.sender &&
         br->receiver == site.receiver;
}

// C[site] -> C[continuation]: drops the site node, rebuilding only the spine
// along the path.
TypePtr erase_in_place(const TypePtr& t, const Label* steps, std::size_t depth) {
  const auto* br = t->as_branching();
  if (depth == 0) return br->branches.front().continuation;
  std::vector<Branch> rebuilt;
  rebuilt.reserve(br->branches.size());
  for (const auto& b : br->branches) {
    if (b.label == steps[0]) {
      rebuilt.push_back({b.label, b.sort, erase_in_place(b.continuation, steps + 1, depth - 1)});
    } else {
      rebuilt.push_back(b);
    }
  }
  return make_branching(br->sender, br->receiver, std::move(rebuilt), t->loc());
}

LighteningResult eliminate_from(const TypePtr& t, const Label* steps, std::size_t depth,
                                const RedundantSite& site, FreshNamer& namer) {
  const auto* br = t->as_branching();
  if (depth == 0) return {br->branches.front().continuation, {}};
  if (site.receiver == br->sender || site.receiver == br->receiver)
    return {erase_in_place(t, steps, depth), {}};
  std::vector<Branch> rebuilt;
  rebuilt.reserve(br->branches.size());
  Declarations minted;
  for (const auto& b : br->branches) {
    LighteningResult sub = b.label == steps[0]
                               ? eliminate_from(b.continuation, steps + 1, depth - 1, site, namer)
                               : descend(b.continuation, site.receiver, namer);
    rebuilt.push_back({b.label, b.sort, std::move(sub.result)});
    minted.merge(sub.new_decls);
  }
  return {make_branching(br->sender, br->receiver, std::move(rebuilt), t->loc()),
          std::move(minted)};
}

std::size_t site_count(const TypePtr& main, const Declarations& decls) {
  std::size_t n = find_redundant(main).size();
  for (const auto& [name, body] : decls) n += find_redundant(body).size();
  return n;
}

// call `from` -> call `to` everywhere in t; shares unchanged subtrees.
TypePtr replace_calls(const TypePtr& t, const DeclName& from, const DeclName& to) {
  if (const auto* call = t->as_call()) {
    return call->target == from ? make_call(to, t->loc()) : t;
  }
  if (const auto* br = t->as_branching()) {
    std::vector<Branch> rebuilt;
    rebuilt.reserve(br->branches.size());
    bool changed = false;
    for (const auto& b : br->branches) {
      TypePtr cont = replace_calls(b.continuation, from, to);
      changed = changed || cont != b.continuation;
      rebuilt.push_back({b.label, b.sort, std::move(cont)});
    }
    return changed ? make_branching(br->sender, br->receiver, std::move(rebuilt), t->loc()) : t;
  }
  if (const auto* rec = t->as_rec()) {
    TypePtr body = replace_calls(rec->body, from, to);
    return body == rec->body ? t : make_rec(rec->var, std::move(body), t->loc());
  }
  return t;
}

}  // namespace

LighteningResult eliminate(const TypePtr& t, const RedundantSite& site, FreshNamer& namer) {
  if (!site_intact(t, site)) {
    throw Error(error_at(DiagCode::SiteStale,
                         "no single-branch unit interaction " + site.sender.name + " -> " +
                             site.receiver.name + " : " + site.label.name + "() at this path",
                         std::nullopt, site.path.render()));
  }
  return eliminate_from(t, site.path.steps.data(), site.path.steps.size(), site, namer);
}

LightenResult lighten_fully(const TypePtr& main, const Declarations& decls,
                            const std::string& prefix) {
  LightenResult out{main, decls, {}};
  FreshNamer namer(prefix, decls);
  std::size_t before = site_count(out.main, out.decls);
  while (true) {
    bool stepped = false;
    std::vector<RedundantSite> sites = find_redundant(out.main);
    if (!sites.empty()) {
      LighteningResult step = eliminate(out.main, sites.front(), namer);
      out.main = std::move(step.result);
      for (const auto& [name, body] : step.new_decls) out.fresh_names.push_back(name);
      out.decls.merge(step.new_decls);
      stepped = true;
    } else {
      for (std::size_t i = 0; i < out.decls.size() && !stepped; ++i) {
        DeclName name = out.decls.entries()[i].first;
        TypePtr body = out.decls.entries()[i].second;
        sites = find_redundant(body);
        if (sites.empty()) continue;
        LighteningResult step = eliminate(body, sites.front(), namer);
        out.decls.replace(name, std::move(step.result));
        for (const auto& [fresh, fresh_body] : step.new_decls) out.fresh_names.push_back(fresh);
        out.decls.merge(step.new_decls);
        stepped = true;
      }
    }
    if (!stepped) break;
    std::size_t after = site_count(out.main, out.decls);
    if (after >= before) throw std::logic_error("redundant-site count failed to decrease");
    before = after;
  }
  return out;
}

LightenResult dedup_declarations(const LightenResult& in) {
  LightenResult out = in;
  std::set<DeclName> fresh(out.fresh_names.begin(), out.fresh_names.end());
  bool changed = true;
  while (changed) {
    changed = false;
    const auto& entries = out.decls.entries();
    for (std::size_t j = 0; j < entries.size() && !changed; ++j) {
      if (fresh.count(entries[j].first) == 0) continue;
      for (std::size_t i = 0; i < j && !changed; ++i) {
        if (!alpha_eq_decls(entries[i].second, out.decls, entries[j].second, out.decls)) continue;
        DeclName keep = entries[i].first;
        DeclName drop = entries[j].first;
        out.main = replace_calls(out.main, drop, keep);
        std::vector<Declarations::Entry> rewritten;
        for (const auto& [name, body] : out.decls) {
          if (name == drop) continue;
          TypePtr next = replace_calls(body, drop, keep);
          if (next != body) rewritten.emplace_back(name, std::move(next));
        }
        for (auto& [name, body] : rewritten) out.decls.replace(name, std::move(body));
        out.decls.remove(drop);
        std::erase(out.fresh_names, drop);
        fresh.erase(drop);
        changed = true;
      }
    }
  }
  return out;
}

}  // namespace slt
