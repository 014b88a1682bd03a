#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "slt/ast.hpp"

namespace slt::testing {

struct GenLimits {
  int max_depth = 6;
  int max_roles = 4;
  int max_branches = 3;
  int max_rec = 2;
};

// Random closed, guarded, call-free types: well-formed by construction. A
// recursion variable is only emitted once a branching has been crossed since
// its binder, which is exactly the guardedness rule.
class TypeGen {
 public:
  explicit TypeGen(std::uint64_t seed, GenLimits limits = {}) : rng_(seed), limits_(limits) {}

  TypePtr global_type() {
    roles_.clear();
    int n = pick(2, limits_.max_roles);
    for (int i = 0; i < n; ++i) roles_.emplace_back("r" + std::to_string(i + 1));
    rec_budget_ = limits_.max_rec;
    rec_counter_ = 0;
    std::vector<Binder> binders;
    return gen(limits_.max_depth, binders);
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  struct Binder {
    RecVar var;
    bool guarded;
  };

  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Sort pick_sort() {
    switch (pick(0, 5)) {
      case 0:
      case 1:
      case 2: return Sort::Unit;  // biased so redundant sites are common
      case 3: return Sort::Nat;
      case 4: return Sort::Str;
      default: return Sort::Bool;
    }
  }

  TypePtr gen(int depth, std::vector<Binder>& binders) {
    std::vector<const RecVar*> eligible;
    for (const auto& b : binders) {
      if (b.guarded) eligible.push_back(&b.var);
    }
    if (depth == 0) {
      if (!eligible.empty() && pick(0, 2) == 0) {
        return make_var(*eligible[static_cast<std::size_t>(pick(0, int(eligible.size()) - 1))]);
      }
      return make_end();
    }
    int roll = pick(0, 99);
    if (roll < 15) return make_end();
    if (roll < 25 && !eligible.empty()) {
      return make_var(*eligible[static_cast<std::size_t>(pick(0, int(eligible.size()) - 1))]);
    }
    if (roll < 40 && rec_budget_ > 0) {
      --rec_budget_;
      RecVar var("t" + std::to_string(++rec_counter_));
      binders.push_back({var, false});
      TypePtr body = gen(depth - 1, binders);
      binders.pop_back();
      return make_rec(var, std::move(body));
    }
    return branching(depth, binders);
  }

  TypePtr branching(int depth, std::vector<Binder>& binders) {
    int sender = pick(0, int(roles_.size()) - 1);
    int receiver = pick(0, int(roles_.size()) - 2);
    if (receiver >= sender) ++receiver;
    int count = pick(1, limits_.max_branches);
    static const char* const kLabels[] = {"a", "b", "c", "d", "e"};
    std::vector<int> order{0, 1, 2, 3, 4};
    std::shuffle(order.begin(), order.end(), rng_);
    // crossing this node guards every binder in scope below it
    std::vector<Binder> guarded = binders;
    for (auto& b : guarded) b.guarded = true;
    std::vector<Branch> branches;
    branches.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
      branches.push_back({Label(kLabels[order[static_cast<std::size_t>(i)]]), pick_sort(),
                          gen(depth - 1, guarded)});
    }
    return make_branching(roles_[static_cast<std::size_t>(sender)],
                          roles_[static_cast<std::size_t>(receiver)], std::move(branches));
  }

  std::mt19937_64 rng_;
  GenLimits limits_;
  std::vector<Role> roles_;
  int rec_budget_ = 0;
  int rec_counter_ = 0;
};

}  // namespace slt::testing
