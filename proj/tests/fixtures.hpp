#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "slt/ast.hpp"

namespace slt::testing {

inline std::string data_dir() { return SLT_TEST_DATA_DIR; }

inline std::string data_file(const std::string& name) { return data_dir() + "/" + name; }

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

inline Branch br(const char* label, Sort sort, TypePtr cont) {
  return {Label(label), sort, std::move(cont)};
}

inline TypePtr choice(const char* sender, const char* receiver, std::vector<Branch> branches) {
  return make_branching(Role(sender), Role(receiver), std::move(branches));
}

inline TypePtr msg(const char* sender, const char* receiver, const char* label, Sort sort,
                   TypePtr cont) {
  return make_interaction(Role(sender), Role(receiver), Label(label), sort, std::move(cont));
}

// The one-piece gift protocol: req consults map, issuer and store in turn;
// every refusal is relayed to the participants still waiting.
inline TypePtr gift_global() {
  TypePtr store_reply =
      choice("store", "req", {br("yes3", Sort::Str, make_end()), br("no3", Sort::Unit, make_end())});
  TypePtr issuer_reply =
      choice("issuer", "req",
             {br("yes2", Sort::Nat, msg("req", "store", "req3", Sort::Nat, store_reply)),
              br("no2", Sort::Unit, msg("req", "store", "no4", Sort::Unit, make_end()))});
  TypePtr map_reply =
      choice("map", "req",
             {br("yes1", Sort::Str, msg("req", "issuer", "req2", Sort::Str, issuer_reply)),
              br("no1", Sort::Unit,
                 msg("req", "issuer", "no5", Sort::Unit,
                     msg("req", "store", "no6", Sort::Unit, make_end())))});
  return msg("req", "map", "req1", Sort::Str, map_reply);
}

// The three call-linked pieces the gift protocol splits into.
inline TypePtr gift_lc() {
  return msg("req", "store", "req3", Sort::Nat,
             choice("store", "req",
                    {br("yes3", Sort::Str, make_end()), br("no3", Sort::Unit, make_end())}));
}

inline TypePtr gift_lb(const DeclName& lc) {
  return msg("req", "issuer", "req2", Sort::Str,
             choice("issuer", "req",
                    {br("yes2", Sort::Nat, make_call(lc)), br("no2", Sort::Unit, make_end())}));
}

inline TypePtr gift_la(const DeclName& lb) {
  return msg("req", "map", "req1", Sort::Str,
             choice("map", "req",
                    {br("yes1", Sort::Str, make_call(lb)), br("no1", Sort::Unit, make_end())}));
}

// The halfway point: only the store leg has been moved out.
inline TypePtr gift_la_prime(const DeclName& lc) {
  TypePtr issuer_reply =
      choice("issuer", "req",
             {br("yes2", Sort::Nat, make_call(lc)), br("no2", Sort::Unit, make_end())});
  return msg("req", "map", "req1", Sort::Str,
             choice("map", "req",
                    {br("yes1", Sort::Str, msg("req", "issuer", "req2", Sort::Str, issuer_reply)),
                     br("no1", Sort::Unit,
                        msg("req", "issuer", "no5", Sort::Unit, make_end()))}));
}

// rec t . r1->r2:{ goon(nat). r2->r3:goon(nat). t, stop(). r2->r3:stop(). end }
// — the stop() exchanges are single-branch and unit but sit under the rec
// binder, so nothing here may be removed.
inline TypePtr mu_stop() {
  return make_rec(
      RecVar("t"),
      choice("r1", "r2",
             {br("goon", Sort::Nat,
                 msg("r2", "r3", "goon", Sort::Nat, make_var(RecVar("t")))),
              br("stop", Sort::Unit, msg("r2", "r3", "stop", Sort::Unit, make_end()))}));
}

}  // namespace slt::testing
