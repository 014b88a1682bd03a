#include <stdexcept>

#include "doctest.h"
#include "fixtures.hpp"
#include "slt/ast.hpp"

using namespace slt;
using namespace slt::testing;

TEST_CASE("identifiers are validated at construction") {
  CHECK(is_identifier("req"));
  CHECK(is_identifier("_x9"));
  CHECK_FALSE(is_identifier(""));
  CHECK_FALSE(is_identifier("9x"));
  CHECK_FALSE(is_identifier("a-b"));
  CHECK_THROWS_AS(Role("not an id"), std::invalid_argument);
  CHECK_THROWS_AS(Label(""), std::invalid_argument);
}

TEST_CASE("branching factories reject degenerate nodes") {
  CHECK_THROWS_AS(make_branching(Role("a"), Role("a"), {br("x", Sort::Unit, make_end())}),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_branching(Role("a"), Role("b"), {}), std::invalid_argument);
  CHECK_THROWS_AS(make_branching(Role("a"), Role("b"),
                                 {br("x", Sort::Unit, make_end()), br("x", Sort::Nat, make_end())}),
                  std::invalid_argument);
}

TEST_CASE("structural equality ignores locations but not names or order") {
  TypePtr a = msg("a", "b", "hi", Sort::Nat, make_end());
  TypePtr b = msg("a", "b", "hi", Sort::Nat, make_end());
  CHECK(structurally_equal(a, b));
  CHECK_FALSE(structurally_equal(a, msg("a", "b", "hi", Sort::Str, make_end())));
  CHECK_FALSE(structurally_equal(a, msg("a", "c", "hi", Sort::Nat, make_end())));

  TypePtr two = choice("a", "b", {br("x", Sort::Unit, make_end()), br("y", Sort::Unit, make_end())});
  TypePtr swapped =
      choice("a", "b", {br("y", Sort::Unit, make_end()), br("x", Sort::Unit, make_end())});
  CHECK_FALSE(structurally_equal(two, swapped));

  TypePtr located = make_end(SourceLoc{3, 7});
  CHECK(structurally_equal(located, make_end()));
}

TEST_CASE("count_nodes counts every node once") {
  CHECK(count_nodes(make_end()) == 1);
  CHECK(count_nodes(gift_global()) == 13);  // 9 branchings + 4 ends
  CHECK(count_nodes(mu_stop()) == 6);       // rec + 3 branchings + variable + end
}

TEST_CASE("declarations keep order and reject duplicates") {
  Declarations d;
  d.add(DeclName("b"), make_end());
  d.add(DeclName("a"), make_end());
  CHECK(d.size() == 2);
  CHECK(d.entries()[0].first == DeclName("b"));
  CHECK_THROWS_AS(d.add(DeclName("a"), make_end()), std::invalid_argument);
  CHECK(d.contains(DeclName("a")));
  CHECK(d.find(DeclName("c")) == nullptr);

  Declarations more;
  more.add(DeclName("c"), make_end());
  d.merge(more);
  CHECK(d.size() == 3);
  CHECK(d.entries()[2].first == DeclName("c"));

  d.replace(DeclName("a"), msg("x", "y", "l", Sort::Unit, make_end()));
  CHECK(d.entries()[1].first == DeclName("a"));
  CHECK(d.entries()[1].second->as_branching() != nullptr);

  d.remove(DeclName("b"));
  CHECK(d.size() == 2);
  CHECK(d.entries()[0].first == DeclName("a"));
}

TEST_CASE("well_formed accepts the example fixtures") {
  CHECK(well_formed(gift_global(), {}).empty());
  CHECK(well_formed(mu_stop(), {}).empty());

  Declarations decls;
  decls.add(DeclName("lb"), gift_lb(DeclName("lc")));
  decls.add(DeclName("lc"), gift_lc());
  CHECK(well_formed(gift_la(DeclName("lb")), decls).empty());
}

TEST_CASE("well_formed rejects unguarded recursion") {
  TypePtr direct = make_rec(RecVar("t"), make_var(RecVar("t")));
  auto diags = well_formed(direct, {});
  REQUIRE(diags.size() == 1);
  CHECK(diags[0].code == DiagCode::UnguardedRec);

  // the inner occurrence is guarded by nothing between binder and use
  TypePtr nested = make_rec(RecVar("t"), make_rec(RecVar("u"), make_var(RecVar("t"))));
  diags = well_formed(nested, {});
  REQUIRE(diags.size() == 1);
  CHECK(diags[0].code == DiagCode::UnguardedRec);

  // vacuous binders and guarded uses are fine
  CHECK(well_formed(make_rec(RecVar("t"), make_end()), {}).empty());
  TypePtr guarded = make_rec(RecVar("t"), msg("a", "b", "go", Sort::Unit, make_var(RecVar("t"))));
  CHECK(well_formed(guarded, {}).empty());

  // shadowing: the occurrence belongs to the inner binder, with no branching
  // in between
  TypePtr shadowed = make_rec(
      RecVar("t"), msg("a", "b", "go", Sort::Unit,
                       make_rec(RecVar("t"), make_var(RecVar("t")))));
  diags = well_formed(shadowed, {});
  REQUIRE(diags.size() == 1);
  CHECK(diags[0].code == DiagCode::UnguardedRec);
}

TEST_CASE("well_formed rejects free variables and unbound or cyclic calls") {
  auto diags = well_formed(make_var(RecVar("t")), {});
  REQUIRE(diags.size() == 1);
  CHECK(diags[0].code == DiagCode::FreeVar);

  diags = well_formed(make_call(DeclName("nope")), {});
  REQUIRE(diags.size() == 1);
  CHECK(diags[0].code == DiagCode::UnboundCall);

  Declarations cyc;
  cyc.add(DeclName("p"), make_call(DeclName("q")));
  cyc.add(DeclName("q"), make_call(DeclName("p")));
  diags = well_formed(make_call(DeclName("p")), cyc);
  REQUIRE(!diags.empty());
  bool has_cycle = false;
  for (const auto& d : diags) has_cycle = has_cycle || d.code == DiagCode::CyclicCalls;
  CHECK(has_cycle);

  Declarations self;
  self.add(DeclName("p"), make_call(DeclName("p")));
  diags = well_formed(make_end(), self);
  REQUIRE(!diags.empty());
  CHECK(diags[0].code == DiagCode::CyclicCalls);
}

TEST_CASE("is_global recognizes the call-free closed fragment") {
  CHECK(is_global(gift_global()));
  CHECK(is_global(mu_stop()));
  CHECK_FALSE(is_global(make_call(DeclName("x"))));
  CHECK_FALSE(is_global(make_var(RecVar("t"))));
  CHECK_FALSE(is_global(gift_la(DeclName("lb"))));
}

TEST_CASE("roles_of follows calls transitively") {
  auto roles = roles_of(gift_global(), {});
  CHECK(roles == std::set<Role>{Role("req"), Role("map"), Role("issuer"), Role("store")});

  Declarations decls;
  decls.add(DeclName("lb"), gift_lb(DeclName("lc")));
  decls.add(DeclName("lc"), gift_lc());
  roles = roles_of(gift_la(DeclName("lb")), decls);
  CHECK(roles.size() == 4);
  CHECK(roles.count(Role("store")) == 1);

  CHECK_THROWS_AS(roles_of(make_call(DeclName("nope")), {}), Error);
}

TEST_CASE("alpha equality renames declarations and recursion variables") {
  Declarations d1;
  d1.add(DeclName("lb"), gift_lb(DeclName("lc")));
  d1.add(DeclName("lc"), gift_lc());
  Declarations d2;
  d2.add(DeclName("L1"), gift_lc());
  d2.add(DeclName("L2"), gift_lb(DeclName("L1")));
  CHECK(alpha_eq_decls(gift_la(DeclName("lb")), d1, gift_la(DeclName("L2")), d2));

  // recursion variables rename consistently
  TypePtr rec1 = make_rec(RecVar("t"), msg("a", "b", "go", Sort::Unit, make_var(RecVar("t"))));
  TypePtr rec2 = make_rec(RecVar("u"), msg("a", "b", "go", Sort::Unit, make_var(RecVar("u"))));
  CHECK(alpha_eq_decls(rec1, {}, rec2, {}));

  // branch order is immaterial, labels are not
  TypePtr two = choice("a", "b", {br("x", Sort::Unit, make_end()), br("y", Sort::Nat, make_end())});
  TypePtr swapped =
      choice("a", "b", {br("y", Sort::Nat, make_end()), br("x", Sort::Unit, make_end())});
  CHECK(alpha_eq_decls(two, {}, swapped, {}));
  TypePtr renamed =
      choice("a", "b", {br("x", Sort::Unit, make_end()), br("z", Sort::Nat, make_end())});
  CHECK_FALSE(alpha_eq_decls(two, {}, renamed, {}));

  // roles never rename
  CHECK_FALSE(alpha_eq_decls(msg("a", "b", "l", Sort::Unit, make_end()), {},
                             msg("a", "c", "l", Sort::Unit, make_end()), {}));

  // distinct declaration bodies do not pair up
  Declarations d3;
  d3.add(DeclName("L1"), msg("a", "b", "l", Sort::Unit, make_end()));
  Declarations d4;
  d4.add(DeclName("L1"), msg("a", "b", "other", Sort::Unit, make_end()));
  CHECK_FALSE(alpha_eq_decls(make_call(DeclName("L1")), d3, make_call(DeclName("L1")), d4));
}
