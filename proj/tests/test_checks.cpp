#include <doctest.h>

#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "groupkit/checks.hpp"
#include "groupkit/errors.hpp"
#include "groupkit/groupspec.hpp"
#include "oracle.hpp"

using namespace groupkit;

namespace {

GroupPtr make(const std::string& text) { return realize(parse_spec(text)); }

// First failing pair by double loop, for pinning witness minimality.
std::optional<Witness> scan_witness(const GroupPtr& g, const std::vector<Elem>& s) {
  std::set<Elem> sorted(s.begin(), s.end());
  for (Elem x : sorted) {
    for (Elem y : sorted) {
      int ox = oracle::naive_order(g, x);
      int oy = oracle::naive_order(g, y);
      if (std::gcd(ox, oy) != 1) continue;
      int op = oracle::naive_order(g, g->mul(x, y));
      if (op != ox * oy) return Witness{x, y, ox, oy, op};
    }
  }
  return std::nullopt;
}

std::vector<Elem> everything(const GroupPtr& g) {
  std::vector<Elem> all(static_cast<size_t>(g->order()));
  std::iota(all.begin(), all.end(), 0);
  return all;
}

}  // namespace

TEST_CASE("theorem selectors parse and print") {
  CHECK(TheoremSelector::parse("bw").kind == TheoremSelector::Kind::bw);
  CHECK(TheoremSelector::parse("bs").kind == TheoremSelector::Kind::bs);
  CHECK(TheoremSelector::parse("main").kind == TheoremSelector::Kind::main);
  TheoremSelector level3 = TheoremSelector::parse("level:3");
  CHECK(level3.kind == TheoremSelector::Kind::level);
  CHECK(level3.level == 3);
  for (const char* name : {"bw", "bs", "main", "level:1", "level:4"}) {
    CHECK(TheoremSelector::parse(name).name() == name);
  }
  for (const char* bad : {"level:0", "level:5", "level:", "level:x", "BW", "foo", ""}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(TheoremSelector::parse(bad), ParameterError);
  }
}

TEST_CASE("coprime product property and its least witness") {
  GroupPtr c6 = make("cyclic(6)");
  auto [ok_c6, w_c6] = coprime_product_property(c6, everything(c6));
  CHECK(ok_c6);
  CHECK_FALSE(w_c6.has_value());

  GroupPtr s3 = make("sym(3)");
  auto [ok_s3, w_s3] = coprime_product_property(s3, everything(s3));
  CHECK_FALSE(ok_s3);
  REQUIRE(w_s3.has_value());
  CHECK(w_s3->x == 1);
  CHECK(w_s3->y == 2);
  CHECK(w_s3->order_x == 2);
  CHECK(w_s3->order_y == 3);
  CHECK(w_s3->order_product == 2);

  // duplicated, unsorted input makes no difference
  auto [ok_dup, w_dup] = coprime_product_property(s3, {5, 1, 2, 2, 0, 1, 4, 3});
  CHECK(ok_dup == ok_s3);
  REQUIRE(w_dup.has_value());
  CHECK(w_dup->x == w_s3->x);
  CHECK(w_dup->y == w_s3->y);

  CHECK(coprime_product_property(s3, {}).first);
  CHECK(coprime_product_property(s3, {0, 2, 5}).first);  // no coprime pairs inside A3
  CHECK_THROWS_AS(coprime_product_property(s3, {17}), ParameterError);
}

TEST_CASE("reported witnesses are the lexicographically least failures") {
  for (const char* spec : {"sym(3)", "sym(4)", "dihedral(6)", "dicyclic(3)",
                           "semidirect(7,3,2)", "alt(5)"}) {
    CAPTURE(spec);
    GroupPtr g = make(spec);
    auto [ok, witness] = coprime_product_property(g, everything(g));
    std::optional<Witness> expect = scan_witness(g, everything(g));
    CHECK(ok == !expect.has_value());
    REQUIRE(witness.has_value() == expect.has_value());
    if (expect) {
      CHECK(witness->x == expect->x);
      CHECK(witness->y == expect->y);
      CHECK(witness->order_x == expect->order_x);
      CHECK(witness->order_y == expect->order_y);
      CHECK(witness->order_product == expect->order_product);
    }
  }
}

TEST_CASE("whole-group check ties the property to nilpotency") {
  CheckVerdict nil = theorem_check(make("cyclic(12)"), TheoremSelector::parse("bw"));
  CHECK(nil.check_name == "bw");
  CHECK(nil.hypothesis);
  CHECK(nil.conclusion);
  CHECK(nil.sound);
  CHECK_FALSE(nil.open_conjecture);
  CHECK_FALSE(nil.witness.has_value());

  CheckVerdict s3 = theorem_check(make("sym(3)"), TheoremSelector::parse("bw"));
  CHECK_FALSE(s3.hypothesis);
  CHECK_FALSE(s3.conclusion);
  CHECK(s3.sound);
  REQUIRE(s3.witness.has_value());
  CHECK(s3.witness->x == 1);
  CHECK(s3.witness->y == 2);
}

TEST_CASE("commutator-set check against derived-subgroup nilpotency") {
  CheckVerdict s3 = theorem_check(make("sym(3)"), TheoremSelector::parse("bs"));
  CHECK(s3.hypothesis);  // commutators of sym(3) share the odd prime
  CHECK(s3.conclusion);
  CHECK(s3.sound);

  CheckVerdict s4 = theorem_check(make("sym(4)"), TheoremSelector::parse("bs"));
  CHECK_FALSE(s4.hypothesis);  // commutators form A4, which has coprime failures
  CHECK_FALSE(s4.conclusion);
  CHECK(s4.sound);
  REQUIRE(s4.witness.has_value());

  CheckVerdict a5 = theorem_check(make("alt(5)"), TheoremSelector::parse("bs"));
  CHECK_FALSE(a5.hypothesis);
  CHECK(a5.sound);
}

TEST_CASE("main check combines residual nilpotency with height two") {
  CheckVerdict good = theorem_check(make("semidirect(7,3,2)"), TheoremSelector::parse("main"));
  CHECK(good.hypothesis);
  CHECK(good.conclusion);
  CHECK(good.sound);
  CHECK_FALSE(good.open_conjecture);

  CheckVerdict s4 = theorem_check(make("sym(4)"), TheoremSelector::parse("main"));
  CHECK_FALSE(s4.hypothesis);  // height 3 forces a failure somewhere in X
  CHECK_FALSE(s4.conclusion);
  CHECK(s4.sound);
  REQUIRE(s4.witness.has_value());
  CHECK(s4.witness->x == 3);
  CHECK(s4.witness->y == 5);
  CHECK(s4.witness->order_x == 3);
  CHECK(s4.witness->order_y == 2);
  CHECK(s4.witness->order_product == 3);

  CheckVerdict nil = theorem_check(make("dihedral(4)"), TheoremSelector::parse("main"));
  CHECK(nil.hypothesis);  // nilpotent: no coprime pairs beyond the identity
  CHECK(nil.conclusion);
}

TEST_CASE("level checks mark the open question") {
  GroupPtr s4 = make("sym(4)");
  CheckVerdict level1 = theorem_check(s4, TheoremSelector::parse("level:1"));
  CHECK(level1.check_name == "level:1");
  CHECK_FALSE(level1.open_conjecture);
  CHECK_FALSE(level1.hypothesis);  // same X as the main check
  CHECK(level1.sound);

  CheckVerdict level2 = theorem_check(s4, TheoremSelector::parse("level:2"));
  CHECK(level2.check_name == "level:2");
  CHECK(level2.open_conjecture);
  CHECK(level2.hypothesis);  // powers of the level-2 set: only 2-elements remain
  CHECK(level2.conclusion);  // D2(S4) = V4 is nilpotent
  CHECK(level2.sound);

  CheckVerdict level3 = theorem_check(s4, TheoremSelector::parse("level:3"));
  CHECK(level3.hypothesis);
  CHECK(level3.conclusion);
  CHECK(level3.open_conjecture);
}

TEST_CASE("whole-group equivalence holds on a small sweep") {
  for (const char* spec : {"cyclic(1)", "cyclic(7)", "cyclic(12)", "dihedral(4)",
                           "dihedral(6)", "sym(3)", "sym(4)", "alt(4)", "alt(5)",
                           "dicyclic(2)", "dicyclic(3)", "semidirect(7,3,2)",
                           "product(sym(3),cyclic(2))"}) {
    CAPTURE(spec);
    CHECK(bw_equivalence(make(spec)));
  }
}

TEST_CASE("coprime action decomposes the normal subgroup") {
  GroupPtr s4 = make("sym(4)");
  Subgroup v4 = p_core(s4, 2);
  Subgroup p3 = sylow_subgroup(s4, 3);
  CHECK(coprime_action_check(s4, v4, p3));

  GroupPtr w = make("semidirect(7,3,2)");
  Subgroup c7 = p_core(w, 7);
  Subgroup c3 = sylow_subgroup(w, 3);
  REQUIRE(c7.size() == 7);
  REQUIRE(c3.size() == 3);
  CHECK(coprime_action_check(w, c7, c3));
  CHECK(commutator_subgroup(c7, c3).size() == 7);
  CHECK(intersect(c7, centralizer(w, c3.members())).is_trivial());

  // trivial acting subgroup: C_N(A) is all of N
  CHECK(coprime_action_check(s4, v4, Subgroup::trivial(s4)));

  Subgroup a4 = normal_closure(s4, {3});
  CHECK_THROWS_AS(coprime_action_check(s4, a4, sylow_subgroup(s4, 2)), HypothesisError);
  Subgroup c4 = generated_subgroup(s4, {2});
  CHECK_THROWS_AS(coprime_action_check(s4, c4, p3), HypothesisError);  // not normal
  GroupPtr s3 = make("sym(3)");
  CHECK_THROWS_AS(coprime_action_check(s4, v4, Subgroup::whole(s3)), ParameterError);
}

TEST_CASE("normal closure family lists each closure once") {
  GroupPtr s4 = make("sym(4)");
  std::vector<Subgroup> family = normal_closure_family(s4);
  std::multiset<int> sizes;
  for (const Subgroup& n : family) {
    sizes.insert(n.size());
    CHECK(n.is_normal());
  }
  CHECK(sizes == std::multiset<int>{1, 4, 12, 24});
  CHECK(family.front().is_trivial());

  GroupPtr c6 = make("cyclic(6)");
  std::multiset<int> c6_sizes;
  for (const Subgroup& n : normal_closure_family(c6)) c6_sizes.insert(n.size());
  CHECK(c6_sizes == std::multiset<int>{1, 2, 3, 6});

  std::multiset<int> s3_sizes;
  for (const Subgroup& n : normal_closure_family(make("sym(3)"))) {
    s3_sizes.insert(n.size());
  }
  CHECK(s3_sizes == std::multiset<int>{1, 3, 6});
}

TEST_CASE("centralizing check on the level-1 power closure") {
  CheckVerdict s3 = lemma3_check(make("sym(3)"));
  CHECK(s3.check_name == "lemma3");
  CHECK(s3.hypothesis);
  CHECK(s3.conclusion);
  CHECK(s3.sound);
  CHECK(s3.note.find("normal closures") != std::string::npos);

  CheckVerdict good = lemma3_check(make("semidirect(7,3,2)"));
  CHECK(good.hypothesis);
  CHECK(good.conclusion);

  // hypothesis fails on sym(4): conclusion is vacuous, witness explains why
  CheckVerdict s4 = lemma3_check(make("sym(4)"));
  CHECK_FALSE(s4.hypothesis);
  CHECK(s4.conclusion);
  CHECK(s4.sound);
  REQUIRE(s4.witness.has_value());
  CHECK(s4.witness->x == 3);
  CHECK(s4.witness->y == 5);

  // non-vacuous coprime case: the central C2 of sym(3) x C2 must be
  // centralized by the order-3 part of X
  GroupPtr d6 = make("product(sym(3),cyclic(2))");
  CheckVerdict v = lemma3_check(d6);
  CHECK(v.hypothesis);
  CHECK(v.conclusion);
  bool has_c2 = false;
  for (const Subgroup& n : normal_closure_family(d6)) has_c2 |= n.size() == 2;
  CHECK(has_c2);
}
