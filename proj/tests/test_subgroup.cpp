#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "groupkit/errors.hpp"
#include "groupkit/groupspec.hpp"
#include "groupkit/subgroup.hpp"
#include "oracle.hpp"

using namespace groupkit;

namespace {

GroupPtr make(const std::string& text) { return realize(parse_spec(text)); }

std::set<Elem> as_set(const Subgroup& h) {
  return std::set<Elem>(h.members().begin(), h.members().end());
}

// sym(4) is generated from (0 1) and (0 1 2 3); the first few discovery
// indices are pinned down by the group-core tests: 1 = (0 1), 2 = (0 1 2 3),
// 3 = a 3-cycle, 5 = a double transposition.
const Elem kTransposition = 1;
const Elem kFourCycle = 2;
const Elem kThreeCycle = 3;
const Elem kDoubleTransposition = 5;

}  // namespace

TEST_CASE("membership constructor accepts exactly the closed subsets") {
  GroupPtr g = make("sym(3)");
  Subgroup a3(g, {5, 0, 2});  // unsorted on purpose
  CHECK(a3.members() == std::vector<Elem>{0, 2, 5});
  CHECK(a3.size() == 3);
  CHECK(a3.contains(2));
  CHECK_FALSE(a3.contains(1));
  CHECK(a3.is_normal());
  CHECK_FALSE(a3.is_trivial());
  CHECK_FALSE(a3.is_whole());

  CHECK_THROWS_AS(Subgroup(g, {0, 1, 2}), ValidationError);  // not closed
  CHECK_THROWS_AS(Subgroup(g, {2, 5}), ValidationError);     // misses identity
  CHECK_THROWS_AS(Subgroup(g, {}), ValidationError);
  CHECK_THROWS_AS(Subgroup(g, {0, 9}), ParameterError);
}

TEST_CASE("whole and trivial subgroups") {
  GroupPtr g = make("cyclic(5)");
  CHECK(Subgroup::whole(g).is_whole());
  CHECK(Subgroup::whole(g).size() == 5);
  CHECK(Subgroup::trivial(g).is_trivial());
  CHECK(Subgroup::trivial(g).members() == std::vector<Elem>{0});
}

TEST_CASE("generated subgroups match pairwise-product closure") {
  for (const char* spec : {"sym(4)", "dicyclic(3)", "semidirect(7,3,2)"}) {
    GroupPtr g = make(spec);
    CAPTURE(spec);
    std::vector<std::vector<Elem>> seed_sets{
        {}, {1}, {2}, {1, 2}, {3, 5}, {g->order() - 1}};
    for (const auto& seeds : seed_sets) {
      Subgroup got = generated_subgroup(g, seeds);
      std::set<Elem> expect =
          oracle::closure(g, std::set<Elem>(seeds.begin(), seeds.end()));
      CHECK(as_set(got) == expect);
    }
  }
  GroupPtr g = make("sym(3)");
  CHECK(generated_subgroup(g, {}).is_trivial());
  CHECK(generated_subgroup(g, {2}).members() == std::vector<Elem>{0, 2, 5});
}

TEST_CASE("normal closure grows seeds to a normal subgroup") {
  GroupPtr s4 = make("sym(4)");
  Subgroup v4 = normal_closure(s4, {kDoubleTransposition});
  CHECK(v4.size() == 4);
  CHECK(v4.is_normal());
  Subgroup a4 = normal_closure(s4, {kThreeCycle});
  CHECK(a4.size() == 12);
  CHECK(a4.is_normal());
  CHECK(a4.contains_all(v4));
  CHECK_FALSE(v4.contains_all(a4));

  GroupPtr s3 = make("sym(3)");
  CHECK(normal_closure(s3, {1}).is_whole());
  CHECK(normal_closure(s3, {}).is_trivial());
}

TEST_CASE("centralizer collects exactly the commuting elements") {
  GroupPtr s3 = make("sym(3)");
  Subgroup c = centralizer(s3, {2});
  CHECK(c.members() == std::vector<Elem>{0, 2, 5});
  CHECK(centralizer(s3, {0}).is_whole());
  CHECK_THROWS_AS(centralizer(s3, {}), ParameterError);
  for (Elem x = 0; x < s3->order(); ++x) {
    bool commutes = s3->mul(x, 2) == s3->mul(2, x);
    CHECK(c.contains(x) == commutes);
  }
}

TEST_CASE("normalizer of a four-cycle subgroup of sym(4) is dihedral") {
  GroupPtr s4 = make("sym(4)");
  Subgroup c4 = generated_subgroup(s4, {kFourCycle});
  REQUIRE(c4.size() == 4);
  Subgroup n = normalizer(s4, c4);
  CHECK(n.size() == 8);
  CHECK(n.contains_all(c4));
  Subgroup a4 = normal_closure(s4, {kThreeCycle});
  CHECK(normalizer(s4, a4).is_whole());
}

TEST_CASE("intersection of subgroups") {
  GroupPtr s4 = make("sym(4)");
  Subgroup a4 = normal_closure(s4, {kThreeCycle});
  Subgroup c4 = generated_subgroup(s4, {kFourCycle});
  Subgroup both = intersect(a4, c4);
  CHECK(both.size() == 2);
  CHECK(both.contains(s4->mul(kFourCycle, kFourCycle)));
  CHECK(intersect(a4, Subgroup::whole(s4)).same_members(a4));

  GroupPtr other = make("sym(3)");
  CHECK_THROWS_AS(intersect(a4, Subgroup::whole(other)), ParameterError);
}

TEST_CASE("commutator subgroups match the brute-force closure") {
  for (const char* spec : {"sym(4)", "alt(4)", "dihedral(6)", "semidirect(7,3,2)"}) {
    GroupPtr g = make(spec);
    CAPTURE(spec);
    Subgroup whole = Subgroup::whole(g);
    Subgroup derived = commutator_subgroup(whole, whole);
    std::set<Elem> expect =
        oracle::commutator_closure(g, oracle::whole(g), oracle::whole(g));
    CHECK(as_set(derived) == expect);
  }
  GroupPtr s4 = make("sym(4)");
  CHECK(commutator_subgroup(Subgroup::whole(s4), Subgroup::whole(s4)).size() == 12);
}

TEST_CASE("quotients renumber cosets by least representative") {
  GroupPtr s4 = make("sym(4)");
  Subgroup v4 = normal_closure(s4, {kDoubleTransposition});
  auto [q, hom] = quotient(s4, v4);
  CHECK(q->order() == 6);
  CHECK_FALSE(q->is_abelian());  // S4 / V4 is S3
  CHECK(hom.is_homomorphism());
  CHECK(hom.map[0] == 0);
  int kernel = 0;
  for (Elem x = 0; x < s4->order(); ++x) {
    if (hom.map[static_cast<size_t>(x)] == 0) ++kernel;
  }
  CHECK(kernel == v4.size());

  Subgroup a4 = normal_closure(s4, {kThreeCycle});
  CHECK(quotient(s4, a4).first->order() == 2);
  CHECK(quotient(s4, Subgroup::whole(s4)).first->order() == 1);

  GroupPtr s3 = make("sym(3)");
  Subgroup c2(s3, {0, 1});
  CHECK_THROWS_AS(quotient(s3, c2), ParameterError);
}

TEST_CASE("standalone subgroup tables embed back into the parent") {
  GroupPtr s4 = make("sym(4)");
  Subgroup a4 = normal_closure(s4, {kThreeCycle});
  auto [table, embedding] = subgroup_table(a4);
  REQUIRE(table->order() == 12);
  CHECK(embedding.is_homomorphism());
  std::set<Elem> image(embedding.map.begin(), embedding.map.end());
  CHECK(image == as_set(a4));
  for (Elem i = 0; i < table->order(); ++i) {
    CHECK(table->element_order(i) ==
          s4->element_order(embedding.map[static_cast<size_t>(i)]));
  }
}

TEST_CASE("Sylow subgroups have the full prime-power order") {
  GroupPtr s4 = make("sym(4)");
  CHECK(sylow_subgroup(s4, 2).size() == 8);
  CHECK(sylow_subgroup(s4, 3).size() == 3);
  CHECK(sylow_subgroup(s4, 5).is_trivial());
  CHECK_THROWS_AS(sylow_subgroup(s4, 4), ParameterError);
  CHECK_THROWS_AS(sylow_subgroup(s4, 1), ParameterError);

  GroupPtr c12 = make("cyclic(12)");
  CHECK(sylow_subgroup(c12, 2).members() == std::vector<Elem>{0, 3, 6, 9});
  CHECK(sylow_subgroup(c12, 3).members() == std::vector<Elem>{0, 4, 8});

  // every member order is a power of p
  for (int p : {2, 3}) {
    Subgroup sylow = sylow_subgroup(s4, p);
    for (Elem m : sylow.members()) {
      int ord = s4->element_order(m);
      while (ord % p == 0) ord /= p;
      CHECK(ord == 1);
    }
  }
}

TEST_CASE("p-cores are the normal hearts of the Sylow subgroups") {
  GroupPtr s4 = make("sym(4)");
  Subgroup o2 = p_core(s4, 2);
  CHECK(o2.size() == 4);
  CHECK(o2.is_normal());
  CHECK(p_core(s4, 3).is_trivial());
  CHECK(p_core(s4, 7).is_trivial());

  // the 2-core lies inside every conjugate of the Sylow 2-subgroup
  Subgroup sylow = sylow_subgroup(s4, 2);
  for (Elem t = 0; t < s4->order(); ++t) {
    for (Elem m : o2.members()) {
      CHECK(sylow.contains(s4->conjugate(m, t)));
    }
  }

  GroupPtr a4 = make("alt(4)");
  CHECK(p_core(a4, 2).size() == 4);
  CHECK(p_core(a4, 3).is_trivial());
}

TEST_CASE("Fitting subgroup assembles the p-cores") {
  CHECK(fitting_subgroup(make("sym(4)")).size() == 4);
  CHECK(fitting_subgroup(make("sym(3)")).size() == 3);
  CHECK(fitting_subgroup(make("alt(5)")).is_trivial());
  CHECK(fitting_subgroup(make("cyclic(12)")).is_whole());
  CHECK(fitting_subgroup(make("dihedral(6)")).size() == 6);
}

TEST_CASE("primality helpers") {
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(-7));
  CHECK_FALSE(is_prime(91));
  CHECK(prime_divisors(360) == std::vector<int>{2, 3, 5});
  CHECK(prime_divisors(1) == std::vector<int>{});
  CHECK(prime_divisors(97) == std::vector<int>{97});
}
