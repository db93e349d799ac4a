#include "almosthopf/hopf.hpp"

#include <string>
#include <vector>

#include "almosthopf/almost_group.hpp"
#include "almosthopf/errors.hpp"
#include "doctest.h"

using namespace almosthopf;

namespace {

LinComb delta(int i) { return LinComb::basis(BasisLabel::delta_elem(i)); }
LinComb grp(int i) { return LinComb::basis(BasisLabel::group_elem(i)); }

LinComb delta_tensor(int i, int j) {
  return LinComb::basis(
      BasisLabel::pair(BasisLabel::delta_elem(i), BasisLabel::delta_elem(j)));
}

void require_all_rules_pass(const AlmostHopfStructure& h) {
  HopfReport r = verify_hopf(h);
  for (const auto& c : r.checks) {
    INFO(h.construction << " rule " << c.rule);
    CHECK(c.passed);
  }
  REQUIRE(r.passed);
  CHECK(check_antipode_antimul(h).passed);
  CHECK(check_antipode_anticomul(h).passed);
  CHECK(check_antipode_j_compat(h).passed);
}

}  // namespace

TEST_CASE("function algebra on Z/2 has the expected tables") {
  AlmostHopfStructure h = function_algebra(cyclic_group(2));
  REQUIRE(h.dim() == 2);
  REQUIRE(h.j_basis == std::vector<int>{0});

  // Coproduct sums over factorizations of the argument's point.
  LinComb expected_comul1 = LinComb::zero();
  expected_comul1.add_term(
      BasisLabel::pair(BasisLabel::delta_elem(0), BasisLabel::delta_elem(1)),
      Rational(1));
  expected_comul1.add_term(
      BasisLabel::pair(BasisLabel::delta_elem(1), BasisLabel::delta_elem(0)),
      Rational(1));
  CHECK(h.comul[1] == expected_comul1);
  CHECK(h.comul[0] == delta_tensor(0, 0) + delta_tensor(1, 1));

  // The counit keeps the delta functions sitting over the distinguished set
  // and kills the rest.
  CHECK(h.counit[0] == delta(0));
  CHECK(h.counit[1].is_zero());

  // Every point has norm 0, so the unit of d(0) is the constant function 1.
  CHECK(h.unit[0] == delta(0) + delta(1));

  CHECK(h.antipode[1] == delta(1));
  CHECK(h.mul[0][0] == delta(0));
  CHECK(h.mul[0][1].is_zero());

  CHECK(h.render(h.basis[1]) == "d(1)");
  CHECK(h.render(h.unit[0]) == "1/1·d(0) + 1/1·d(1)");

  require_all_rules_pass(h);

  SUBCASE("unit refuses arguments outside the j-span") {
    CHECK_THROWS_AS(h.unit_lc(delta(1)), PreconditionError);
    CHECK_NOTHROW(h.unit_lc(delta(0)));
  }
}

TEST_CASE("function algebra on the constant-product structure") {
  AlmostHopfStructure h = function_algebra(constant_product_structure());
  REQUIRE(h.dim() == 3);
  REQUIRE(h.j_basis == std::vector<int>{0, 1});

  // b is never a product, so d(b) has an empty coproduct.
  CHECK(h.comul[1].is_zero());

  // Every product equals a, so d(a) splits over all nine point pairs.
  CHECK(h.comul[0].size() == 9);

  // Every point has norm a and none has norm b.
  CHECK(h.unit[0] == delta(0) + delta(1) + delta(2));
  CHECK(h.unit[1].is_zero());

  CHECK(h.counit[0] == delta(0));
  CHECK(h.counit[1] == delta(1));
  CHECK(h.counit[2].is_zero());

  require_all_rules_pass(h);
}

TEST_CASE("function algebra on the unital collapse structure") {
  AlmostHopfStructure h = function_algebra(unital_collapse_structure());

  CHECK(h.comul[2] == delta_tensor(0, 2) + delta_tensor(2, 0));
  CHECK(h.comul[1].size() == 6);
  CHECK(h.unit[0] == delta(0));
  CHECK(h.unit[1] == delta(1) + delta(2));

  require_all_rules_pass(h);
}

TEST_CASE("group algebra on Z/2 has the expected tables") {
  AlmostHopfStructure h = group_algebra(cyclic_group(2));
  REQUIRE(h.dim() == 2);
  REQUIRE(h.j_basis == std::vector<int>{0});

  CHECK(h.mul[1][1] == grp(0));
  CHECK(h.comul[1] ==
        LinComb::basis(
            BasisLabel::pair(BasisLabel::group_elem(1),
                             BasisLabel::group_elem(1))));
  // The counit of an element is its norm, not a scalar.
  CHECK(h.counit[1] == grp(0));
  CHECK(h.antipode[1] == grp(1));
  CHECK(h.unit[0] == grp(0));

  require_all_rules_pass(h);
}

TEST_CASE("group algebra on the swap structure over Z/2") {
  AlmostGroup g = pair_construction(cyclic_group(2));
  AlmostHopfStructure h = group_algebra(g);
  REQUIRE(h.dim() == 4);
  REQUIRE(h.j_basis == std::vector<int>{0, 3});

  // (0,1) has inverse-image (1,0) under the swap, so its norm is (1,1).
  int e01 = g.index_of("(0,1)");
  int e10 = g.index_of("(1,0)");
  int e11 = g.index_of("(1,1)");
  REQUIRE(e01 >= 0);
  CHECK(h.counit[e01] == grp(e11));
  CHECK(h.antipode[e01] == grp(e10));
  CHECK(h.render(h.basis[e01]) == "(0,1)");

  require_all_rules_pass(h);
}

TEST_CASE("both constructions verify across small structures") {
  std::vector<AlmostGroup> structures;
  for (int n = 1; n <= 6; ++n) structures.push_back(cyclic_group(n));
  structures.push_back(symmetric_group_3());
  structures.push_back(group_product(cyclic_group(2), cyclic_group(2)));
  structures.push_back(pair_construction(cyclic_group(3)));
  structures.push_back(constant_product_structure());
  structures.push_back(unital_collapse_structure());

  for (const auto& g : structures) {
    CAPTURE(g.size());
    require_all_rules_pass(function_algebra(g));
    require_all_rules_pass(group_algebra(g));
  }
}

TEST_CASE("constructions reject structures that fail verification") {
  AlmostGroup bad = cyclic_group(3);
  bad.inv = {0, 1, 2};  // breaks the norm axiom
  CHECK_THROWS_AS(function_algebra(bad), PreconditionError);
  CHECK_THROWS_AS(group_algebra(bad), PreconditionError);
}

TEST_CASE("a corrupted antipode entry fails exactly the antipode rule") {
  AlmostHopfStructure h = function_algebra(cyclic_group(3));
  h.antipode[1] = delta(1);

  HopfReport r = verify_hopf(h);
  CHECK_FALSE(r.passed);
  for (const auto& c : r.checks) {
    INFO("rule " << c.rule);
    CHECK(c.passed == (c.rule != "antipode"));
  }

  const RuleCheck* antipode = r.find("antipode");
  REQUIRE(antipode != nullptr);
  CHECK(antipode->violation_count == 4);
  REQUIRE_FALSE(antipode->witnesses.empty());
  CHECK(antipode->witnesses[0].where == std::vector<std::string>{"d(0)"});
  CHECK(antipode->witnesses[0].lhs == "1/1·d(0) + 1/1·d(1)");
  CHECK(antipode->witnesses[0].rhs == "1/1·d(0) + 1/1·d(1) + 1/1·d(2)");
}

TEST_CASE("the identity antipode on a nonabelian group algebra") {
  AlmostHopfStructure h = group_algebra(symmetric_group_3());
  for (std::size_t x = 0; x < h.dim(); ++x)
    h.antipode[x] = LinComb::basis(h.basis[x]);

  // 18 of the 36 ordered pairs in S3 do not commute.
  CheckReport antimul = check_antipode_antimul(h);
  CHECK_FALSE(antimul.passed);
  CHECK(antimul.checks.at(0).violation_count == 18);

  CHECK_FALSE(verify_hopf(h).rule_passed("antipode"));
}

TEST_CASE("a corrupted coproduct fails comultiplicativity") {
  AlmostHopfStructure h = function_algebra(cyclic_group(2));
  h.comul[1] = delta_tensor(1, 1);

  HopfReport r = verify_hopf(h);
  CHECK(r.rule_passed("assoc"));
  // d(0) still splits through the corrupted leg, so coassociativity breaks
  // there as well.
  CHECK_FALSE(r.rule_passed("coassoc"));
  CHECK_FALSE(r.rule_passed("comul-multiplicative"));
  CHECK_FALSE(r.rule_passed("antipode"));
}

TEST_CASE("a non-central unit image fails the exchange rule") {
  AlmostHopfStructure h = group_algebra(symmetric_group_3());
  int t = -1;
  for (std::size_t x = 0; x < h.dim(); ++x)
    if (h.render(h.basis[x]) == "021") t = static_cast<int>(x);
  REQUIRE(t >= 0);
  h.unit[0] = LinComb::basis(h.basis[t]);

  HopfReport r = verify_hopf(h);
  CHECK_FALSE(r.rule_passed("unit-exchange"));
  CHECK(r.rule_passed("assoc"));
  CHECK(r.rule_passed("comul-multiplicative"));
}

TEST_CASE("verify rejects malformed tables outright") {
  AlmostHopfStructure h = function_algebra(cyclic_group(2));

  SUBCASE("non-square mul") {
    h.mul[0].pop_back();
    CHECK_THROWS_AS(verify_hopf(h), std::invalid_argument);
  }
  SUBCASE("unsorted basis") {
    std::swap(h.basis[0], h.basis[1]);
    CHECK_THROWS_AS(verify_hopf(h), std::invalid_argument);
  }
  SUBCASE("coproduct value outside H (x) H") {
    h.comul[0] = delta(0);
    CHECK_THROWS_AS(verify_hopf(h), std::invalid_argument);
  }
  SUBCASE("table value on a foreign label") {
    h.antipode[0] = delta(7);
    CHECK_THROWS_AS(verify_hopf(h), std::invalid_argument);
  }
  SUBCASE("unit table size disagrees with j-basis") {
    h.unit.push_back(delta(0));
    CHECK_THROWS_AS(verify_hopf(h), std::invalid_argument);
  }
}

TEST_CASE("structure export is deterministic and indexed") {
  AlmostHopfStructure h1 = function_algebra(cyclic_group(3));
  AlmostHopfStructure h2 = function_algebra(cyclic_group(3));
  nlohmann::json d1 = export_structure_json(h1);
  nlohmann::json d2 = export_structure_json(h2);
  CHECK(d1.dump() == d2.dump());

  CHECK(d1["construction"] == "functionAlgebra");
  CHECK(d1["basis"][1] == "d(1)");
  CHECK(d1["jBasis"] == nlohmann::json::array({0}));

  // delta functions multiply diagonally, so only three mul entries survive.
  REQUIRE(d1["mul"].size() == 3);
  CHECK(d1["mul"][0]["i"] == 0);
  CHECK(d1["mul"][0]["j"] == 0);
  CHECK(d1["mul"][0]["terms"][0]["k"] == 0);
  CHECK(d1["mul"][0]["terms"][0]["c"] == "1/1");

  // Coproduct of d(1) splits over the factorizations 0+1, 1+0, 2+2.
  nlohmann::json comul1;
  for (const auto& row : d1["comul"])
    if (row["i"] == 1) comul1 = row["terms"];
  REQUIRE(comul1.size() == 3);
  CHECK(comul1[0]["k"] == 0);
  CHECK(comul1[0]["l"] == 1);
  CHECK(comul1[2]["k"] == 2);
  CHECK(comul1[2]["l"] == 2);

  nlohmann::json grp = export_structure_json(group_algebra(cyclic_group(2)));
  CHECK(grp["construction"] == "groupAlgebra");
  CHECK(grp["basis"] == nlohmann::json::array({"0", "1"}));
  CHECK(grp["counit"][1]["terms"][0]["k"] == 0);
}
