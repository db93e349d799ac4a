// Almost-group axioms, constructions, and the .agrp text format.

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "almosthopf/almost_group.hpp"
#include "almosthopf/errors.hpp"
#include "doctest.h"

using namespace almosthopf;

namespace {

// Relabels a group table by a permutation; a valid group stays a valid group
// with its identity moved, which is what the property test leans on.
AlmostGroup permuted_copy(const AlmostGroup& g, std::mt19937_64& rng) {
  const int n = static_cast<int>(g.size());
  std::vector<int> p(n);
  for (int k = 0; k < n; ++k) p[k] = k;
  std::shuffle(p.begin(), p.end(), rng);

  std::vector<std::string> labels(n);
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) labels[p[a]] = g.elements[a];
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[p[a]][p[b]] = p[g.mul[a][b]];

  int e = -1;
  for (int a = 0; a < n; ++a)
    if (g.in_j[a]) e = p[a];
  return from_group(std::move(labels), std::move(table),
                    labels.empty() ? "" : labels[e]);
}

}  // namespace

TEST_CASE("groups wrap into almost groups and pass every axiom") {
  for (int n = 1; n <= 8; ++n) {
    AlmostGroup g = cyclic_group(n);
    AxiomReport report = verify_axioms(g);
    CHECK(report.passed);
    CHECK(report.checks.size() == 7);
  }
  AxiomReport s3 = verify_axioms(symmetric_group_3());
  CHECK(s3.passed);
}

TEST_CASE("identity involution on Z/3 breaks only the norm axiom") {
  AlmostGroup g = cyclic_group(3);
  g.inv = {0, 1, 2};  // i = id is an anti-automorphism here, but 1+1 = 2 is not in J
  AxiomReport report = verify_axioms(g);
  CHECK_FALSE(report.passed);
  CHECK_FALSE(report.rule_passed("norm-in-j"));
  const RuleCheck* norm = report.find("norm-in-j");
  REQUIRE(norm != nullptr);
  REQUIRE(!norm->witnesses.empty());
  CHECK(norm->witnesses.front().where == std::vector<std::string>{"1"});
  CHECK(norm->witnesses.front().lhs == "2");
  CHECK(report.rule_passed("assoc"));
  CHECK(report.rule_passed("anti-involution"));
  CHECK(report.rule_passed("involution"));
  CHECK(report.rule_passed("central-j"));
  CHECK(report.rule_passed("j-closed-mul"));
  CHECK(report.rule_passed("j-closed-inv"));
}

TEST_CASE("three-element structures with constant products verify") {
  AlmostGroup c = constant_product_structure();
  CHECK(verify_axioms(c).passed);
  CHECK(c.mul_at(1, 2) == 0);  // every product is a
  CHECK(c.is_j(0));
  CHECK(c.is_j(1));
  CHECK_FALSE(c.is_j(2));

  AlmostGroup u = unital_collapse_structure();
  CHECK(verify_axioms(u).passed);
  CHECK(u.mul_at(0, 2) == 2);  // a is an identity
  CHECK(u.mul_at(2, 2) == 1);  // c*c collapses to b
}

TEST_CASE("pair construction over abelian groups") {
  AlmostGroup p2 = pair_construction(cyclic_group(2));
  CHECK(p2.size() == 4);
  CHECK(verify_axioms(p2).passed);
  // (0,1)*(1,1) = (1,0)
  int x = p2.index_of("(0,1)");
  int y = p2.index_of("(1,1)");
  REQUIRE(x >= 0);
  REQUIRE(y >= 0);
  CHECK(p2.elements[p2.mul_at(x, y)] == "(1,0)");
  // (a,b)^i = (b,a)
  CHECK(p2.elements[p2.i_at(x)] == "(1,0)");

  AlmostGroup p3 = pair_construction(cyclic_group(3));
  CHECK(p3.size() == 9);
  int j_count = 0;
  for (std::size_t k = 0; k < p3.size(); ++k)
    if (p3.in_j[k]) ++j_count;
  CHECK(j_count == 3);
  CHECK(verify_axioms(p3).passed);

  CHECK(verify_axioms(pair_construction(group_product(cyclic_group(2),
                                                      cyclic_group(2))))
            .passed);
  CHECK_THROWS_AS(pair_construction(symmetric_group_3()), PreconditionError);
}

TEST_CASE("random relabeled groups always verify") {
  std::mt19937_64 rng(42);
  std::vector<AlmostGroup> bases;
  for (int n = 2; n <= 6; ++n) bases.push_back(cyclic_group(n));
  bases.push_back(group_product(cyclic_group(2), cyclic_group(2)));
  bases.push_back(group_product(cyclic_group(2), cyclic_group(3)));
  bases.push_back(symmetric_group_3());
  for (int iter = 0; iter < 40; ++iter) {
    const AlmostGroup& base = bases[iter % bases.size()];
    AlmostGroup g = permuted_copy(base, rng);
    CHECK(verify_axioms(g).passed);
  }
}

TEST_CASE("from_group rejects non-groups") {
  // No identity law for the claimed identity.
  CHECK_THROWS_AS(from_group({"a", "b"}, {{0, 0}, {0, 0}}, "a"),
                  PreconditionError);
  // Unknown identity label.
  CHECK_THROWS_AS(from_group({"a", "b"}, {{0, 1}, {1, 0}}, "e"),
                  PreconditionError);
  // Identity fine, but x has no inverse.
  CHECK_THROWS_AS(from_group({"e", "x"}, {{0, 1}, {1, 1}}, "e"),
                  PreconditionError);
  // Identity fine, but not associative: (a a) b != a (a b).
  CHECK_THROWS_AS(
      from_group({"e", "a", "b"}, {{0, 1, 2}, {1, 2, 0}, {2, 0, 2}}, "e"),
      PreconditionError);
}

TEST_CASE("build validates shapes only") {
  CHECK_THROWS_AS(build_almost_group({}, {}, {}, {}), std::invalid_argument);
  CHECK_THROWS_AS(build_almost_group({"a", "a"}, {{0, 0}, {0, 0}}, {0, 1}, {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_almost_group({"a", "b"}, {{0, 0}}, {0, 1}, {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_almost_group({"a", "b"}, {{0, 2}, {0, 0}}, {0, 1}, {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_almost_group({"a", "b"}, {{0, 0}, {0, 0}}, {0}, {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      build_almost_group({"a", "b"}, {{0, 0}, {0, 0}}, {0, 1}, {5}),
      std::invalid_argument);
  // A singleton is fine.
  AlmostGroup one = build_almost_group({"e"}, {{0}}, {0}, {0});
  CHECK(verify_axioms(one).passed);
}

TEST_CASE("checked accessors throw out of range") {
  AlmostGroup g = cyclic_group(2);
  CHECK_THROWS_AS(g.mul_at(0, 2), std::out_of_range);
  CHECK_THROWS_AS(g.mul_at(-1, 0), std::out_of_range);
  CHECK_THROWS_AS(g.i_at(9), std::out_of_range);
  CHECK_THROWS_AS(g.is_j(-2), std::out_of_range);
  CHECK(g.index_of("nope") == -1);
}

TEST_CASE("agrp format round-trips") {
  std::string text =
      "# three elements, every product collapses\n"
      "elements a b c\n"
      "row a : a a a\n"
      "row b : a a a\n"
      "\n"
      "row c : a a a   # trailing comment\n"
      "i a b c\n"
      "J a b\n";
  std::istringstream in(text);
  AlmostGroup g = parse_agrp(in);
  CHECK(g == constant_product_structure());

  std::string canon = serialize_agrp(g);
  std::istringstream again(canon);
  CHECK(serialize_agrp(parse_agrp(again)) == canon);

  std::string s3 = serialize_agrp(symmetric_group_3());
  std::istringstream s3in(s3);
  CHECK(parse_agrp(s3in) == symmetric_group_3());
}

TEST_CASE("agrp parse errors carry line context") {
  auto expect_parse_error = [](const std::string& text) {
    std::istringstream in(text);
    CHECK_THROWS_AS(parse_agrp(in), ParseError);
  };
  expect_parse_error("");                                    // empty input
  expect_parse_error("elements a a\nrow a : a a\nrow a : a a\ni a a\nJ\n");
  expect_parse_error("elements a b\nrow a : a x\nrow b : a a\ni a b\nJ\n");
  expect_parse_error("elements a b\nrow b : a a\nrow a : a a\ni a b\nJ\n");
  expect_parse_error("elements a b\nrow a : a\nrow b : a a\ni a b\nJ\n");
  expect_parse_error("elements a b\nrow a : a a\ni a b\nJ\n");      // one row
  expect_parse_error("elements a b\nrow a : a a\nrow b : a a\nJ\n");  // no i
  expect_parse_error("elements a b\nrow a : a a\nrow b : a a\ni a\nJ\n");
  expect_parse_error(
      "elements a b\nrow a : a a\nrow b : a a\ni a b\nJ q\n");
  expect_parse_error(
      "elements a b\nrow a : a a\nrow b : a a\ni a b\nJ a a\n");
  expect_parse_error(
      "elements a b\nrow a : a a\nrow b : a a\ni a b\nJ a\nextra\n");
}

TEST_CASE("serialized structure parses to exact equality") {
  AlmostGroup g = unital_collapse_structure();
  std::istringstream in(serialize_agrp(g));
  AlmostGroup h = parse_agrp(in);
  CHECK(g == h);
}
