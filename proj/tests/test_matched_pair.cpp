#include "almosthopf/matched_pair.hpp"

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "almosthopf/errors.hpp"
#include "doctest.h"

using namespace almosthopf;

namespace {

void require_matched(const MatchedPair& mp) {
  AxiomReport r = verify_matched(mp);
  for (const auto& c : r.checks) {
    INFO("rule " << c.rule);
    CHECK(c.passed);
  }
  REQUIRE(r.passed);
}

// Scratch directory for the file-format cases, fresh per test run.
std::filesystem::path scratch_dir() {
  auto dir = std::filesystem::temp_directory_path() / "almosthopf-mpair-test";
  std::filesystem::create_directories(dir);
  return dir;
}

void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p);
  out << text;
}

}  // namespace

TEST_CASE("trivial actions verify over verified carriers") {
  require_matched(trivial_pair(cyclic_group(2), cyclic_group(2)));
  require_matched(trivial_pair(cyclic_group(4), symmetric_group_3()));
  require_matched(trivial_pair(constant_product_structure(), cyclic_group(2)));
  require_matched(trivial_pair(cyclic_group(2), constant_product_structure()));
  require_matched(
      trivial_pair(pair_construction(cyclic_group(2)),
                   pair_construction(cyclic_group(2))));
}

TEST_CASE("trivial pair refuses unverified carriers") {
  AlmostGroup bad = cyclic_group(3);
  bad.inv = {0, 1, 2};
  CHECK_THROWS_AS(trivial_pair(bad, cyclic_group(2)), PreconditionError);
  CHECK_THROWS_AS(trivial_pair(cyclic_group(2), bad), PreconditionError);
}

TEST_CASE("negation actions form a matched pair for every small n") {
  for (int n = 1; n <= 6; ++n) {
    CAPTURE(n);
    require_matched(inversion_pair(n));
  }
}

TEST_CASE("doublecross of trivial actions is the direct product") {
  AlmostGroup dx = doublecross(trivial_pair(cyclic_group(2), cyclic_group(2)));
  CHECK(dx == group_product(cyclic_group(2), cyclic_group(2)));
  CHECK(verify_axioms(dx).passed);
}

TEST_CASE("doublecross over a three-element carrier keeps its J") {
  MatchedPair mp = trivial_pair(pair_construction(cyclic_group(2)),
                                cyclic_group(2));
  AlmostGroup dx = doublecross(mp);
  REQUIRE(dx.size() == 8);
  int j_count = 0;
  for (bool b : dx.in_j) j_count += b ? 1 : 0;
  CHECK(j_count == 2);
  CHECK(verify_axioms(dx).passed);
}

TEST_CASE("doublecross of the negation pair is dihedral") {
  AlmostGroup dx = doublecross(inversion_pair(3));
  REQUIRE(dx.size() == 6);
  CHECK(verify_axioms(dx).passed);

  int a = dx.index_of("(1,1)");
  int b = dx.index_of("(1,0)");
  REQUIRE(a >= 0);
  REQUIRE(b >= 0);
  // (1,1)(1,0) lands on (0,1) while (1,0)(1,1) lands on (2,1).
  CHECK(dx.elements[dx.mul[a][b]] == "(0,1)");
  CHECK(dx.elements[dx.mul[b][a]] == "(2,1)");

  // The norm of every element stays in J = J_G x J_M.
  for (std::size_t x = 0; x < dx.size(); ++x)
    CHECK(dx.in_j[dx.mul[x][dx.inv[x]]]);
}

TEST_CASE("a perturbed left action fails exactly two rules") {
  MatchedPair mp = trivial_pair(cyclic_group(3), cyclic_group(2));
  mp.left_table[1][1] = 0;

  AxiomReport r = verify_matched(mp);
  CHECK_FALSE(r.passed);
  for (const auto& c : r.checks) {
    INFO("rule " << c.rule);
    bool should_fail =
        c.rule == "left-over-g-product" || c.rule == "involution-left";
    CHECK(c.passed == !should_fail);
  }

  const RuleCheck* lg = r.find("left-over-g-product");
  REQUIRE(lg != nullptr);
  CHECK(lg->violation_count == 4);
  REQUIRE_FALSE(lg->witnesses.empty());
  CHECK(lg->witnesses[0].where ==
        std::vector<std::string>{"s=1", "u=1", "v=1"});
  CHECK(lg->witnesses[0].lhs == "1");
  CHECK(lg->witnesses[0].rhs == "0");

  const RuleCheck* il = r.find("involution-left");
  REQUIRE(il != nullptr);
  CHECK(il->violation_count == 2);

  CHECK_THROWS_AS(doublecross(mp), PreconditionError);
}

TEST_CASE("verify reports carrier failures as their own rules") {
  MatchedPair mp = trivial_pair(cyclic_group(3), cyclic_group(2));
  mp.g.inv = {0, 1, 2};
  AxiomReport r = verify_matched(mp);
  CHECK_FALSE(r.rule_passed("g-axioms"));
  CHECK(r.rule_passed("m-axioms"));
}

TEST_CASE("build validates table shapes") {
  AlmostGroup g = cyclic_group(2);
  AlmostGroup m = cyclic_group(2);
  CHECK_THROWS_AS(build_matched_pair(g, m, {{0, 1}}, {{0, 0}, {1, 1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      build_matched_pair(g, m, {{0, 1}, {0}}, {{0, 0}, {1, 1}}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      build_matched_pair(g, m, {{0, 1}, {0, 5}}, {{0, 0}, {1, 1}}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      build_matched_pair(g, m, {{0, 1}, {0, 1}}, {{0, 0}, {1, -1}}),
      std::invalid_argument);

  MatchedPair mp = trivial_pair(g, m);
  CHECK(mp.right(1, 1) == 1);
  CHECK(mp.left(1, 0) == 1);
  CHECK_THROWS_AS(mp.right(2, 0), std::out_of_range);
  CHECK_THROWS_AS(mp.left(0, 2), std::out_of_range);
}

TEST_CASE("mpair files round-trip through parse and serialize") {
  auto dir = scratch_dir();
  write_file(dir / "z3.agrp", serialize_agrp(cyclic_group(3)));
  write_file(dir / "z2.agrp", serialize_agrp(cyclic_group(2)));

  MatchedPair mp = inversion_pair(3);
  std::string text = serialize_mpair(mp, "z3.agrp", "z2.agrp");
  write_file(dir / "negation.mpair", "# negation actions\n" + text);

  MatchedPair parsed = parse_mpair_file((dir / "negation.mpair").string());
  CHECK(parsed == mp);
  require_matched(parsed);
}

TEST_CASE("mpair parse errors carry context") {
  auto dir = scratch_dir();
  write_file(dir / "z2.agrp", serialize_agrp(cyclic_group(2)));

  auto expect_error = [&](const std::string& body, const std::string& needle) {
    write_file(dir / "bad.mpair", body);
    try {
      parse_mpair_file((dir / "bad.mpair").string());
      FAIL_CHECK("expected ParseError for: " << body);
    } catch (const ParseError& e) {
      INFO("message: " << e.what());
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };

  std::string head = "G z2.agrp\nM z2.agrp\n";
  std::string full = head;
  for (const char* s : {"0", "1"})
    for (const char* u : {"0", "1"})
      full += std::string("right ") + s + " " + u + " : " + u + "\nleft " +
              s + " " + u + " : " + s + "\n";

  expect_error("G missing.agrp\nM z2.agrp\n", "cannot open");
  expect_error("M z2.agrp\n" + head, "expected 'G <path>'");
  expect_error(head + "sideways 0 0 : 0\n", "expected 'right' or 'left'");
  expect_error(head + "right 0 0 0\n", "expected 'right <s> <u> : <g>'");
  expect_error(head + "right 2 0 : 0\n", "unknown M label '2'");
  expect_error(head + "right 0 0 : 7\n", "unknown G label '7'");
  expect_error(full + "left 0 0 : 0\n", "repeated left entry");
  expect_error(head + "right 0 0 : 0\n", "missing left entry for (0, 0)");
  expect_error(head + "left 0 0 : 0\nright 0 1 : 1\n",
               "missing right entry for (0, 0)");

  write_file(dir / "good.mpair", full);
  MatchedPair parsed = parse_mpair_file((dir / "good.mpair").string());
  CHECK(parsed == trivial_pair(cyclic_group(2), cyclic_group(2)));
}
