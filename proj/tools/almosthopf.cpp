// Command-line front end: reads .agrp, .mpair, and loop JSON files, runs
// the verification suites, and emits reports or structure constants.
//
// Exit codes: 0 all requested checks pass, 1 a mathematical property is
// verified false, 2 malformed input or usage (including loop samples that
// violate the action preconditions).

#include <cstdint>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "almosthopf/almost_group.hpp"
#include "almosthopf/bicross.hpp"
#include "almosthopf/errors.hpp"
#include "almosthopf/hopf.hpp"
#include "almosthopf/loop.hpp"
#include "almosthopf/matched_pair.hpp"
#include "almosthopf/report.hpp"

namespace {

using namespace almosthopf;

void print_report(const CheckReport& rep, const std::string& format) {
  if (format == "json")
    std::cout << rep.to_json().dump() << "\n";
  else
    std::cout << rep.to_text();
}

void print_report(const NumericReport& rep, const std::string& format) {
  if (format == "json")
    std::cout << rep.to_json().dump() << "\n";
  else
    std::cout << rep.to_text();
}

void append_report(CheckReport& into, CheckReport more) {
  if (!more.passed) into.passed = false;
  for (auto& c : more.checks) into.checks.push_back(std::move(c));
}

// Translates exceptions to the exit-code contract. Precondition failures
// count as bad input for the numeric loop commands and as verified-false
// mathematics for the algebraic ones.
int guarded(const std::function<int()>& body, int precondition_exit) {
  try {
    return body();
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return precondition_exit;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

int cmd_verify_group(const std::string& path, const std::string& format) {
  CheckReport rep = verify_axioms(parse_agrp_file(path));
  print_report(rep, format);
  return rep.passed ? 0 : 1;
}

int cmd_verify_hopf(const std::string& path, const std::string& construction,
                    const std::string& format) {
  AlmostGroup g = parse_agrp_file(path);
  CheckReport base = verify_axioms(g);
  if (!base.passed) {
    print_report(base, format);
    return 1;
  }
  AlmostHopfStructure h =
      construction == "grp" ? group_algebra(g) : function_algebra(g);
  CheckReport rep = verify_hopf(h);
  append_report(rep, check_antipode_antimul(h));
  append_report(rep, check_antipode_anticomul(h));
  append_report(rep, check_antipode_j_compat(h));
  print_report(rep, format);
  return rep.passed ? 0 : 1;
}

int cmd_bicross(const std::string& path, bool dual, const std::string& emit,
                const std::string& check, const std::string& format) {
  MatchedPair mp = parse_mpair_file(path);
  CheckReport matched = verify_matched(mp);
  if (!matched.passed) {
    print_report(matched, format);
    return 1;
  }
  if (emit == "structure") {
    const AlmostHopfStructure h =
        dual ? dual_bicrossproduct(mp).h : bicrossproduct(mp).h;
    std::cout << export_structure_json(h).dump() << "\n";
    if (check.empty()) return 0;
  }
  CheckReport rep;
  if (check == "duality")
    rep = verify_duality(mp);
  else if (check == "star")
    rep = verify_star(mp);
  else if (check == "selfdual")
    rep = verify_self_duality(mp);
  else
    rep = verify_hopf(dual ? dual_bicrossproduct(mp).h : bicrossproduct(mp).h);
  print_report(rep, format);
  return rep.passed ? 0 : 1;
}

MeromorphicLoop single_factor_loop(const std::string& path) {
  MeromorphicLoop l = parse_loop_file(path);
  if (l.factors.size() != 1)
    throw ParseError(path + ": expected exactly one factor");
  return l;
}

int finish_numeric(const NumericReport& rep, const std::string& format) {
  print_report(rep, format);
  if (rep.passed) return 0;
  return rep.rule_passed("preconditions") ? 1 : 2;
}

int cmd_loop_reverse(const std::vector<std::string>& files, int samples,
                     double tol, std::uint64_t seed,
                     const std::string& format) {
  MeromorphicLoop l1 = single_factor_loop(files[0]);
  MeromorphicLoop l2 = single_factor_loop(files[1]);
  auto [g1, g2] = reverse_pair(l1.factors[0], l2.factors[0]);
  MeromorphicLoop out1 = make_loop(l1.n, {g1});
  MeromorphicLoop out2 = make_loop(l1.n, {g2});

  std::vector<double> lambdas =
      sample_lambdas(seed, samples, pole_real_parts({&l1, &l2}));
  NumericReport rep;
  rep.seed = seed;
  rep.sample_count = samples;
  NumericCheck check{"reverse-product",
                     loop_distance(mul(l1, l2), mul(out1, out2), lambdas), tol,
                     false, ""};
  check.passed = check.max_residual <= tol;
  rep.passed = check.passed;
  rep.checks.push_back(check);

  if (format == "json") {
    nlohmann::json doc = {{"g1", loop_to_json(out1)},
                          {"g2", loop_to_json(out2)},
                          {"report", rep.to_json()}};
    std::cout << doc.dump() << "\n";
  } else {
    std::cout << rep.to_text();
  }
  return rep.passed ? 0 : 1;
}

int cmd_loop_act(const std::vector<std::string>& files, int samples,
                 double tol, std::uint64_t seed, const std::string& format) {
  MeromorphicLoop s = parse_loop_file(files[0]);
  MeromorphicLoop u = parse_loop_file(files[1]);
  Reordering r = act(s, u);

  std::vector<double> lambdas =
      sample_lambdas(seed, samples, pole_real_parts({&s, &u}));
  NumericReport rep;
  rep.seed = seed;
  rep.sample_count = samples;
  NumericCheck check{"action-product",
                     loop_distance(mul(s, u), mul(r.right, r.left), lambdas),
                     tol, false, ""};
  check.passed = check.max_residual <= tol;
  rep.passed = check.passed;
  rep.checks.push_back(check);

  if (format == "json") {
    nlohmann::json doc = {{"right", loop_to_json(r.right)},
                          {"left", loop_to_json(r.left)},
                          {"report", rep.to_json()}};
    std::cout << doc.dump() << "\n";
  } else {
    std::cout << rep.to_text();
  }
  return rep.passed ? 0 : 1;
}

int cmd_loop_matched(const std::vector<std::string>& files, int samples,
                     double tol, std::uint64_t seed,
                     const std::string& format) {
  MatchedLoopSample smp{parse_loop_file(files[0]), parse_loop_file(files[1]),
                        parse_loop_file(files[2]), parse_loop_file(files[3])};
  return finish_numeric(verify_matched_numeric({smp}, samples, tol, seed),
                        format);
}

int cmd_loop_mutinv(const std::vector<std::string>& files, int samples,
                    double tol, std::uint64_t seed,
                    const std::string& format) {
  InverseLoopSample smp{parse_loop_file(files[0]), parse_loop_file(files[1])};
  return finish_numeric(
      verify_mutually_inverse_numeric({smp}, samples, tol, seed), format);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "verification toolkit for almost groups, twisted Hopf structures, "
      "bicrossproducts, and meromorphic loop factorization"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  std::string group_file;
  CLI::App* vg = app.add_subcommand(
      "verify-group", "check the almost-group axioms of an .agrp file");
  vg->fallthrough();
  vg->add_option("file", group_file, ".agrp file")->required();

  std::string hopf_file;
  std::string construction = "fn";
  CLI::App* vh = app.add_subcommand(
      "verify-hopf",
      "check the twisted Hopf axioms of an algebra built from an .agrp file");
  vh->fallthrough();
  vh->add_option("file", hopf_file, ".agrp file")->required();
  vh->add_option("--construction", construction,
                 "fn = function algebra, grp = group algebra")
      ->check(CLI::IsMember({"fn", "grp"}))
      ->capture_default_str();

  std::string mpair_file;
  bool dual = false;
  std::string emit;
  std::string check;
  CLI::App* bc = app.add_subcommand(
      "bicross", "build and verify bicrossproducts from an .mpair file");
  bc->fallthrough();
  bc->add_option("file", mpair_file, ".mpair file")->required();
  bc->add_flag("--dual", dual, "use the dual construction");
  bc->add_option("--emit", emit, "structure = JSON structure constants")
      ->check(CLI::IsMember({"structure", "report"}));
  bc->add_option("--check", check, "verification suite to run")
      ->check(CLI::IsMember({"duality", "star", "selfdual"}));

  int samples = 10;
  double tol = 1e-8;
  std::uint64_t seed = 12345;
  std::vector<std::string> loop_files;
  CLI::App* lp = app.add_subcommand(
      "loop", "numeric checks on factored meromorphic loops");
  lp->fallthrough();
  lp->require_subcommand(1);
  lp->add_option("--samples", samples, "evaluation points per check")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  lp->add_option("--tol", tol, "residual tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  lp->add_option("--seed", seed, "sampling seed")->capture_default_str();

  CLI::App* rev = lp->add_subcommand(
      "reverse", "reorder two single-factor loops across the real axis");
  rev->fallthrough();
  rev->add_option("files", loop_files, "two loop JSON files")
      ->expected(2)
      ->required();
  CLI::App* actc = lp->add_subcommand(
      "act", "reorder s u into (s |> u)(s <| u) and verify the product");
  actc->fallthrough();
  actc->add_option("files", loop_files, "loop JSON files: s u")
      ->expected(2)
      ->required();
  CLI::App* vm = lp->add_subcommand(
      "verify-matched", "sampled matched-pair identities on loops s t u v");
  vm->fallthrough();
  vm->add_option("files", loop_files, "loop JSON files: s t u v")
      ->expected(4)
      ->required();
  CLI::App* vi = lp->add_subcommand(
      "verify-mutinv", "sampled mutual-inverse identities on loops s u");
  vi->fallthrough();
  vi->add_option("files", loop_files, "loop JSON files: s u")
      ->expected(2)
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*vg)
    return guarded([&] { return cmd_verify_group(group_file, format); }, 1);
  if (*vh)
    return guarded(
        [&] { return cmd_verify_hopf(hopf_file, construction, format); }, 1);
  if (*bc)
    return guarded(
        [&] { return cmd_bicross(mpair_file, dual, emit, check, format); },
        1);
  if (*rev)
    return guarded(
        [&] { return cmd_loop_reverse(loop_files, samples, tol, seed, format); },
        2);
  if (*actc)
    return guarded(
        [&] { return cmd_loop_act(loop_files, samples, tol, seed, format); },
        2);
  if (*vm)
    return guarded(
        [&] { return cmd_loop_matched(loop_files, samples, tol, seed, format); },
        2);
  if (*vi)
    return guarded(
        [&] { return cmd_loop_mutinv(loop_files, samples, tol, seed, format); },
        2);
  return 2;
}
