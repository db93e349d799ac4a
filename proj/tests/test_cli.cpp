// Drives the installed command-line binary end to end: fixture files go
// to a scratch directory, commands run through the shell, and the tests
// assert on exit codes and captured output.

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "almosthopf/almost_group.hpp"
#include "almosthopf/loop.hpp"
#include "almosthopf/matched_pair.hpp"
#include "doctest.h"

using namespace almosthopf;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::filesystem::path scratch_dir() {
  auto dir = std::filesystem::temp_directory_path() / "almosthopf-cli-test";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

RunResult run(const std::string& args) {
  auto dir = scratch_dir();
  auto out_path = dir / "stdout.txt";
  auto err_path = dir / "stderr.txt";
  std::string cmd = std::string(CLI_PATH) + " " + args + " > " +
                    out_path.string() + " 2> " + err_path.string();
  int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  return r;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

// Fixture files shared by the cases below, generated once per process.
struct Fixtures {
  std::filesystem::path dir = scratch_dir();
  std::string z2 = (dir / "z2.agrp").string();
  std::string z3 = (dir / "z3.agrp").string();
  std::string norm_broken = (dir / "norm.agrp").string();
  std::string anti_broken = (dir / "anti.agrp").string();
  std::string malformed = (dir / "malformed.agrp").string();
  std::string trivial = (dir / "trivial.mpair").string();
  std::string unmatched = (dir / "unmatched.mpair").string();
  std::string loop_s = (dir / "s.json").string();
  std::string loop_u = (dir / "u.json").string();
  std::string loop_t = (dir / "t.json").string();
  std::string loop_v = (dir / "v.json").string();
  std::string loop_conj = (dir / "conj.json").string();

  Fixtures() {
    write_file(z2, serialize_agrp(cyclic_group(2)));
    write_file(z3, serialize_agrp(cyclic_group(3)));
    // 1*1 = 1 leaves the norm of 1 outside J = {0}.
    write_file(norm_broken,
               "elements 0 1\nrow 0 : 0 1\nrow 1 : 1 1\ni 0 1\nJ 0\n");
    // A transposed involution image breaks the anti-involution law.
    write_file(anti_broken,
               "elements 0 1\nrow 0 : 0 1\nrow 1 : 1 0\ni 1 0\nJ 0\n");
    write_file(malformed, "elements 0 1\nrow 0 : 0 1\n");
    write_file(trivial,
               serialize_mpair(trivial_pair(cyclic_group(2), cyclic_group(2)),
                               "z2.agrp", "z2.agrp"));
    MatchedPair bad = trivial_pair(cyclic_group(2), cyclic_group(2));
    bad.left_table[1][1] = 0;
    write_file(unmatched, serialize_mpair(bad, "z2.agrp", "z2.agrp"));

    CMatrix p1 = CMatrix::Zero(2, 2);
    p1(0, 0) = 1;
    CMatrix p2(2, 2);
    p2 << 0.5, 0.5, 0.5, 0.5;
    CMatrix p3 = CMatrix::Zero(2, 2);
    p3(1, 1) = 1;
    write_file(loop_s, loop_to_json(make_loop(
                           2, {make_factor(Complex(-1, -1), p1)}))
                           .dump());
    write_file(loop_u, loop_to_json(make_loop(
                           2, {make_factor(Complex(2, 1.5), p2)}))
                           .dump());
    write_file(loop_t, loop_to_json(make_loop(
                           2, {make_factor(Complex(0.5, -2), p3)}))
                           .dump());
    write_file(loop_v, loop_to_json(make_loop(
                           2, {make_factor(Complex(-2, 2.5), p2)}))
                           .dump());
    write_file(loop_conj, loop_to_json(make_loop(
                              2, {make_factor(Complex(-1, 1), p2)}))
                              .dump());
  }
};

const Fixtures& fixtures() {
  static Fixtures f;
  return f;
}

}  // namespace

TEST_CASE("verify-group exit codes") {
  const auto& f = fixtures();

  RunResult good = run("verify-group " + f.z2);
  CHECK(good.exit_code == 0);
  CHECK(contains(good.out, "all checks passed"));

  RunResult broken = run("verify-group " + f.norm_broken);
  CHECK(broken.exit_code == 1);
  CHECK(contains(broken.out, "FAIL norm-in-j"));
  CHECK(contains(broken.out, "at (1)"));

  RunResult bad = run("verify-group " + f.malformed);
  CHECK(bad.exit_code == 2);
  CHECK(contains(bad.err, "error:"));

  CHECK(run("verify-group " + f.dir.string() + "/absent.agrp").exit_code == 2);
}

TEST_CASE("verify-hopf runs both constructions") {
  const auto& f = fixtures();

  CHECK(run("verify-hopf " + f.z2).exit_code == 0);
  CHECK(run("verify-hopf " + f.z3 + " --construction grp").exit_code == 0);

  RunResult json = run("verify-hopf " + f.z2 + " --format json");
  CHECK(json.exit_code == 0);
  CHECK(contains(json.out, "\"rule\":\"antipode\""));
  CHECK(contains(json.out, "\"rule\":\"antipode-antimultiplicative\""));

  // The carrier violation surfaces from the underlying group check.
  RunResult broken = run("verify-hopf " + f.anti_broken);
  CHECK(broken.exit_code == 1);
  CHECK(contains(broken.out, "FAIL anti-involution"));
}

TEST_CASE("bicross verifies, checks, and emits structures") {
  const auto& f = fixtures();

  CHECK(run("bicross " + f.trivial).exit_code == 0);
  CHECK(run("bicross " + f.trivial + " --dual").exit_code == 0);
  for (const char* check : {"duality", "star", "selfdual"})
    CHECK(run("bicross " + f.trivial + " --check " + check).exit_code == 0);

  RunResult structure = run("bicross " + f.trivial + " --emit structure");
  CHECK(structure.exit_code == 0);
  CHECK(contains(structure.out, "\"construction\":\"bicross\""));
  RunResult again = run("bicross " + f.trivial + " --emit structure");
  CHECK(structure.out == again.out);

  RunResult dual = run("bicross " + f.trivial + " --dual --emit structure");
  CHECK(contains(dual.out, "\"construction\":\"dualBicross\""));

  RunResult unmatched = run("bicross " + f.unmatched);
  CHECK(unmatched.exit_code == 1);
  CHECK(contains(unmatched.out, "FAIL left-over-g-product"));
}

TEST_CASE("loop act and reverse report residuals") {
  const auto& f = fixtures();

  RunResult acted = run("loop act " + f.loop_s + " " + f.loop_u);
  CHECK(acted.exit_code == 0);
  CHECK(contains(acted.out, "PASS action-product"));

  RunResult rev = run("loop --format json reverse " + f.loop_s + " " +
                      f.loop_u + " --samples 10 --tol 1e-8");
  CHECK(rev.exit_code == 0);
  CHECK(contains(rev.out, "\"g1\""));
  CHECK(contains(rev.out, "\"g2\""));
  CHECK(contains(rev.out, "\"rule\":\"reverse-product\""));

  RunResult conj = run("loop act " + f.loop_s + " " + f.loop_conj);
  CHECK(conj.exit_code == 2);
  CHECK(contains(conj.err, "conjugate pole positions"));

  CHECK(run("loop act " + f.loop_s + " " + f.dir.string() + "/absent.json")
            .exit_code == 2);
}

TEST_CASE("loop verification suites") {
  const auto& f = fixtures();

  RunResult matched = run("loop verify-matched " + f.loop_s + " " + f.loop_t +
                          " " + f.loop_u + " " + f.loop_v);
  CHECK(matched.exit_code == 0);
  CHECK(contains(matched.out, "PASS involution-left"));

  RunResult mutinv = run("loop verify-mutinv " + f.loop_s + " " + f.loop_u);
  CHECK(mutinv.exit_code == 0);
  CHECK(contains(mutinv.out, "PASS inverse-action-right"));
  CHECK(contains(mutinv.out, "PASS unitarity"));

  RunResult conj = run("loop verify-mutinv " + f.loop_s + " " + f.loop_conj);
  CHECK(conj.exit_code == 2);
  CHECK(contains(conj.out, "FAIL preconditions"));
}

TEST_CASE("json reports are byte-identical for a fixed seed") {
  const auto& f = fixtures();
  std::string cmd = "loop --format json verify-mutinv " + f.loop_s + " " +
                    f.loop_u + " --seed 777";
  RunResult a = run(cmd);
  RunResult b = run(cmd);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  RunResult c = run("loop --format json verify-mutinv " + f.loop_s + " " +
                    f.loop_u + " --seed 778");
  CHECK(a.out != c.out);
}

TEST_CASE("usage errors exit with code 2") {
  const auto& f = fixtures();
  CHECK(run("").exit_code == 2);
  CHECK(run("frobnicate").exit_code == 2);
  CHECK(run("verify-group").exit_code == 2);
  CHECK(run("loop reverse " + f.loop_s).exit_code == 2);
  CHECK(run("loop verify-mutinv " + f.loop_s + " " + f.loop_u +
            " --samples 0")
            .exit_code == 2);
  CHECK(run("verify-hopf " + f.z2 + " --construction bogus").exit_code == 2);
  CHECK(run("--help").exit_code == 0);
  CHECK(run("loop --help").exit_code == 0);
}
