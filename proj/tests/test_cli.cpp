// Smoke tests that drive the installed binary end to end. The harness
// passes the binary's location in TED_BIN.
#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "doctest.h"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string ted_bin() {
  const char* p = std::getenv("TED_BIN");
  REQUIRE_MESSAGE(p != nullptr, "TED_BIN must point at the ted binary");
  return p;
}

RunResult run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + ted_bin() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("dist plain and json") {
  RunResult r = run("dist 'a(b,c)' 'a(c)'");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "1\n");

  r = run("dist 'a(b,c)' 'a(c)' --algo sz --format json");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "\"algorithm\":\"sz\""));
  CHECK(contains(r.out, "\"cost\":1"));
  CHECK(contains(r.out, "\"n\":3"));
  CHECK(contains(r.out, "\"m\":2"));
  CHECK(contains(r.out, "\"subproblems\":"));

  r = run("dist 'a(b,c)' 'a(c)' --stats");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "subproblems "));
  CHECK(contains(r.out, "f-subforests "));
}

TEST_CASE("algorithms agree through the front end") {
  const std::string f = "'a(b(c,d),e(f))'";
  const std::string g = "'a(b(d),f(e,c))'";
  const RunResult sz = run("dist " + f + " " + g + " --algo sz");
  const RunResult kl = run("dist " + f + " " + g + " --algo klein");
  const RunResult dm = run("dist " + f + " " + g + " --algo dmrw");
  CHECK(sz.exit_code == 0);
  CHECK(sz.out == kl.out);
  CHECK(kl.out == dm.out);
}

TEST_CASE("script output format") {
  const RunResult r = run("script 'a(b,c)' 'a(c,d)'");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "rel 0 0 b c\nrel 1 1 c d\ncost 2\n");

  const RunResult j = run("script 'a(b)' 'a' --format json");
  CHECK(j.exit_code == 0);
  CHECK(contains(j.out, "\"op\":\"del-f\""));
  CHECK(contains(j.out, "\"cost\":1"));
}

TEST_CASE("script del lines use child paths") {
  const RunResult r = run("script 'a(b(c))' 'a'");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "del-f 0\ndel-f 0.0\ncost 2\n");
}

TEST_CASE("gen families and determinism") {
  const RunResult a = run("gen random 12 --seed 7");
  const RunResult b = run("gen random 12 --seed 7");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(run("gen comb 6").out == "a(a(a(a),a),a)\n");
  CHECK(run("gen path 3").out == "a(a(a))\n");
  CHECK(run("gen balanced 3").out == "a(a,a)\n");
  CHECK(run("gen balanced 6").exit_code == 2);
  CHECK(run("gen comb 7").exit_code == 2);
  CHECK(run("gen zigzag 10").exit_code == 2);
  CHECK(run("gen nosuch 4").exit_code == 2);
}

TEST_CASE("rna converts dot bracket") {
  const RunResult r = run("rna '((.))' --seq AGCUU");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "root(A-U(G-U(C)))\n");
  CHECK(run("rna '(('").exit_code == 2);
  const RunResult bare = run("rna '(.)'");
  CHECK(bare.out == "root(pair(base))\n");
}

TEST_CASE("count growth csv") {
  const RunResult r = run("count --families path --sizes 4,8 --algos sz");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "instance,n,m,algorithm,count\npath4,4,4,sz,25\npath8,8,8,sz,81\n");
  CHECK(run("count --families balanced --sizes 8 --algos sz").exit_code == 2);
  CHECK(run("count 'a' --families path --sizes 4 --algos sz").exit_code == 2);
}

TEST_CASE("count pair accounting") {
  const RunResult r = run("count 'a(b)' 'a' --algo sz");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "subproblems "));
}

TEST_CASE("input errors exit with 2") {
  CHECK(run("dist 'a(' 'a'").exit_code == 2);
  CHECK(run("dist 'a' 'a)'").exit_code == 2);
  CHECK(run("dist 'a'").exit_code == 2);       // missing argument
  CHECK(run("dist 'a' 'b' --algo huh").exit_code == 2);
  CHECK(run("nosuchcommand").exit_code == 2);
  CHECK(run("dist 'a' 'b' --costs /no/such/file.json").exit_code == 2);
}

TEST_CASE("node limit from the environment") {
  CHECK(run("dist 'a(b(c))' 'a'", "TED_MAX_NODES=2").exit_code == 2);
  CHECK(run("dist 'a(b(c))' 'a'", "TED_MAX_NODES=3").exit_code == 0);
  CHECK(run("dist 'a' 'a'", "TED_MAX_NODES=banana").exit_code == 2);
  CHECK(run("gen path 9", "TED_MAX_NODES=8").exit_code == 2);
}

TEST_CASE("tree arguments load from files") {
  const std::string dir = "./cli_test_tmp";
  std::remove((dir + "/f.txt").c_str());
  if (std::system(("mkdir -p " + dir).c_str()) != 0) FAIL("mkdir failed");
  {
    std::ofstream out(dir + "/f.txt");
    out << "a(b,c)\n";
  }
  const RunResult r = run("dist " + dir + "/f.txt 'a(c)'");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "1\n");

  {
    std::ofstream out(dir + "/costs.json");
    out << R"({"del_default":2,"rel_default_eq":0,"rel_default_neq":9})";
  }
  const RunResult c = run("dist 'a(b)' 'a(c)' --costs " + dir + "/costs.json");
  CHECK(c.exit_code == 0);
  CHECK(c.out == "4\n");  // relabel priced out, delete + insert

  const RunResult j = run("dist '{\"label\":\"a\"}' 'a'");
  CHECK(j.exit_code == 0);
  CHECK(j.out == "0\n");
}

TEST_CASE("selftest passes") {
  const RunResult r = run("selftest");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "selftest ok\n");
}
