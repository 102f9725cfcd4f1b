#include "doctest.h"

#include "fractw/clique.hpp"
#include "fractw/dimacs.hpp"
#include "fractw/witness.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

std::string temp_path(const std::string& stem) {
  static int n = 0;
  return "/tmp/fractw_cli_" + std::to_string(::getpid()) + "_" +
         std::to_string(n++) + "_" + stem;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

CliRun run_cli(const std::string& args) {
  const std::string log = temp_path("log");
  const std::string cmd =
      std::string(FRACTW_CLI_PATH) + " " + args + " > " + log + " 2>&1";
  int st = std::system(cmd.c_str());
  CliRun r;
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  r.out = slurp(log);
  std::remove(log.c_str());
  return r;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("cli play: forced 2,2 run lands on the guaranteed 5/2") {
  auto r = run_cli("play -t 2 -w 2 --alice greedy --bob cor1");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "total measure: 5/2"));
  CHECK(contains(r.out, "guaranteed floor: 5/2"));
}

TEST_CASE("cli play: random game stays under the window") {
  auto r = run_cli("play -t 5 -w 4 --bob random --seed 7");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "greedy window: 28/5"));
}

TEST_CASE("cli: usage errors exit 2") {
  CHECK(run_cli("play -t 2").code == 2);
  CHECK(run_cli("").code == 2);
  CHECK(run_cli("verify --suite nope").code == 2);
  CHECK(run_cli("bounds --format yaml").code == 2);
  CHECK(run_cli("construct -t 4 -w 2").code == 2);
}

TEST_CASE("cli construct: output files re-validate") {
  const std::string stem = temp_path("cons");
  auto r = run_cli("construct -t 2 -w 2 -o " + stem);
  CHECK(r.code == 0);
  auto g = fractw::read_dimacs_rb_file(stem + ".dimacs");
  CHECK(g.vertex_count() == 6);
  auto w = fractw::read_witness_file(stem + ".witness.json");
  auto err = fractw::verify_witness(g, w);
  CHECK(!err.has_value());
  // omega = 2 means the blue board is triangle-free.
  CHECK(fractw::clique_number(g) <= 2);
  CHECK(w.width <= 2);
  std::remove((stem + ".dimacs").c_str());
  std::remove((stem + ".witness.json").c_str());
}

TEST_CASE("cli chif: exact values and the size guard") {
  const std::string c5 = temp_path("c5.dimacs");
  spit(c5, "p edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n");
  auto r = run_cli("chif " + c5);
  CHECK(r.code == 0);
  CHECK(contains(r.out, "5/2"));

  const std::string cert = temp_path("c5.cert.json");
  r = run_cli("chif " + c5 + " --cert " + cert);
  CHECK(r.code == 0);
  CHECK(contains(slurp(cert), "\"value\""));
  std::remove(cert.c_str());
  std::remove(c5.c_str());

  const std::string k4 = temp_path("k4.dimacs");
  spit(k4, "p edge 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n");
  r = run_cli("chif " + k4);
  CHECK(r.code == 0);
  CHECK(contains(r.out, "4"));
  std::remove(k4.c_str());

  const std::string big = temp_path("big.dimacs");
  spit(big, "p edge 31 0\n");
  r = run_cli("chif " + big);
  CHECK(r.code == 4);
  CHECK(contains(r.out, "SizeGuard"));
  std::remove(big.c_str());
}

TEST_CASE("cli verify: suite runs and report is written") {
  const std::string rep = temp_path("rep.json");
  auto r = run_cli("verify --suite oracle --report " + rep);
  CHECK(r.code == 0);
  CHECK(contains(r.out, "PASS criterion 5"));
  CHECK(contains(slurp(rep), "\"pass\": true"));
  std::remove(rep.c_str());
}

TEST_CASE("cli universal: sizes and the hard guard") {
  auto r = run_cli("universal -t 2 -w 2 -N 1");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "vertices: 6"));
  CHECK(contains(r.out, "round 1: +4"));
  r = run_cli("universal -t 4 -w 2 -N 1");
  CHECK(r.code == 4);
  CHECK(contains(r.out, "TooLarge"));
}

TEST_CASE("cli bounds: table rows carry the gadget lift") {
  auto r = run_cli("bounds --tmax 3 --format csv");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "2,2,5/2,5/2,5/2"));
  CHECK(contains(r.out, "3,2,5/2,13/5,10/3"));
}

TEST_CASE("cli play: same seed gives byte-identical transcripts") {
  const std::string a = temp_path("a.jsonl");
  const std::string b = temp_path("b.jsonl");
  CHECK(run_cli("play -t 3 -w 2 --bob random --seed 42 -o " + a).code == 0);
  CHECK(run_cli("play -t 3 -w 2 --bob random --seed 42 -o " + b).code == 0);
  const std::string ta = slurp(a);
  CHECK(!ta.empty());
  CHECK(ta == slurp(b));
  std::remove(a.c_str());
  std::remove(b.c_str());
}
