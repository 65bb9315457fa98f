#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "l6n1/fixtures.hpp"
#include "l6n1/generator.hpp"
#include "l6n1/io.hpp"
#include "l6n1/resolver.hpp"

using namespace l6n1;

namespace {

std::string cli_path() {
  const char* p = std::getenv("L6N1_CLI");
  return p ? p : "";
}

#define REQUIRE_CLI()                              \
  do {                                             \
    if (cli_path().empty()) {                      \
      MESSAGE("skipped: L6N1_CLI not set (run via ctest)"); \
      return;                                      \
    }                                              \
  } while (0)

struct RunResult {
  int status;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string tmp = "cli_out.tmp";
  std::string cmd = cli_path() + " " + args + " > " + tmp + " 2>&1";
  int rc = std::system(cmd.c_str());
  RunResult r;
  r.status = WEXITSTATUS(rc);
  r.out = read_file(tmp);
  std::remove(tmp.c_str());
  return r;
}

void write_tmp(const std::string& name, const std::string& content) {
  write_file(name, content);
}

}  // namespace

TEST_CASE("projection round trip is the identity on canonical text") {
  for (const Projection& p : {fixtures::p1(), fixtures::p2(), fixtures::cut_vertex_fixture(),
                              random_projection(12, 77)}) {
    std::string text = serialize_projection(p);
    Projection q = parse_projection(text);
    CHECK(serialize_projection(q) == text);
    CHECK(q == p);
  }
}

TEST_CASE("diagram round trip keeps the resolution") {
  Diagram d = fixtures::l6n1_reference_diagram();
  std::string text = serialize_diagram(d);
  Diagram q = parse_diagram(text);
  CHECK(serialize_diagram(q) == text);
  CHECK(q.resolution == d.resolution);
}

TEST_CASE("comments and non-canonical order parse to canonical form") {
  std::string text = serialize_projection(fixtures::p1());
  std::string shuffled = "# fixture\n";
  std::vector<std::string> lines;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) lines.push_back(line);
  shuffled += lines[0] + "\n";
  for (std::size_t i = lines.size(); i-- > 1;) shuffled += lines[i] + " # inline\n";
  CHECK(serialize_projection(parse_projection(shuffled)) == text);
}

TEST_CASE("parse errors carry line numbers") {
  auto expect_error_line = [](const std::string& text, int line) {
    try {
      parse_projection(text);
      FAIL("expected ParseError");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::ParseError);
      CHECK(e.line() == line);
    }
  };
  expect_error_line("vertices 1\nedge 0 0 1 B\nedge 1 2 4 B\n", 3);   // dart out of range
  expect_error_line("vertices 1\nedge 0 0 1 B\nedge 1 1 2 B\n", 3);   // dart reused
  expect_error_line("vertices 1\nedge 0 0 1 X\n", 2);                 // bad colour
  expect_error_line("vertices 1\nedge 9 0 1 B\n", 2);                 // id out of range
  expect_error_line("frobnicate\n", 1);                               // unknown keyword
}

TEST_CASE("cli check reports pairwise crossing and exit codes") {
  REQUIRE_CLI();
  write_tmp("p1.tmp", serialize_projection(fixtures::p1()));
  auto ok = run_cli("check p1.tmp");
  CHECK(ok.status == 0);
  CHECK(ok.out.find("pairwise crossing: yes") != std::string::npos);
  std::remove("p1.tmp");

  write_tmp("split.tmp", serialize_projection(fixtures::split_green_fixture()));
  auto bad = run_cli("check split.tmp");
  CHECK(bad.status == 1);
  CHECK(bad.out.find("not pairwise crossing") != std::string::npos);
  std::remove("split.tmp");
}

TEST_CASE("cli resolve on the chain irreducible emits a six-crossing diagram") {
  REQUIRE_CLI();
  write_tmp("p2.tmp", serialize_projection(fixtures::p2()));
  auto r = run_cli("resolve p2.tmp");
  CHECK(r.status == 0);
  int over_lines = 0;
  std::istringstream is(r.out);
  std::string line;
  while (std::getline(is, line))
    if (line.rfind("over ", 0) == 0) over_lines++;
  CHECK(over_lines == 6);
  std::remove("p2.tmp");
}

TEST_CASE("cli reduce resolve verify pipeline") {
  REQUIRE_CLI();
  write_tmp("theta.tmp", serialize_projection(fixtures::theta_fixture()));

  auto reduced = run_cli("reduce theta.tmp --trace trace.tmp");
  CHECK(reduced.status == 0);
  CHECK(reduced.out.find("# class NonKrupp") != std::string::npos);
  CHECK(read_file("trace.tmp").find("TH ") != std::string::npos);
  // Command output is closed under re-parsing.
  write_tmp("reduced.tmp", reduced.out);
  CHECK(run_cli("check reduced.tmp").status == 0);
  std::remove("reduced.tmp");

  auto resolved = run_cli("resolve theta.tmp -o diagram.tmp");
  CHECK(resolved.status == 0);

  auto verified = run_cli("verify diagram.tmp");
  CHECK(verified.status == 0);
  CHECK(verified.out.find("is_l6n1: yes") != std::string::npos);

  auto inv = run_cli("invariants diagram.tmp --linking");
  CHECK(inv.status == 0);
  CHECK(inv.out.find("lk(0,1)") != std::string::npos);

  std::remove("theta.tmp");
  std::remove("trace.tmp");
  std::remove("diagram.tmp");
}

TEST_CASE("cli enumerate counts the six-vertex classes") {
  REQUIRE_CLI();
  auto r = run_cli("enumerate --vertices 6 --pairwise-crossing --count-only");
  CHECK(r.status == 0);
  CHECK(r.out == "2\n");
}

TEST_CASE("cli exit codes distinguish usage, verdicts and success") {
  REQUIRE_CLI();
  CHECK(run_cli("check missing-file.tmp").status == 2);
  CHECK(run_cli("bogus-subcommand").status == 2);

  write_tmp("bad.tmp", "vertices 1\nedge 0 0 1 B\nedge 1 2 3 R\n");
  // Parses but cannot validate: only two colours.
  CHECK(run_cli("check bad.tmp").status == 1);
  std::remove("bad.tmp");
}

TEST_CASE("cli outputs are byte-identical across runs") {
  REQUIRE_CLI();
  auto a = run_cli("random --vertices 12 --seed 9");
  auto b = run_cli("random --vertices 12 --seed 9");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);

  write_tmp("rand.tmp", a.out);
  auto ra = run_cli("reduce rand.tmp --trace t1.tmp");
  auto rb = run_cli("reduce rand.tmp --trace t2.tmp");
  CHECK(ra.out == rb.out);
  CHECK(read_file("t1.tmp") == read_file("t2.tmp"));
  auto va = run_cli("resolve rand.tmp");
  auto vb = run_cli("resolve rand.tmp");
  CHECK(va.out == vb.out);
  std::remove("rand.tmp");
  std::remove("t1.tmp");
  std::remove("t2.tmp");

  auto ea = run_cli("enumerate --vertices 5 --connected");
  auto eb = run_cli("enumerate --vertices 5 --connected");
  CHECK(ea.status == 0);
  CHECK(ea.out == eb.out);
}
