#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>

#include "sasbi/cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "sasbi");
  std::ostringstream out, err;
  int code = sasbi::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(SASBI_TEST_DATA) + "/" + name; }
std::string scratch(const char* name) { return std::string(SASBI_TEST_SCRATCH) + "/" + name; }

std::string write_scratch(const char* name, const std::string& text) {
  auto path = scratch(name);
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("session workflows") {
  auto sp = run({"spoly", data("session.sasbi")});
  CHECK(sp.code == 0);
  CHECK(sp.out == "[1]=x^5+x^6\n[2]=x^8*y^3+1/2*x^16\n");

  auto sa = run({"sasbi", data("session.sasbi")});
  CHECK(sa.code == 0);
  CHECK(sa.out ==
        "[1]=x^2\n[2]=x^4+x^5+x^6\n[3]=x^7\n[4]=y^2\n[5]=y^3+x^8\n[6]=x^5+x^6\n"
        "status=complete rounds=2\n");

  auto ws = run({"wsnf", data("cubic.sasbi"), "--poly", "x^3+x^4"});
  CHECK(ws.code == 0);
  CHECK(ws.out == "0\n");

  auto rep = run({"wsnf", data("cubic.sasbi"), "--poly", "x^3+x^4", "--show-representation"});
  CHECK(rep.code == 0);
  CHECK(rep.out.find("unit=1-x+x^2\n") != std::string::npos);
  CHECK(rep.out.find("identity=(1-x+x^2)*(x^3+x^4) = (x^3+x^6) + (0)\n") != std::string::npos);

  auto sg = run({"sagbi", data("sagbi_dp.sasbi")});
  CHECK(sg.code == 0);
  CHECK(sg.out == "[1]=x+y\n[2]=x^2+y^2\n[3]=x*y\nstatus=complete rounds=2\n");
}

TEST_CASE("member, nf and verify") {
  auto m = run({"member", data("session.sasbi"), "--monomial", "x^4"});
  CHECK(m.code == 0);
  CHECK(m.out == "[1]=(0,1,0,0,0)\n[2]=(2,0,0,0,0)\n");
  CHECK(run({"member", data("session.sasbi"), "--monomial", "x^5"}).out == "none\n");
  CHECK(run({"member", data("session.sasbi"), "--monomial", "2*x^4"}).code == 2);

  auto nf = run({"nf", data("cubic.sasbi"), "--poly", "x^3+x^4", "--degree", "3"});
  CHECK(nf.code == 0);
  CHECK(nf.out == "x^4-x^6\n");

  auto v = run({"verify", data("session.sasbi")});
  CHECK(v.code == 0);
  CHECK(v.out == "false\n");
}

TEST_CASE("verify accepts what sasbi writes") {
  auto path = scratch("completed.sasbi");
  auto sa = run({"sasbi", data("session.sasbi"), "--output", path});
  REQUIRE(sa.code == 0);
  auto v = run({"verify", path});
  CHECK(v.code == 0);
  CHECK(v.out == "true\n");

  auto via_path = scratch("completed_via.sasbi");
  auto via = run({"sasbi", data("cubic.sasbi"), "--via-homogenization", "--output", via_path});
  REQUIRE(via.code == 0);
  CHECK(run({"verify", via_path}).out == "true\n");

  auto sg_path = scratch("completed_sagbi.sasbi");
  REQUIRE(run({"sagbi", data("sagbi_dp.sasbi"), "--output", sg_path}).code == 0);
  CHECK(run({"verify", sg_path}).out == "true\n");
}

TEST_CASE("output is deterministic") {
  for (const char* verb : {"spoly", "sasbi", "verify"}) {
    auto a = run({verb, data("session.sasbi")});
    auto b = run({verb, data("session.sasbi")});
    CHECK(a.out == b.out);
    CHECK(a.code == b.code);
  }
}

TEST_CASE("exit codes") {
  auto missing = run({"spoly", scratch("no_such_file.sasbi")});
  CHECK(missing.code == 2);
  CHECK_FALSE(missing.err.empty());

  auto bad = write_scratch("bad.sasbi", "ring 0 (x) ls;\ngens: x, q;\n");
  auto parse = run({"spoly", bad});
  CHECK(parse.code == 2);
  CHECK(parse.err.find(":2:10: error:") != std::string::npos);

  CHECK(run({"wsnf", data("cubic.sasbi"), "--poly", "z"}).code == 2);
  CHECK(run({"frobnicate", data("cubic.sasbi")}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"nf", data("cubic.sasbi"), "--poly", "x"}).code == 2);

  auto global = write_scratch("global.sasbi", "ring 0 (x) dp;\ngens: x^2;\n");
  CHECK(run({"sasbi", global}).code == 2);
  CHECK(run({"wsnf", global, "--poly", "x"}).code == 2);

  auto inf = write_scratch("infinite.sasbi", "ring 0 (x,y) lp;\ngens: x+y, x*y, x*y^2;\n");
  auto capped = run({"sagbi", inf, "--max-rounds", "2"});
  CHECK(capped.code == 1);
  CHECK(capped.out.find("status=limit-exceeded rounds=2") != std::string::npos);

  auto steps = run({"wsnf", data("session.sasbi"), "--poly", "x^4*y^3+y^5", "--max-steps", "1"});
  CHECK(steps.code == 1);
  auto six = write_scratch("six.sasbi",
                           "ring 0 (x,y) Ds;\ngens: x^2, x^4+x^5+x^6, x^7, y^2, y^3+x^8, x^5+x^6;\n");
  auto undecided = run({"verify", six, "--max-steps", "1"});
  CHECK(undecided.code == 1);
  CHECK(undecided.out == "indeterminate\n");

  CHECK(run({"--help"}).code == 0);
}
