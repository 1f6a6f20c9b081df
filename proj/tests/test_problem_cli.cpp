#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "chowkit/errors.hpp"
#include "chowkit/poly_text.hpp"
#include "chowkit/problem.hpp"
#include "cli.hpp"
#include "fixtures.hpp"

using namespace ck;

namespace {

int parse_col(const std::string& text, int& line) {
  try {
    parse_problem(text);
  } catch (const ParseError& e) {
    line = e.line;
    return e.col;
  }
  line = 0;
  return 0;
}

std::string write_temp(const std::string& name, const std::string& text) {
  auto dir = std::filesystem::temp_directory_path() / "chowkit-tests";
  std::filesystem::create_directories(dir);
  auto path = dir / name;
  std::ofstream(path) << text;
  return path.string();
}

struct Run {
  int status;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int s = cli::run(args, out, err);
  return {s, out.str(), err.str()};
}

}  // namespace

TEST_CASE("parse_problem: well-formed input") {
  auto p = parse_problem(fixtures::kConicPair);
  CHECK(p.has_blocks);
  CHECK(p.vars->block_count() == 2);
  CHECK(p.polys.size() == 4);
  REQUIRE(p.format);
  CHECK(*p.format == std::vector<int>{2, 1});
  REQUIRE(p.dims);
  CHECK(p.dims->at(3) == 2);

  auto q = parse_problem("# comment\nring a b x0 x1\nblocks (a b)(x0 x1)\nrow a*x0, b\nrow 1, a\nseed 9\nretries 4\n");
  CHECK(q.rows.size() == 2);
  CHECK(*q.seed == 9);
  CHECK(*q.retries == 4);
  CHECK(as_matrix(q).dim() == 2);
  CHECK(parse_problem(fixtures::kTwistedCubic).dim == 1);
}

TEST_CASE("parse_problem: errors carry line and column") {
  int line = 0;
  CHECK(parse_col("ring x0 x1\npoly x0 + z\n", line) == 11);
  CHECK(line == 2);
  CHECK(parse_col("ring x0 x1 x0\n", line) == 12);
  CHECK(line == 1);
  CHECK(parse_col("ring x0 x1\npoly x0^2 + x1\n", line) == 6);
  CHECK(line == 2);
  CHECK(parse_col("ring x0 x1\nfoo 3\n", line) == 1);
  CHECK(line == 2);
  CHECK(parse_col("ring x0 y0\nblocks (x0)(y0)\npoly x0 + y0\n", line) == 6);
  CHECK(parse_col("ring x0 y0\nblocks (x0)(z)\n", line) == 13);
  CHECK(parse_col("ring x0\nblocks (x0)\nformat 1 1\n", line) == 1);
  CHECK(line == 3);
  CHECK(parse_col("poly x0\n", line) == 1);
  CHECK(parse_col("", line) == 1);
  CHECK(line == 1);
  CHECK_THROWS_AS(as_projective(parse_problem(fixtures::kConicPair)), UsageError);
  CHECK_THROWS_AS(as_matrix(parse_problem(fixtures::kConic)), UsageError);
}

TEST_CASE("cli: example commands") {
  auto line = write_temp("line.txt", fixtures::kLine);
  auto r = run({"chow", line});
  CHECK(r.status == 0);
  CHECK(r.out == "u00*u11 - u01*u10\n");
  CHECK(r.err.find("# algorithm: ") != std::string::npos);

  auto conic = write_temp("conic.txt", fixtures::kConic);
  r = run({"hurwitz", conic});
  CHECK(r.status == 0);
  CHECK(r.out == "4*u10*u12 - u11^2\n");

  auto pair = write_temp("pair.txt", fixtures::kConicPair);
  r = run({"formats", pair});
  CHECK(r.out == "chow (2,1) (1,2)\nhurwitz (3,1) (2,2) (1,3)\n");
  r = run({"support", pair});
  CHECK(r.out == "(2,2)\n");

  auto pm = write_temp("pm.json", R"({"box":[3,3],"rank":{"1":1,"2":1,"12":2}})");
  r = run({"polymatroid", "dual", pm});
  CHECK(r.out == "(2,2)\n");
  r = run({"polymatroid", "truncate", pm});
  CHECK(r.status == 0);

  auto det = write_temp("det.txt", "ring a b\nrow a, b\nrow b, a\n");
  r = run({"det", det});
  CHECK(r.out == "a^2 - b^2\n");

  r = run({"--bounds-only", "chow", conic});
  CHECK(r.out.rfind("per_block 2\n", 0) == 0);
}

TEST_CASE("cli: exit codes") {
  CHECK(run({}).status == 2);
  CHECK(run({"frobnicate", write_temp("l.txt", fixtures::kLine)}).status == 2);
  CHECK(run({"chow", "/nonexistent/file"}).status == 2);
  CHECK(run({"--retries", "0", "chow", "x"}).status == 2);
  auto bad = write_temp("bad.txt", "ring x0 x1\npoly x0 +\n");
  auto r = run({"chow", bad});
  CHECK(r.status == 4);
  CHECK(r.out.empty());
  CHECK(r.err.rfind("error: 2:", 0) == 0);
  auto pm = write_temp("bad.json", "{\"box\": [1,");
  CHECK(run({"polymatroid", "bases", pm}).status == 4);
  auto dup = write_temp("dup.txt", "ring x0 x1 x2\npoly x0\npoly 2*x0\ndim 1\n");
  CHECK(run({"chow-ci", dup}).status == 2);
  auto same = write_temp("same.txt", "ring x0 x1 x2 x3\npoly x0*x1\npoly x0*x1\npoly x0*x1\ndim 1\n");
  CHECK(run({"--retries", "1", "chow", same}).status == 3);
}

TEST_CASE("cli: JSON metadata and determinism") {
  auto tc = write_temp("tc.txt", fixtures::kTwistedCubic);
  auto a = run({"--json", "--seed", "5", "chow", tc});
  auto b = run({"--json", "--seed", "5", "chow", tc});
  REQUIRE(a.status == 0);
  CHECK(a.out == b.out);
  auto j = nlohmann::json::parse(a.err);
  for (const char* k : {"degrees_per_block", "bitsize", "seed", "wall_ms", "algorithm"}) CHECK(j.contains(k));
  CHECK(j["degrees_per_block"] == nlohmann::json::array({3, 3}));
  CHECK(j["seed"] == 5);
  // The seed line in the file is the default for --seed.
  auto tc9 = write_temp("tc9.txt", std::string(fixtures::kTwistedCubic) + "seed 9\n");
  auto c = run({"--json", "chow", tc9});
  CHECK(nlohmann::json::parse(c.err)["seed"] == 9);
}
