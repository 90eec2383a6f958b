#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "framed/io.hpp"

#include <sys/wait.h>

#include <array>
#include <cstdio>

using namespace framed;

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args, bool merge_stderr = false) {
  const std::string cmd = std::string(FRAMED_CLI) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("literal parsing and printing") {
  CHECK(parse_mat2z("[[1,2],[3,4]]") == Mat2Z{1, 2, 3, 4});
  CHECK(parse_mat2z("1 2 3 -4") == Mat2Z{1, 2, 3, -4});
  CHECK(parse_mat2q("[[1/2,0],[0,3]]") == Mat2Q{Rational(1, 2), 0, 0, 3});
  CHECK_THROWS_AS(parse_mat2z("[[1,2],[3]]"), ParseError);
  CHECK_THROWS_AS(parse_mat2z("[[1/2,0],[0,1]]"), ParseError);
  CHECK(parse_vec2q("(1/2,0)") == Vec2Q{Rational(1, 2), 0});
  CHECK(parse_cover("[[1,1],[0,1]]@-2") == CoverElement{{1, 1, 0, 1}, -2});
  CHECK(parse_cover("[[1,1],[0,1]]") == CoverElement{{1, 1, 0, 1}, 0});
  CHECK_THROWS_AS(parse_cover("[[1,1],[0,1]]@x"), ParseError);

  const auto g = parse_semidirect("((1/2,0); [[1,1],[0,1]])");
  CHECK(format(g) == "((1/2,0); [[1,1],[0,1]])");
  CHECK(format(parse_semidirect("((0,0); braid: a b a)")) == "((0,0); braid: a b a)");
  CHECK(format(parse_semidirect("((1/3,2/3); cover: [[2,0],[0,1]]@1)")) == "((1/3,2/3); cover: [[2,0],[0,1]]@1)");
  CHECK_THROWS_AS(parse_semidirect("(1/2,0); [[1,1],[0,1]]"), ParseError);
  CHECK_THROWS_AS(parse_semidirect("((1/2,0) [[1,1],[0,1]])"), ParseError);
  CHECK_THROWS_AS(parse_braid("a x"), ParseError);
}

TEST_CASE("JSON encoding") {
  CHECK(to_json(Int(5)).dump() == "5");
  CHECK(to_json(Int("123456789012345678901234567890")).dump() == "\"123456789012345678901234567890\"");
  CHECK(to_json(Rational(1, 2)).dump() == "\"1/2\"");
  CHECK(to_json(Rational(4, 2)).dump() == "2");
  CHECK(to_json(Mat2Z{1, 0, 0, 1}).dump() == "[[1,0],[0,1]]");
  CHECK(to_json(CoverElement{Mat2Z::identity(), 1}).dump() == R"({"matrix":[[1,0],[0,1]],"winding":1,"arg_num":["2","0"]})");
  CHECK(to_json(subgroup_from_generators({{Rational(1, 2), 0}})).dump() == R"({"order":2,"superlattice_hnf":[["1/2",0],[0,1]]})");
}

TEST_CASE("documented invocations") {
  CHECK(run(R"(braid nf "a b a")").out == "{\"delta_power\":1,\"factors\":[]}\n");
  CHECK(run(R"(cover lift "a b a b a b a b a b a b")").out == "{\"matrix\":[[1,0],[0,1]],\"winding\":1,\"arg_num\":[\"2\",\"0\"]}\n");
  CHECK(run("lattice count 6").out == "{\"index\":6,\"count\":12}\n");
}

TEST_CASE("outputs are stable across runs") {
  CHECK(run("selftest cocycle --seed 3").out == run("selftest cocycle --seed 3").out);
  CHECK(run("orbit poset --max 4").out == run("orbit poset --max 4").out);
}

TEST_CASE("successful verbs") {
  const std::vector<std::string> ok = {
      R"(braid phi "1 2 1")",
      R"(braid mul "a b" "B")",
      R"(braid kernel "a b a b a b a b a b a b")",
      R"(braid lift "[[2,1],[1,1]]")",
      R"(braid eq "a b a" "b a b")",
      R"(matrix det "[[1/2,1],[0,3]]")",
      R"(matrix classify "[[1,1],[0,1]]")",
      R"(matrix hnf "[[4,2],[6,8]]")",
      R"(matrix inverse "[[2,1],[1,1]]")",
      R"(matrix mul "[[1,1],[0,1]]" "[[1,0],[-1,1]]")",
      R"(cover z "[[1,1],[0,1]]")",
      R"(cover zeta "[[1,1],[0,1]]" "[[1,0],[-1,1]]")",
      R"(cover mul "[[1,1],[0,1]]@0" "[[1,1],[0,1]]@0")",
      R"(cover transpose "[[1,1],[0,1]]@1")",
      R"(cover inverse "[[2,0],[0,1]]@0")",
      R"(cover scalar 3/2)",
      R"(lattice enum 4)",
      R"(lattice image "[[2,0],[0,1]]")",
      R"sh(lattice subgroup "(1/2,0) (0,1/3)")sh",
      R"sh(lattice matrix "(1/3,1/3)")sh",
      R"(lattice kernel "[[2,0],[0,2]]")",
      R"sh(orbit hom "" "(1/2,0)")sh",
      R"(orbit act "[[2,0],[0,1]]" "")",
      R"(orbit poset --max 3)",
      R"sh(sd mul "((1/2,0); [[1,1],[0,1]])" "((0,1/3); [[1,0],[-1,1]])")sh",
      R"sh(sd apply "((1/2,0); [[1,1],[0,1]])" "(0,1/3)")sh",
      R"sh(sd inverse "((0,0); braid: a b a)")sh",
      R"(hh validate dual)",
      R"(hh betti dual --max 6)",
      R"(hh betti mat2 --max 4 --unnormalized)",
      R"(hh hh0 mat2)",
      R"(hh secondary dual --max 4 --order mu2)",
      R"(hh rotations dual 1 1)",
      R"(selftest duality)",
  };
  for (const auto& args : ok) {
    CAPTURE(args);
    const auto r = run(args);
    CHECK(r.status == 0);
    CHECK_FALSE(r.out.empty());
    CHECK(Json::accept(r.out));
  }
  CHECK(Json::parse(run(R"sh(sd apply "((1/2,0); [[1,1],[0,1]])" "(0,1/3)")sh").out)["point"].dump() == R"(["5/6","1/3"])");
  CHECK(Json::parse(run(R"(braid eq "a b a" "b a b")").out)["equal"] == true);
  CHECK(Json::parse(run(R"(hh betti dual --max 6)").out)["betti"].dump() == "[2,1,1,1,1]");
}

TEST_CASE("usage errors exit 2") {
  const std::vector<std::string> bad = {
      "",
      "bogus",
      "braid",
      "braid frobnicate x",
      R"(braid nf "a q")",
      R"(matrix det "[[1,2],[3]]")",
      "lattice count x",
      R"sh(sd mul "((1/2,0) [[1,1],[0,1]])" "((0,0); [[1,0],[0,1]])")sh",
      R"(hh secondary dual --order mu3)",
      "selftest nonsense",
      R"(cover mul "[[1,1],[0,1]]@q" "[[1,1],[0,1]]")",
  };
  for (const auto& args : bad) {
    CAPTURE(args);
    const auto r = run(args, true);
    CHECK(r.status == 2);
  }
}

TEST_CASE("domain errors exit 1 with a one-line diagnostic") {
  const std::vector<std::pair<std::string, std::string>> bad = {
      {R"(lattice kernel "[[0,1],[1,0]]")", "det > 0"},
      {R"(braid lift "[[2,0],[0,1]]")", "det"},
      {R"(cover z "[[0,1],[1,0]]")", "det"},
      {R"(cover inverse "[[0,1],[1,0]]@0")", "det"},
      {"cover scalar -1", "> 0"},
      {"lattice count 0", ">= 1"},
      {R"(lattice image "[[1,2],[2,4]]")", "singular"},
      {R"(orbit act "[[1,0],[0,-1]]" "")", "det > 0"},
      {"orbit poset --max 0", ">= 1"},
      {R"sh(sd mul "((0,0); [[1,0],[0,1]])" "((0,0); braid: a)")sh", "ambient"},
      {R"sh(sd mul "((0,0); [[1,2],[2,4]])" "((0,0); [[1,0],[0,1]])")sh", "det"},
      {R"(matrix inverse "[[1,2],[2,4]]")", "singular"},
      {"hh betti nosuchalgebra", "unknown algebra"},
      {"hh secondary mat2 --max 3", "interchange"},
      {"hh betti dual --max 100", "--max"},
  };
  for (const auto& [args, needle] : bad) {
    CAPTURE(args);
    const auto r = run(args, true);
    CHECK(r.status == 1);
    CHECK(r.out.find(needle) != std::string::npos);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 1);
  }
}
