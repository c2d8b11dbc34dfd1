#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "cli.hpp"

using bvs::cli::run;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("input parsing") {
  CHECK(bvs::cli::parse_word("-2,1,2,1,-1,1,2") == bvs::DoubleBraidWord{-2, 1, 2, 1, -1, 1, 2});
  CHECK(bvs::cli::parse_word("1 2  1") == bvs::DoubleBraidWord{1, 2, 1});
  CHECK(bvs::cli::parse_cartan("A2") == bvs::type_a(2));
  CHECK(bvs::cli::parse_cartan(R"({"type":"A","rank":3})") == bvs::type_a(3));
  CHECK(bvs::cli::parse_cartan("G2").a(1, 2) == -3);
  CHECK_THROWS(bvs::cli::parse_cartan("Q7"));
}

TEST_CASE("seed output") {
  Result r = call({"seed", "--cartan", "A2", "--word", "-2,1,2,1,-1,1,2", "--format", "json"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("variables").size() == 4);
  CHECK(call({"seed", "--cartan", "A2", "--word", "-2,1,2,1,-1,1,2", "--format", "json"}).out == r.out);
  CHECK(call({"seed", "--cartan", "A2", "--word", "-2,1,2,1,-1,1,2", "--format", "json", "--opposite-quiver"}).out !=
        r.out);

  Result stdin_run = call({"seed", "--input", "-", "--format", "json"}, R"({"cartan":"A2","word":[-2,1,2,1,-1,1,2]})");
  CHECK(stdin_run.code == 0);
  CHECK(stdin_run.out == r.out);

  Result dot = call({"seed", "--cartan", "A2", "--word", "-2,1,2,1,-1,1,2", "--format", "dot"});
  CHECK(dot.out.rfind("digraph", 0) == 0);

  Result empty = call({"seed", "--cartan", "A2", "--word", "1,2,1", "--format", "json"});
  CHECK(empty.code == 0);
  CHECK(nlohmann::json::parse(empty.out).at("variables").empty());
}

TEST_CASE("input errors exit with code 2") {
  Result bad = call({"seed", "--cartan", "A2", "--word", "1,2,x"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("position 3") != std::string::npos);
  CHECK(call({"seed", "--cartan", "A2", "--word", "1,2"}).code == 2);
  CHECK(call({"seed", "--cartan", "A2", "--word", "1,5,1"}).code == 2);
  CHECK(call({"seed", "--word", "1,2,3,1"}).code == 2);  // default Cartan data is A2
  CHECK(call({"seed", "--word", "1,2,1"}).code == 0);
  CHECK(call({"nonsense"}).code == 2);
  CHECK(call({"seed", "--input", "-"}, "{not json").code == 2);
}

TEST_CASE("verify, move, plabic and weave subcommands") {
  Result v = call({"verify", "--cartan", "A2", "--word", "-2,1,2,1,-1,1,2"});
  CHECK(v.code == 0);
  CHECK(call({"verify", "--cartan", "A2", "--word", "-2,1,2,1,-1,1,2", "--checks", "tori,vars", "--format", "json"})
            .code == 0);

  Result m = call({"move", "B3", "--cartan", "A2", "--word", "1,2,1,1,2,1", "--pos", "1", "--format", "json"});
  CHECK(m.code == 0);
  CHECK(m.out.find("mutation") != std::string::npos);

  Result p = call({"plabic", "--cartan", "A2", "--word", "1,2,2,1,2,2,1,1"});
  CHECK(p.code == 0);
  auto j = nlohmann::json::parse(p.out);
  CHECK(j.at("slice_identical") == true);

  Result w = call({"weave", "--cartan", "A2", "--word", "-2,1,2,1,-1,1,2", "--format", "json"});
  CHECK(w.code == 0);
  CHECK(nlohmann::json::parse(w.out).at("recipe").size() == 7);

  Result t = call({"lusztig-table", "--cartan", "A2", "--word", "-2,1,2,1,-1,1,2"});
  CHECK(t.code == 0);
}
