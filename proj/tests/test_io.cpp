#include "doctest.h"

#include <fstream>
#include <set>
#include <sstream>

#include "finitop/cli.hpp"
#include "finitop/error.hpp"
#include "finitop/construct.hpp"
#include "finitop/io.hpp"

using namespace finitop;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = "io_test_" + name;
  std::ofstream out(path);
  out << content;
  return path;
}

int run(const std::vector<std::string>& args, std::string* out_text = nullptr) {
  std::ostringstream out, err;
  int code = cli_run(args, out, err);
  if (out_text) *out_text = out.str();
  return code;
}

}  // namespace

TEST_CASE("space json round trip") {
  FinSpace v = v_space();
  FinSpace back = space_from_json(space_to_json(v));
  CHECK(back == v);
  CHECK(space_to_json(v)["le"].size() == 2);

  json bad = {{"n", 3}, {"le", {{0, 1}, {1, 2}}}};
  CHECK_THROWS_AS(space_from_json(bad), Error);
  json oob = {{"n", 2}, {"le", {{0, 5}}}};
  CHECK_THROWS_AS(space_from_json(oob), Error);
}

TEST_CASE("map and cover json") {
  auto [q, m] = t0_quotient(e_space());
  PointMap back = map_from_json(map_to_json(m));
  CHECK(back.values == m.values);
  CHECK(back.dom == m.dom);
  CHECK(back.cod == m.cod);

  Cover c{{Bits::of(2, {0}), Bits::full(2)}};
  Cover cb = cover_from_json(cover_to_json(c), 2);
  CHECK(cb.members == c.members);
}

TEST_CASE("property report json carries witnesses") {
  auto rep = is_normal_report(v_space());
  json j = report_to_json(rep);
  CHECK(j["verdict"] == false);
  CHECK(j["witness"]["a"] == json::array({0}));
  CHECK(j["witness"]["b"] == json::array({1}));
}

TEST_CASE("dot export has unique node ids") {
  std::string dot = dot_hasse_t0(e_space());
  std::set<std::string> ids;
  std::istringstream lines(dot);
  std::string line;
  while (std::getline(lines, line)) {
    auto pos = line.find("[label=");
    if (pos == std::string::npos) continue;
    std::string id = line.substr(2, line.find(' ', 2) - 2);
    CHECK(ids.insert(id).second);
  }
  CHECK(ids.size() == 2);
  CHECK(dot.find("c0 -> c1") != std::string::npos);
}

TEST_CASE("cli exit codes follow the contract") {
  std::string sierp = write_temp("sierp.json", R"({"n":2,"le":[[0,1]]})");
  std::string vfile = write_temp("v.json", R"({"n":3,"le":[[2,0],[2,1]]})");
  std::string cover = write_temp("cover.json", R"({"members":[[0],[0,1]]})");
  std::string vcover = write_temp("vcover.json", R"({"members":[[0,2],[1,2]]})");

  CHECK(run({"check", "--space", sierp, "--property", "vacnormal"}) == 0);
  CHECK(run({"check", "--space", vfile, "--property", "normal"}) == 1);
  CHECK(run({"check", "--space", sierp, "--property", "bogus"}) == 2);
  CHECK(run({"check", "--space", "missing.json", "--property", "normal"}) == 2);
  CHECK(run({"bogus-subcommand"}) == 2);

  std::string out;
  CHECK(run({"enumerate", "--n", "3"}, &out) == 0);
  CHECK(json::parse(out)["count"] == 29);

  CHECK(run({"search", "--where", "!normal(X)", "--bound", "X=3"}, &out) == 1);
  CHECK(json::parse(out)["verdict"] == "counterexample");
  CHECK(run({"search", "--where", "!normal(X)", "--bound", "X=2"}, &out) == 0);
  CHECK(json::parse(out)["verdict"] == "exhausted_none");

  CHECK(run({"decompose", "--space", vfile}) == 1);
  CHECK(run({"decompose", "--space", sierp}, &out) == 0);
  CHECK(json::parse(out)["z"] == json::array({1}));

  CHECK(run({"shrink", "--space", sierp, "--cover", cover}, &out) == 0);
  CHECK(json::parse(out)["members"][0] == json::array());
  CHECK(run({"shrink", "--space", vfile, "--cover", vcover}) == 1);

  CHECK(run({"suite", "--id", "cube_chain_embeddings", "--max-n", "3"}) == 0);
  CHECK(run({"suite", "--id", "nope", "--max-n", "3"}) == 2);

  CHECK(run({"export", "--space", sierp, "--format", "dot"}, &out) == 0);
  CHECK(out.find("digraph") != std::string::npos);

  std::string twosierp = write_temp("twosierp.json", R"({"n":4,"le":[[0,1],[2,3]]})");
  CHECK(run({"decompose", "--space", twosierp, "--format", "dot"}, &out) == 0);
  CHECK(out.find("cluster_0") != std::string::npos);
  CHECK(out.find("cluster_1") != std::string::npos);
  CHECK(out.find("p0 -> p1") != std::string::npos);

  CHECK(run({"symbolic-verify", "--claim", "lower_omega_witnesses", "--windows", "8"}, &out) == 0);
  CHECK(json::parse(out)["pass"] == true);
}
