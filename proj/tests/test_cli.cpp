#include "schur/cli.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = schur::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

std::vector<std::string> tokens(const std::string& line) {
  std::vector<std::string> v;
  std::istringstream in(line);
  for (std::string t; in >> t;) v.push_back(t);
  return v;
}

std::string fixture(const char* name) { return std::string(SCHUR_FIXTURES) + "/" + name; }

}  // namespace

TEST_CASE("bounds on h3") {
  const Outcome r = run({"bounds", "heisenberg:1"});
  CHECK(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 2);
  CHECK(tokens(ls[0]) ==
        std::vector<std::string>{"name", "n", "m", "c", "dimM", "batten", "hs", "yank", "nr", "rai", "refined"});
  CHECK(tokens(ls[1]) == std::vector<std::string>{"heisenberg:1", "3", "1", "2", "2", "3", "2", "2", "2", "2", "2"});
  CHECK(r.err.empty());
}

TEST_CASE("bounds marks refined violations") {
  const Outcome r = run({"bounds", "dirsum:heisenberg:1+abelian:1"});
  CHECK(r.code == 0);
  CHECK(tokens(lines(r.out)[1]).back() == "3!");
  CHECK(r.err.find("warning") != std::string::npos);
}

TEST_CASE("bounds as csv and json") {
  const Outcome csv = run({"--format", "csv", "bounds", "heisenberg:1"});
  CHECK(csv.code == 0);
  CHECK(lines(csv.out)[1] == "heisenberg:1,3,1,2,2,3,2,2,2,2,2");

  const Outcome js = run({"--format", "json", "bounds", "heisenberg:2"});
  CHECK(js.code == 0);
  const auto j = nlohmann::json::parse(js.out);
  CHECK(j["dim_M"] == 5);
  CHECK(j["rai"] == 7);
  CHECK(j["slack"]["rai"] == 2);
  for (const char* key : {"name", "n", "m", "c", "batten", "hardy_stitzinger", "yankosky_closed", "niroomand_russo",
                          "rai_refined", "theorem_holds", "refined_holds"})
    CHECK(j.contains(key));
}

TEST_CASE("info, multiplier and kernel") {
  const Outcome info = run({"info", "filiform:4"});
  CHECK(info.code == 0);
  CHECK(info.out.find("filiform:4") != std::string::npos);

  const Outcome mult = run({"--format", "json", "multiplier", "dirsum:heisenberg:1+abelian:1"});
  CHECK(mult.code == 0);
  CHECK(nlohmann::json::parse(mult.out)["dim_M"] == 4);

  const Outcome ker = run({"--format", "json", "kernel", "heisenberg:2"});
  CHECK(ker.code == 0);
  const auto j = nlohmann::json::parse(ker.out);
  CHECK(j["kernel"]["entries"][0]["ker_lambda_i"] == 4);
  CHECK(j["eq3"]["holds"] == true);

  const Outcome ab = run({"kernel", "abelian:3"});
  CHECK(ab.code == 2);
  CHECK(ab.err.find("error") != std::string::npos);
}

TEST_CASE("verify lemma") {
  const Outcome r = run({"verify", "lemma", "--arity-max", "4"});
  CHECK(r.code == 0);
  std::vector<std::string> heads;
  for (const auto& l : lines(r.out))
    if (l.rfind("i=", 0) == 0) heads.push_back(l);
  CHECK(heads == std::vector<std::string>{"i=3: 0", "i=4: 0"});
  // the generated expression is printed for auditing
  CHECK(r.out.find("[[[x1,x2],x3],x4] + [[x4,[x1,x2]],x3]") != std::string::npos);

  CHECK(run({"verify", "lemma", "--arity-max", "2"}).code == 2);
  CHECK(run({"verify", "lemma", "--arity-max", "x"}).code == 2);
}

TEST_CASE("input errors exit 2") {
  const Outcome bad = run({"info", "file:" + fixture("nonsense.lie")});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("nonsense.lie:3:") != std::string::npos);
  CHECK(bad.out.empty());

  CHECK(run({"info", "klein:3"}).code == 2);
  CHECK(run({"bounds", "heisenberg:1", "--nope"}).code == 2);
  CHECK(run({"--format", "xml", "bounds", "heisenberg:1"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"verify", "corpus", "--max-dim", "-1"}).code == 2);
}

TEST_CASE("verify corpus") {
  const Outcome r = run({"verify", "corpus", "--max-dim", "5"});
  CHECK(r.code == 0);
  CHECK(r.err.find("dirsum:heisenberg:1+abelian:1") != std::string::npos);
  CHECK(r.out.find("0 failed checks") != std::string::npos);

  SUBCASE("strict remark turns the warning into a failure") {
    CHECK(run({"verify", "corpus", "--max-dim", "5", "--strict-remark"}).code == 1);
  }
  SUBCASE("small corpora without violations stay at exit 0 under strict") {
    CHECK(run({"verify", "corpus", "--max-dim", "3", "--strict-remark"}).code == 0);
  }
  SUBCASE("parallel output matches serial") {
    const Outcome p = run({"verify", "corpus", "--max-dim", "6", "--parallel"});
    const Outcome s = run({"verify", "corpus", "--max-dim", "6"});
    CHECK(p.code == s.code);
    CHECK(p.out == s.out);
    CHECK(p.err == s.err);
  }
  SUBCASE("json report") {
    const Outcome js = run({"verify", "corpus", "--max-dim", "4", "--json"});
    CHECK(js.code == 0);
    const auto j = nlohmann::json::parse(js.out);
    CHECK(j["passed"] == true);
    CHECK(j["failures"].empty());
    CHECK(j["remark_violations"] == nlohmann::json::array({"dirsum:heisenberg:1+abelian:1"}));
    std::vector<std::string> names;
    for (const auto& a : j["algebras"]) names.push_back(a["name"]);
    CHECK(std::is_sorted(names.begin(), names.end()));
    CHECK(j["members"] == names.size());
  }
}
