#include "cli_app.hpp"

#include <gtest/gtest.h>

#include <sstream>

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = clans::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, Words) {
  auto r = run({"words", "-+-"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1,2\n2,1\n");
  auto j = nlohmann::json::parse(run({"words", "-+-", "--json"}).out);
  EXPECT_EQ(j.at("words"), (nlohmann::json{"1,2", "2,1"}));
  EXPECT_EQ(clans::parse_clan(j.at("clan").get<std::string>()), clans::parse_clan("-+-"));
}

TEST(Cli, CountAndMaxchains) {
  EXPECT_EQ(run({"count", "+--+"}).out, "enumerated=6 formula=6 OK\n");
  EXPECT_EQ(run({"maxchains", "2", "2"}).out, "enumerated=32 formula=32 OK\n");
  auto t = run({"maxchains", "--table", "--max-n", "3"});
  EXPECT_EQ(t.code, 0);
  EXPECT_NE(t.out.find("2  1           4        4    yes"), std::string::npos);
}

TEST(Cli, Schubert) {
  EXPECT_EQ(run({"schubert", "+--+"}).out, "x1^3*x2 + x1^3*x3 + x1^2*x2*x3\n");
  EXPECT_EQ(run({"schubert", "4132", "--perm"}).out, "x1^3*x2 + x1^3*x3\n");
  EXPECT_EQ(run({"schubert", "+--+", "--wy"}).out, run({"schubert", "+--+"}).out);
  auto j = nlohmann::json::parse(run({"schubert", "+--+", "--json"}).out);
  EXPECT_EQ(clans::polynomial_from_json(j), clans::parse_polynomial("x1^3*x2 + x1^3*x3 + x1^2*x2*x3"));
}

TEST(Cli, Stanley) {
  auto a = run({"stanley", "+--+", "--vars", "3"});
  auto b = run({"stanley", "+--+", "--vars", "3", "--method", "isobaric"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(run({"stanley", "+--+"}).code, 2);
}

TEST(Cli, AtomsShapesPoset) {
  EXPECT_EQ(run({"atoms", "+--+"}).out, "3241  {3,4}:1 {1,2}:2\n4132  {1,2}:1 {3,4}:2\n");
  auto s = nlohmann::json::parse(run({"shapes", "-+-", "--json"}).out);
  EXPECT_EQ(s.at("shapes").size(), 2u);
  auto six = nlohmann::json::parse(run({"shapes", "-+-+-+", "--json"}).out);
  EXPECT_EQ(six.at("shapes").size(), 5u);
  auto dot = run({"poset", "1", "1", "--dot"}).out;
  EXPECT_EQ(dot.rfind("digraph", 0), 0u);
  EXPECT_NE(dot.find("\"2 1\" -> \"+ -\" [label=\"s1\"];"), std::string::npos);
  auto pj = clans::poset_from_json(nlohmann::json::parse(run({"poset", "2", "2", "--json"}).out));
  clans::Poset direct = clans::build_poset(2, 2);
  EXPECT_EQ(pj.elements, direct.elements);
  EXPECT_EQ(pj.covers, direct.covers);
  EXPECT_EQ(run({"poset", "6", "5"}).code, 2);
}

TEST(Cli, Verify) {
  auto r = run({"verify", "mt", "--max-n", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("OK: 1 theorem, ", 0), 0u);
  EXPECT_NE(r.out.find("classes checked"), std::string::npos);
  auto c = run({"verify", "chains", "--max-n", "4"});
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(c.out.find("FAIL"), std::string::npos);
  auto i = run({"verify", "identity", "--p", "2", "--q", "2", "--vars", "5"});
  EXPECT_EQ(i.code, 0);
  EXPECT_NE(i.out.find("OK: identity"), std::string::npos);
  EXPECT_EQ(run({"verify", "bogus"}).code, 2);
}

TEST(Cli, MaximizeAndDensity) {
  auto j = nlohmann::json::parse(run({"maximize", "2", "10", "--json"}).out);
  EXPECT_EQ(j.at("p"), 2);
  EXPECT_NEAR(j.at("phi")[0].get<double>(), 3.94233, 1e-4);
  EXPECT_EQ(j.at("argmax")[0].at("count"), "10090080");
  EXPECT_EQ(run({"maximize", "3", "3"}).code, 2);
  EXPECT_EQ(run({"density", "0.5", "1"}).out, "1\n");
  EXPECT_EQ(run({"density", "0.5", "0"}).code, 2);
  auto g = run({"density", "--theta", "0.25", "--grid", "4"});
  EXPECT_EQ(g.code, 0);
  EXPECT_EQ(std::count(g.out.begin(), g.out.end(), '\n'), 5);
}

TEST(Cli, UsageErrors) {
  auto u = run({"frob"});
  EXPECT_EQ(u.code, 2);
  EXPECT_NE(u.err.find("unknown verb"), std::string::npos);
  EXPECT_EQ(run({}).code, 2);
  auto bad = run({"words", "2+1"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("invalid clan"), std::string::npos);
  EXPECT_EQ(run({"words"}).code, 2);
  EXPECT_EQ(run({"count", "2 1"}).out, "enumerated=1\n");
  auto help = run({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("JSON schemas"), std::string::npos);
}

TEST(Cli, Deterministic) {
  for (std::vector<std::string> args : {std::vector<std::string>{"poset", "2", "2", "--json"},
                                         {"shapes", "-+-+-+"}, {"maximize", "2", "12"}, {"atoms", "9 + + 7 - 8 4 6 1"}}) {
    auto a = run(args), b = run(args);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
  }
}
