#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = soslift::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, EnumerateBrute) {
  const auto r = run({"enumerate", "--set", "V", "--m", "3", "--method", "brute"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "123\n213\n231\n321\n");
}

TEST(Cli, EnumerateMethodsAgree) {
  const auto brute = run({"enumerate", "--set", "V", "--m", "6"});
  EXPECT_EQ(brute.out, run({"enumerate", "--set", "V", "--m", "6", "--method", "lift"}).out);
  EXPECT_EQ(brute.out, run({"enumerate", "--set", "Sstar", "--m", "6", "--method", "farey"}).out);
  EXPECT_EQ(brute.out, run({"enumerate", "--set", "V", "--m", "6", "--threads", "3"}).out);
}

TEST(Cli, EnumerateJson) {
  const auto r = run({"enumerate", "--set", "V", "--m", "2", "--format", "json"});
  EXPECT_EQ(r.out, "{\"m\":2,\"values\":[1,2]}\n{\"m\":2,\"values\":[2,1]}\n");
}

TEST(Cli, EnumerateGuards) {
  EXPECT_EQ(run({"enumerate", "--set", "V", "--m", "11"}).code, 2);
  EXPECT_EQ(run({"enumerate", "--set", "Bogus", "--m", "3"}).code, 2);
  EXPECT_EQ(run({"enumerate", "--set", "W", "--m", "3", "--method", "lift"}).code, 2);
}

TEST(Cli, Tau) {
  EXPECT_EQ(run({"tau", "--m", "5", "--alpha", "2/5"}).out, "35241\n");
  EXPECT_EQ(run({"tau", "--m", "4", "--alpha", "2/5"}).out, "2413\n");
  EXPECT_EQ(run({"tau", "--m", "4", "--alpha", "2/5", "--method", "explicit"}).out, "2413\n");
  EXPECT_EQ(run({"tau", "--m", "3", "--alpha", "1/3", "--method", "sigma"}).out, "312\n");
}

TEST(Cli, MalformedInputsNameTheToken) {
  auto r = run({"tau", "--m", "4", "--alpha", "0.4"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("0.4"), std::string::npos);
  r = run({"tau", "--m", "4", "--alpha", "3/0"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("3/0"), std::string::npos);
  r = run({"project", "--perm", "1x3"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("1x3"), std::string::npos);
  r = run({"project", "--perm", "1224"});
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"lift", "--from-m", "3", "--to-m", "4"}).code, 2);
  EXPECT_EQ(run({"tau", "--m", "4"}).code, 2);
}

TEST(Cli, Project) {
  EXPECT_EQ(run({"project", "--perm", "2413"}).out, "231\n");
  EXPECT_EQ(run({"project", "--perm", "2 3 4 5 6 1"}).out, "12345\n");
  EXPECT_EQ(run({"project", "--perm", "1324"}).code, 2);
}

TEST(Cli, Lift) {
  EXPECT_EQ(run({"lift", "--from-m", "2"}).out, "123\n213\n231\n321\n");
  EXPECT_EQ(run({"lift", "--to-m", "3"}).out, "123\n213\n231\n321\n");
  const auto census = run({"lift", "--to-m", "4", "--census"});
  EXPECT_EQ(census.out,
            "m=2 parents=1 two_children=1 phi=1 size=2\n"
            "m=3 parents=2 two_children=2 phi=2 size=4\n"
            "m=4 parents=4 two_children=2 phi=2 size=6\n");
  EXPECT_EQ(run({"lift", "--to-m", "501"}).code, 2);
}

TEST(Cli, LiftFromFile) {
  const std::string path = testing::TempDir() + "soslift_v3.txt";
  {
    std::ofstream f(path);
    f << "123\n{\"m\":3,\"values\":[2,1,3]}\n\n231\n321\n";
  }
  const auto r = run({"lift", "--from-m", "3", "--input", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, run({"enumerate", "--set", "V", "--m", "4"}).out);
  {
    std::ofstream f(path);
    f << "132\n";
  }
  EXPECT_EQ(run({"lift", "--from-m", "3", "--input", path}).code, 2);
  std::remove(path.c_str());
  EXPECT_EQ(run({"lift", "--from-m", "3", "--input", "/nonexistent/file"}).code, 2);
}

TEST(Cli, Farey) {
  const auto r = run({"farey", "--m", "3"});
  EXPECT_EQ(r.out,
            "0/1 1/3 1/2 2/3 1/1\n"
            "1 (0/1, 1/3)\n2 (1/3, 1/2)\n3 (1/2, 2/3)\n4 (2/3, 1/1)\n");
  const auto doc = nlohmann::json::parse(run({"farey", "--m", "5", "--format", "json"}).out);
  EXPECT_EQ(doc["sequence"].size(), 11u);
  EXPECT_EQ(doc["intervals"].size(), 10u);
}

TEST(Cli, Tree) {
  const auto dot = run({"tree", "--depth", "2"});
  EXPECT_EQ(dot.code, 0);
  EXPECT_NE(dot.out.find("digraph"), std::string::npos);
  const auto both = nlohmann::json::parse(run({"tree", "--depth", "3", "--kind", "both", "--format", "json"}).out);
  EXPECT_EQ(both["gen"]["label"], "1");
  EXPECT_EQ(both["farey"]["label"], "(0/1, 1/1)");
  EXPECT_EQ(run({"tree", "--depth", "3", "--kind", "oak"}).code, 2);
}

TEST(Cli, Verify) {
  const auto r = run({"verify", "--m-max", "2", "--sos-m-max", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("all checks passed"), std::string::npos);
  const auto j = nlohmann::json::parse(run({"verify", "--m-max", "4", "--sos-m-max", "5", "--format", "json"}).out);
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_EQ(run({"verify", "--m-max", "11"}).code, 2);
  EXPECT_EQ(run({"verify", "--m-max", "1"}).code, 2);
}

TEST(Cli, VerifyTree) {
  const auto r = run({"verify-tree", "--depth", "6"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("all checks passed"), std::string::npos);
}

TEST(Cli, Sosrec) {
  const auto r = run({"sosrec", "--m", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("m=4 satisfying=", 0), 0u);
  EXPECT_NE(r.out.find("contains_sos=yes"), std::string::npos);
}

TEST(Cli, DeterministicOutput) {
  const std::vector<std::string> args{"verify", "--m-max", "5", "--sos-m-max", "6", "--format", "json"};
  EXPECT_EQ(run(args).out, run(args).out);
  auto threaded = args;
  threaded.insert(threaded.end(), {"--threads", "4"});
  EXPECT_EQ(run(args).out, run(threaded).out);
}
