#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"
#include "json.hpp"

using json = nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = qaff::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, WeylFactorGolden) {
  Result r = run({"weyl", "factor", "--type", "A2", "--r", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"word\":[1,2],\"tau\":[1,2,0],\"length\":2}\n");
  json g2 = json::parse(run({"weyl", "factor", "--type", "G2", "--r", "2"}).out);
  EXPECT_EQ(g2["length"], 10);
}

TEST(Cli, Inversions) {
  json j = json::parse(run({"weyl", "inversions", "--type", "C2", "--r", "1"}).out);
  ASSERT_EQ(j.size(), 4u);
  EXPECT_EQ(j[3]["root"], json::parse("[2,1]"));
  EXPECT_EQ(j[3]["delta"], 1);
}

TEST(Cli, Cartan) {
  json j = json::parse(run({"cartan", "--type", "C2"}).out);
  EXPECT_EQ(j["kac_labels"], json::parse("[1,2,1]"));
  EXPECT_EQ(j["cominuscule"], json::parse("[2]"));
  EXPECT_EQ(j["theta"], json::parse("[2,1]"));
}

TEST(Cli, RootVector) {
  Result r = run({"rootvec", "--type", "B3", "--root", "1,2,2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "[{\"word\":\"1,2,3,3,2\",\"coefficient\":\"q^-1 + q\"}]\n");
  EXPECT_EQ(run({"rootvec", "--type", "A2", "--root", "2,1"}).code, 2);
}

TEST(Cli, Character) {
  json j = json::parse(run({"character", "--type", "C2", "--r", "1", "--depth", "4"}).out);
  EXPECT_TRUE(j["equal"].get<bool>());
  EXPECT_TRUE(j["first_discrepancy"].is_null());
}

TEST(Cli, SerreAndClosure) {
  Result s = run({"serre-check", "--type", "C2", "--r", "2", "--sign", "pos", "--depth", "2"});
  EXPECT_EQ(s.code, 0);
  json j = json::parse(s.out);
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_EQ(j["sign"], "positive");
  Result c = run({"closure", "--type", "D4", "--r", "1", "--depth", "2"});
  EXPECT_EQ(c.code, 0);
  EXPECT_TRUE(json::parse(c.out)["pass"].get<bool>());
}

TEST(Cli, EllWeight) {
  json j = json::parse(run({"ell-weight", "--type", "A2", "--r", "1", "--sign", "neg", "--kmax", "3"}).out);
  EXPECT_EQ(j["fit"], "geometric");
  EXPECT_EQ(j["c_r"], "-q^-4 + q^-2");
  EXPECT_EQ(j["o_r"], 1);
  EXPECT_EQ(j["psi"].size(), 4u);
  json p = json::parse(run({"ell-weight", "--type", "C3", "--r", "3", "--sign", "pos"}).out);
  EXPECT_EQ(p["fit"], "linear");
}

TEST(Cli, Deterministic) {
  std::vector<std::string> args = {"ell-weight", "--type", "D4", "--r", "4", "--kmax", "3"};
  EXPECT_EQ(run(args).out, run(args).out);
  std::vector<std::string> inv = {"weyl", "inversions", "--type", "E6", "--r", "1"};
  EXPECT_EQ(run(inv).out, run(inv).out);
}

TEST(Cli, TextAndPretty) {
  Result t = run({"weyl", "factor", "--type", "A2", "--r", "1", "--format", "text"});
  EXPECT_EQ(t.code, 0);
  EXPECT_FALSE(t.out.empty());
  EXPECT_EQ(t.out.find('{'), std::string::npos);
  Result p = run({"cartan", "--type", "A2", "--pretty"});
  EXPECT_NE(p.out.find("\n  "), std::string::npos);
  EXPECT_EQ(json::parse(p.out), json::parse(run({"cartan", "--type", "A2"}).out));
}

TEST(Cli, ExitCodes) {
  Result bad_type = run({"cartan", "--type", "Q7"});
  EXPECT_EQ(bad_type.code, 2);
  EXPECT_NE(bad_type.err.find("valid"), std::string::npos);
  Result noncom = run({"serre-check", "--type", "B3", "--r", "2", "--depth", "1"});
  EXPECT_EQ(noncom.code, 2);
  EXPECT_NE(noncom.err.find("not cominuscule"), std::string::npos);
  EXPECT_EQ(run({"ell-weight", "--type", "A2", "--r", "1", "--kmax", "2"}).code, 2);
  EXPECT_EQ(run({"weyl", "factor", "--type", "A2", "--r", "5"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"serre-check", "--type", "A2", "--r", "1", "--sign", "up", "--depth", "1"}).code, 2);
}
