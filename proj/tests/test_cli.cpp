#include <gtest/gtest.h>

#include <sstream>

#include "pgit_cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<const char*> args) {
  args.insert(args.begin(), "pgit");
  std::ostringstream out, err;
  int code = pgit::cli::run(static_cast<int>(args.size()), args.data(), out, err);
  return {code, out.str(), err.str()};
}

pgit::cli::json run_json(std::vector<const char*> args) {
  auto r = run(std::move(args));
  EXPECT_EQ(r.code, 0) << r.err;
  return pgit::cli::json::parse(r.out);
}

}  // namespace

TEST(Cli, InfoC2) {
  auto j = run_json({"info", "C2"});
  EXPECT_EQ(j["iota"], pgit::cli::json::array({3, 4}));
  EXPECT_EQ(j["dimX"], 4);
  EXPECT_EQ(j["weylOrder"], 8);
  EXPECT_EQ(j["census"]["curves"], 1);
  EXPECT_EQ(j["census"]["twoDim"], 3);
}

TEST(Cli, InfoA1SuppressesCensus) {
  auto j = run_json({"info", "A1"});
  EXPECT_TRUE(j["census"].is_null());
  EXPECT_TRUE(j.contains("censusNote"));
}

TEST(Cli, InfoCompositeMinimumValues) {
  auto j = run_json({"info", "A3xG2"});
  ASSERT_EQ(j["components"].size(), 2u);
  EXPECT_EQ(j["components"][0]["m"], 3);
  EXPECT_EQ(j["components"][1]["m"], 6);
}

TEST(Cli, InfoDoesNotEnumerateLargeGroups) {
  auto j = run_json({"info", "E8"});
  EXPECT_EQ(j["weylOrder"], 696729600);
  EXPECT_EQ(j["components"][0]["m"], 58);
}

TEST(Cli, StrataC2Divisor) {
  auto j = run_json({"strata", "C2", "--weight", "3,1"});
  EXPECT_EQ(j["codim"], 1);
  EXPECT_FALSE(j["movable"].get<bool>());
  bool divisor = false;
  for (const auto& s : j["strata"]) divisor = divisor || (s["len"] == 2 && s["dim"] == 3);
  EXPECT_TRUE(divisor);
}

TEST(Cli, ChambersC2Counts) {
  auto j = run_json({"chambers", "C2"});
  EXPECT_EQ(j["counts"]["chambers"], 2);
  EXPECT_EQ(j["counts"]["walls"], 1);
  EXPECT_EQ(j["hyperplanes"].size(), 4u);
}

TEST(Cli, MultRayC2) {
  auto j = run_json({"mult", "C2", "--ray", "1,0", "--kmax", "8"});
  std::vector<int> m;
  for (const auto& v : j["values"]) m.push_back(v["m"].get<int>());
  EXPECT_EQ(m, (std::vector<int>{0, 0, 0, 1, 0, 0, 0, 1}));
  EXPECT_EQ(j["saturation"]["k"], 4);
}

TEST(Cli, MultWeight) {
  auto j = run_json({"mult", "A2", "--weight", "2,2"});
  EXPECT_EQ(j["mlambda"], 1);
  EXPECT_EQ(j["dim"], 27);
  EXPECT_EQ(j["sl2"]["0"], 1);
}

TEST(Cli, ClassifyAndCensus) {
  auto j = run_json({"classify", "C2", "--weight", "2,1"});
  EXPECT_EQ(j["kind"], "wall-face");
  EXPECT_EQ(j["zero"].size(), 2u);
  auto c = run_json({"census", "A3"});
  EXPECT_EQ(c["twoDim"], 11);
}

TEST(Cli, ConesB3AndRefusal) {
  auto j = run_json({"cones", "B3", "0"});
  EXPECT_EQ(j["effMov"].size(), 3u);
  auto r = run({"cones", "C2", "0"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("refused"), std::string::npos);
  EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"info", "Q7"}).code, 1);
  EXPECT_EQ(run({"strata", "C2", "--weight", "1,0"}).code, 2);
  EXPECT_EQ(run({"strata", "C2", "--weight", "1,2,3"}).code, 1);
  EXPECT_EQ(run({"strata", "C2"}).code, 1);
  EXPECT_EQ(run({"info", "C2", "--bogus"}).code, 1);
  EXPECT_EQ(run({"census", "A1"}).code, 2);
  EXPECT_EQ(run({"chambers", "A5"}).code, 2);
  EXPECT_EQ(run({"strata", "E8", "--weight", "1,1,1,1,1,1,1,1"}).code, 2);
  EXPECT_EQ(run({"mult", "C2"}).code, 1);
  EXPECT_EQ(run({"info", "C2", "--format", "xml"}).code, 1);
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, TabularFormats) {
  auto t = run({"chambers", "C2", "--format", "tsv"});
  EXPECT_EQ(t.code, 0);
  EXPECT_EQ(t.out.substr(0, t.out.find('\n')), "id\tsignature\tkind\trep");
  auto tb = run({"info", "C2", "--format", "table"});
  EXPECT_EQ(tb.code, 0);
  EXPECT_NE(tb.out.find("iota       3,4"), std::string::npos);
}

TEST(Cli, OutputIsDeterministic) {
  for (auto args : std::vector<std::vector<const char*>>{
           {"chambers", "B3"}, {"classify", "G2", "--weight", "2,3"}, {"selftest", "--seed", "9"}}) {
    auto a = run(args);
    auto b = run(args);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(Cli, SelftestPrintsSeed) {
  auto j = run_json({"selftest", "--seed", "42"});
  EXPECT_EQ(j["seed"], 42);
  EXPECT_TRUE(j["passed"].get<bool>());
  auto t = run({"selftest", "--seed", "42", "--format", "tsv"});
  EXPECT_NE(t.out.find("seed\t42"), std::string::npos);
}
