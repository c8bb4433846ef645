#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hcrep/cli.hpp"
#include "hcrep/io.hpp"
#include "support/generators.hpp"

using namespace hcrep;
using namespace hcrep::testing;
using io::Json;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / ("hcrep_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

const char* kG2 = R"({
  "dimension": 2, "lattice": "div52",
  "points": [
    {"vec": [0, 0], "value": "52"}, {"vec": [10, 20], "value": "26"},
    {"vec": [30, 5], "value": "4"}, {"vec": [30, 20], "value": "2"},
    {"vec": [9, "inf"], "value": "52"}, {"vec": [29, 19], "value": "52"},
    {"vec": [29, "inf"], "value": "26"}, {"vec": ["inf", 4], "value": "52"},
    {"vec": ["inf", 19], "value": "4"}, {"vec": ["inf", "inf"], "value": "2"}
  ]})";

}  // namespace

TEST(IO, LatticeRoundTrip) {
  Rng rng(81);
  for (int t = 0; t < 50; ++t) {
    auto l = random_lattice(rng);
    EXPECT_EQ(*io::parse_lattice(io::to_json(*l)), *l);
  }
  Json leq = Json::parse(R"({"elements": ["0", "1"], "leq": [[true, true], [false, true]]})");
  EXPECT_EQ(*io::parse_lattice(leq), lattices::chain(2));
}

TEST(IO, RepRoundTrip) {
  Rng rng(82);
  for (int t = 0; t < 100; ++t) {
    auto l = random_lattice(rng);
    const std::size_t d = pick(rng, 1, 3);
    Rep g = random_rep(rng, l, d);
    EXPECT_EQ(io::parse_rep(io::to_json(g)), g);
    ExtRep h = complete(g);
    EXPECT_EQ(io::parse_extrep(io::to_json(h)), h);
  }
}

TEST(IO, EqualityRoundTrip) {
  Example b = example("B");
  auto plain = to_equalities(b.rep);
  auto doc = io::parse_equalities(io::to_json(*b.lattice, plain));
  EXPECT_EQ(doc.plain, plain);
  auto ext = to_extended_equalities(b.rep);
  doc = io::parse_equalities(io::to_json(*b.lattice, ext));
  EXPECT_EQ(doc.extended, ext);
}

TEST(IO, MalformedDocuments) {
  EXPECT_THROW(io::parse_rep(Json::parse(R"({"dimension": 2})")), ParseError);
  EXPECT_THROW(io::parse_rep(Json::parse(
                   R"({"dimension": 1, "lattice": "chain2", "points": [{"vec": ["inf"], "value": "1"}]})")),
               ParseError);
  EXPECT_THROW(io::parse_rep(Json::parse(
                   R"({"dimension": 1, "lattice": "chain2", "points": [{"vec": [-1], "value": "1"}]})")),
               ParseError);
  EXPECT_THROW(io::parse_rep(Json::parse(
                   R"({"dimension": 1, "lattice": "chain2", "points": [{"vec": [1], "value": "7"}]})")),
               ParseError);
  EXPECT_THROW(io::parse_lattice(Json::parse(R"("nonsense")")), ParseError);
  EXPECT_THROW(io::parse_lattice(Json::parse(R"({"elements": ["a"], "meet": [[0]]})")),
               ParseError);
  std::istringstream bad("{not json");
  EXPECT_THROW(io::read_json(bad), ParseError);
  // a well-formed document describing a non-lattice
  EXPECT_THROW(io::parse_lattice(Json::parse(
                   R"({"elements": ["a", "b"], "leq": [[true, false], [false, true]]})")),
               DomainError);
}

TEST(CLI, Div52CanonicalPipeline) {
  CliRun ex = run({"example", "div52"});
  ASSERT_EQ(ex.code, 0) << ex.err;
  CliRun can = run({"canonical", "--format", "table"}, ex.out);
  ASSERT_EQ(can.code, 0) << can.err;
  EXPECT_EQ(can.out, "(0,0)\t52\n(10,20)\t26\n(30,5)\t4\n(30,20)\t2\n");
}

TEST(CLI, ExtendedEqualitiesOfB) {
  CliRun ex = run({"example", "B"});
  CliRun eqs = run({"to-extended-equalities", "--format", "table"}, ex.out);
  ASSERT_EQ(eqs.code, 0) << eqs.err;
  EXPECT_NE(eqs.out.find("[{1}; Λ] = alpha"), std::string::npos);
  CliRun reduced = run({"to-equalities", "--reduced", "--format", "table"}, ex.out);
  EXPECT_EQ(reduced.out, "[1,1] = alpha\n[alpha,1] = 0\n");
}

TEST(CLI, CheckCompleteWithFile) {
  std::string rep = temp_file("div52.json", run({"example", "div52"}).out);
  std::string g2 = temp_file("g2.json", kG2);
  CliRun ok = run({"check-complete", "--rep", rep, "--extrep", g2});
  EXPECT_EQ(ok.code, 0) << ok.err;
  EXPECT_EQ(Json::parse(ok.out)["complete"], true);

  Json partial = Json::parse(kG2);
  partial["points"].erase(partial["points"].size() - 1);
  std::string g2b = temp_file("g2b.json", partial.dump());
  CliRun no = run({"check-complete", "--rep", rep, "--extrep", g2b});
  EXPECT_EQ(no.code, cli::kExitFalse);
  EXPECT_EQ(Json::parse(no.out)["complete"], false);
}

TEST(CLI, EvaluationCommands) {
  std::string div = run({"example", "div52"}).out;
  EXPECT_EQ(run({"eval", "--point", "30,20", "--format", "table"}, div).out, "2\n");
  EXPECT_EQ(run({"eval-ext", "--point", "(29,inf)", "--format", "table"}, div).out, "26\n");
  CliRun sub = run({"sublevel", "--alpha", "2"}, div);
  EXPECT_EQ(Json::parse(sub.out)["generators"], Json::parse("[[30,20]]"));
  EXPECT_EQ(run({"determinable"}, div).code, cli::kExitFalse);
}

TEST(CLI, PropertyCommands) {
  std::string b = run({"example", "B7"}).out;
  CliRun props = run({"props"}, b);
  ASSERT_EQ(props.code, 0) << props.err;
  Json j = Json::parse(props.out);
  EXPECT_EQ(j["admissible"], true);
  EXPECT_EQ(j["HC7"]["holds"], true);
  EXPECT_EQ(run({"admissible"}, b).code, 0);

  CliRun top = run({"admissible"}, R"({"dimension": 2, "lattice": "chain2", "points": []})");
  EXPECT_EQ(top.code, cli::kExitFalse);
  CliRun report = run({"props"}, R"({"dimension": 2, "lattice": "chain2", "points": []})");
  EXPECT_TRUE(Json::parse(report.out)["HC1"].contains("witness"));
}

TEST(CLI, LearnAndFromEqualities) {
  std::string div = run({"example", "div52"}).out;
  CliRun l = run({"learn"}, div);
  ASSERT_EQ(l.code, 0) << l.err;
  Json j = Json::parse(l.out);
  EXPECT_EQ(j["points"].size(), 4u);
  EXPECT_TRUE(j["report"].contains("queries"));

  CliRun eqs = run({"from-equalities", "--assume-hc12"},
                R"({"lattice": "chain3", "equalities": [
                      {"args": ["1", "1"], "rhs": "alpha"},
                      {"args": ["1", "alpha"], "rhs": "0"}]})");
  ASSERT_EQ(eqs.code, 0) << eqs.err;
  CliRun b = run({"canonical"}, run({"example", "B"}).out);
  Json got = Json::parse(eqs.out);
  got.erase("report");
  EXPECT_EQ(got, Json::parse(b.out));
}

TEST(CLI, ExitCodes) {
  EXPECT_EQ(run({}).code, cli::kExitParse);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kExitParse);
  EXPECT_EQ(run({"canonical"}, "{oops").code, cli::kExitParse);
  EXPECT_EQ(run({"canonical", "--rep", "/nonexistent/file.json"}).code, cli::kExitParse);
  std::string div = run({"example", "div52"}).out;
  CliRun dim = run({"eval", "--point", "1,2,3"}, div);
  EXPECT_EQ(dim.code, cli::kExitDomain);
  EXPECT_FALSE(dim.err.empty());
  EXPECT_EQ(run({"props"}, div).code, cli::kExitDomain);
  EXPECT_EQ(run({"sublevel", "--alpha", "7"}, div).code, cli::kExitParse);
  EXPECT_EQ(run({"--help"}).code, 0);
}
