#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "analysis.hpp"
#include "commands.hpp"
#include "hurwitz/catalog.hpp"
#include "hurwitz/json_io.hpp"

using namespace hurwitz;

namespace {

const std::string kData = HURWITZ_DATA_DIR;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "hurwitz");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return kData + "/" + name; }

}  // namespace

TEST(Cli, AnalyzeDihedral) {
  const Result r = run({"analyze", data("a5_dihedral.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = io::json::parse(r.out);
  EXPECT_TRUE(j["validation"]["valid"].get<bool>());
  EXPECT_EQ(j["cover"]["arithmetic_genus"], 6);
  EXPECT_EQ(j["cover"]["dihedral_nodes"], 6);
  EXPECT_EQ(j["characters"]["h1"][0], 12);
}

TEST(Cli, AnalyzePretty) {
  const Result r = run({"analyze", data("a5_split.json"), "--pretty"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("arithmetic genus 6"), std::string::npos);
}

TEST(Cli, AnalyzeStabilizerPoint) {
  const Result r = run({"analyze", data("a5_tuple4_datum.json"), "--stabilizer-point", "0"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = io::json::parse(r.out);
  EXPECT_EQ(j["subcover"]["degree"], 5);
  EXPECT_EQ(j["subcover"]["arithmetic_genus"], 0);
  EXPECT_EQ(run({"analyze", data("a5_dihedral.json"), "--stabilizer-point", "9"}).code, 1);
}

TEST(Cli, AnalyzeErrors) {
  EXPECT_EQ(run({"analyze", data("malformed.json")}).code, 1);
  const Result schema = run({"analyze", data("not_in_group.json")});
  EXPECT_EQ(schema.code, 1);
  EXPECT_NE(schema.err.find("$.components[0].points[1].m"), std::string::npos);
  EXPECT_EQ(run({"analyze", data("missing.json")}).code, 1);
  const Result broken = run({"analyze", data("a5_tampered.json")});
  EXPECT_EQ(broken.code, 2);
  EXPECT_NE(broken.out.find("SurfaceRelation"), std::string::npos);
}

TEST(Cli, Usage) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"analyze"}).code, 1);
  EXPECT_EQ(run({"graph", data("a5_dihedral.json"), "--which", "both"}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, DegenerateSplits) {
  const Result r = run({"degenerate", data("a5_tuple4.json"), "--splits"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = io::json::parse(r.out);
  ASSERT_EQ(j["degenerations"].size(), 1u);
  EXPECT_EQ(j["degenerations"][0]["kind"], "split");
  EXPECT_EQ(j["degenerations"][0]["report"]["cover"]["arithmetic_genus"], 6);
}

TEST(Cli, DegenerateDihedral) {
  const Result r = run({"degenerate", data("a5_tuple3.json"), "--dihedral", "--index", "0"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = io::json::parse(r.out);
  EXPECT_EQ(j["degenerations"].size(), 5u);
  EXPECT_TRUE(j["warnings"].empty());
}

TEST(Cli, DegenerateKleinWarns) {
  const Result r = run({"degenerate", data("psl27_tuple3.json"), "--dihedral", "--index", "0"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = io::json::parse(r.out);
  EXPECT_TRUE(j["degenerations"].empty());
  ASSERT_EQ(j["warnings"].size(), 1u);
  EXPECT_NE(j["warnings"][0].get<std::string>().find("order 21"), std::string::npos);
  EXPECT_EQ(run({"degenerate", data("psl27_tuple3.json"), "--dihedral", "--index", "7"}).code, 1);
}

TEST(Cli, DegenerateBadProduct) {
  auto j = io::read_file(data("a5_tuple3.json"));
  std::swap(j["tuple"][1], j["tuple"][2]);
  const auto path = std::filesystem::temp_directory_path() / "hurwitz_bad_tuple.json";
  std::ofstream(path) << j.dump();
  EXPECT_EQ(run({"degenerate", path.string()}).code, 2);
}

TEST(Cli, Character) {
  const Result r = run({"character", data("a5_dihedral.json")});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("chi_dR"), std::string::npos);
  const Result j = run({"character", data("a5_dihedral.json"), "--json"});
  EXPECT_EQ(io::json::parse(j.out)["degree"], -10);
  EXPECT_EQ(run({"character", data("a5_tampered.json")}).code, 2);
}

TEST(Cli, GraphQuotient) {
  const Result r = run({"graph", data("a5_dihedral.json")});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "graph quotient {\n"
            "  node [shape=circle];\n"
            "  v0 [label=\"v0\"];\n"
            "  v0 -- v0 [label=\"5\", style=dashed];\n"
            "}\n");
  const Result split = run({"graph", data("a5_split.json"), "--which", "quotient"});
  EXPECT_NE(split.out.find("v1 -- v0 [label=\"5\"];"), std::string::npos);
  EXPECT_EQ(split.out.find("dashed"), std::string::npos);
}

TEST(Cli, GraphCover) {
  const auto path = std::filesystem::temp_directory_path() / "hurwitz_cover.dot";
  const Result r = run({"graph", data("a5_dihedral.json"), "--which", "cover", "--dot", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string dot = buf.str();
  EXPECT_NE(dot.find("v0 [label=\"g=0 |H|=60\"];"), std::string::npos);
  std::size_t loops = 0;
  for (std::size_t pos = 0; (pos = dot.find("v0 -- v0 [label=\"10\", style=dashed];", pos)) != std::string::npos; ++pos) {
    ++loops;
  }
  EXPECT_EQ(loops, 6u);
  EXPECT_EQ(run({"graph", data("a5_tampered.json")}).code, 2);
}

TEST(Cli, VerifyExamples) {
  const Result r = run({"verify-examples"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  EXPECT_NE(r.out.find("normaliser of the Sylow 7-group is dihedral"), std::string::npos);
  EXPECT_NE(r.out.find("WARN  klein.realizability"), std::string::npos);
  EXPECT_NE(r.out.find("WARN  fdef.even"), std::string::npos);
  EXPECT_NE(r.out.find("PASS  fdef.odd"), std::string::npos);
}

TEST(Cli, VerifyExamplesTampered) {
  const Result r = run({"verify-examples", "--datum", data("a5_tampered.json")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("first failure: a5.datum_valid"), std::string::npos);
  EXPECT_EQ(run({"verify-examples", "--datum", data("a5_dihedral.json")}).code, 0);
}

TEST(Report, JsonRoundTrip) {
  const auto fam = catalog::icosahedral_family();
  for (const BoundaryDatum& d : {fam.dihedral, fam.split, hurwitz_to_datum(fam.quadruple)}) {
    const cli::AnalysisReport report = cli::analyze(d, {0});
    const auto j = cli::to_json(report);
    const cli::AnalysisReport back = cli::report_from_json(io::json::parse(j.dump()));
    EXPECT_EQ(back, report);
    EXPECT_EQ(cli::to_json(back), j);
  }
  auto bad = fam.dihedral;
  std::swap(bad.components[0].points[1], bad.components[0].points[2]);
  const cli::AnalysisReport invalid = cli::analyze(bad);
  EXPECT_EQ(cli::report_from_json(cli::to_json(invalid)), invalid);
}

TEST(Report, Deterministic) {
  const Result a = run({"degenerate", data("a5_tuple3.json"), "--dedup"});
  const Result b = run({"degenerate", data("a5_tuple3.json"), "--dedup"});
  EXPECT_EQ(a.out, b.out);
}
