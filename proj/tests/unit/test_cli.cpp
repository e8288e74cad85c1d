#include "cli/commands.hpp"

#include <hopfkit/constructions.hpp>
#include <hopfkit/io.hpp>

#include <gtest/gtest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>

using namespace hopfkit;
using namespace hopfkit::cli;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const fs::path kCorpus = HOPFKIT_CORPUS_DIR;

fs::path corpus(const std::string& name) { return kCorpus / name; }

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "hopfkit_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

json as_json(const CommandResult& r) { return json::parse(r.output); }

}  // namespace

TEST(Verify, PassingAlgebraExitsZero) {
  const CommandResult r = cmd_verify(corpus("ac2.hopf.json"), Format::Json);
  EXPECT_EQ(r.exit_code, kExitOk) << r.error;
  const json j = as_json(r);
  EXPECT_EQ(j["dim"], 8);
  EXPECT_EQ(j["hopf_axioms"].size(), 7u);
  EXPECT_EQ(j["r_matrix"].size(), 8u);
  for (const json& c : j["r_matrix"]) EXPECT_TRUE(c["holds"].get<bool>()) << c["name"];
}

TEST(Verify, BrokenCounitIsRejectedWithWitness) {
  const CommandResult r = cmd_verify(corpus("broken_counit.hopf.json"), Format::Json);
  EXPECT_EQ(r.exit_code, kExitRejected);
  EXPECT_NE(r.error.find("counit"), std::string::npos) << r.error;
  const json j = as_json(r);
  const json& counit = j["hopf_axioms"][3];
  EXPECT_EQ(counit["name"], "counit");
  EXPECT_FALSE(counit["holds"].get<bool>());
  EXPECT_EQ(counit["witness"], json::array({2}));
}

TEST(Verify, MissingFileIsAnInputError) {
  const CommandResult r = cmd_verify(corpus("missing.hopf.json"), Format::Text);
  EXPECT_EQ(r.exit_code, kExitInput);
  EXPECT_TRUE(r.output.empty());
  EXPECT_FALSE(r.error.empty());
}

TEST(Verify, MalformedFileIsAnInputError) {
  const fs::path p = scratch("malformed.hopf.json");
  write_text_file(p, "{\"dim\": 2,\n\"basis\": [");
  EXPECT_EQ(cmd_verify(p, Format::Text).exit_code, kExitInput);
}

TEST(Verify, TextAndJsonAreDeterministic) {
  for (const Format f : {Format::Text, Format::Json}) {
    const CommandResult a = cmd_verify(corpus("ks3_rho.hopf.json"), f);
    const CommandResult b = cmd_verify(corpus("ks3_rho.hopf.json"), f);
    EXPECT_EQ(a.output, b.output);
  }
  EXPECT_NE(cmd_verify(corpus("ac2.hopf.json"), Format::Text).output.find("verdict: pass"), std::string::npos);
}

TEST(Analyze, ReportsRankAndFlags) {
  const json ac2 = as_json(cmd_analyze(corpus("ac2.hopf.json"), std::nullopt, Format::Json));
  EXPECT_EQ(ac2["rank"], 8);
  EXPECT_EQ(ac2["minimal"], true);
  EXPECT_EQ(ac2["triangular"], false);
  EXPECT_EQ(ac2["characters"]["status"], "unavailable");

  const json tri = as_json(cmd_analyze(corpus("ac2_triangular.hopf.json"), std::nullopt, Format::Json));
  EXPECT_EQ(tri["triangular"], true);

  const json dz3 = as_json(cmd_analyze(corpus("double_z3.hopf.json"), std::nullopt, Format::Json));
  EXPECT_EQ(dz3["factorizable"], true);
  EXPECT_EQ(dz3["rank"], 3);
}

TEST(Analyze, UserCharactersAreAccepted) {
  const CommandResult r =
      cmd_analyze(corpus("ks3_rho.hopf.json"), corpus("s3_characters.vec.json"), Format::Json);
  ASSERT_EQ(r.exit_code, kExitOk) << r.error;
  EXPECT_NE(as_json(r)["characters"]["status"], "unavailable");
}

TEST(Analyze, CharactersOfWrongDimensionAreRejected) {
  const CommandResult r =
      cmd_analyze(corpus("ac2.hopf.json"), corpus("s3_characters.vec.json"), Format::Json);
  EXPECT_NE(r.exit_code, kExitOk);
  EXPECT_FALSE(r.error.empty());
}

TEST(Quotient, GroupLikeCoalgebra) {
  const CommandResult r = cmd_quotient(corpus("ac2.hopf.json"), "grouplikes", Format::Json);
  ASSERT_EQ(r.exit_code, kExitOk) << r.error;
  const json j = as_json(r);
  EXPECT_EQ(j["dim C"], 2);
  EXPECT_EQ(j["dim Phi_R(C)"], 1);
  for (const json& c : j["checks"]) EXPECT_TRUE(c["holds"].get<bool>()) << c["name"];
}

TEST(Quotient, VectorFileMatchesGroupLikes) {
  const json a = as_json(cmd_quotient(corpus("ac2.hopf.json"), "grouplikes", Format::Json));
  const json b = as_json(cmd_quotient(corpus("ac2.hopf.json"), corpus("ac2_grouplikes.vec.json").string(), Format::Json));
  for (const char* key : {"dim C", "dim Phi_R(C)", "dim K_C", "dim H_bar_C"}) EXPECT_EQ(a[key], b[key]) << key;
}

TEST(Quotient, NonSubcoalgebraIsRejected) {
  const CommandResult r =
      cmd_quotient(corpus("ac2.hopf.json"), corpus("ac2_not_subcoalgebra.vec.json").string(), Format::Json);
  EXPECT_EQ(r.exit_code, kExitRejected);
  EXPECT_NE(r.error.find("subcoalgebra"), std::string::npos) << r.error;
}

TEST(Quotient, ExportsRoundTrip) {
  const fs::path q = scratch("quotient.hopf.json");
  const fs::path m = scratch("projection.morphism.json");
  fs::remove(q);
  fs::remove(m);
  const CommandResult r = cmd_quotient(corpus("double_z3.hopf.json"), "full", Format::Json, q, m);
  ASSERT_EQ(r.exit_code, kExitOk) << r.error;
  const json summary = as_json(r);
  const AlgebraFile back = load_algebra(q);
  EXPECT_EQ(back.hopf->dim(), summary["dim H_bar_C"].get<std::size_t>());
  EXPECT_EQ(cmd_verify(q, Format::Text).exit_code, kExitOk);
  const json morphism = json::parse(read_text_file(m));
  EXPECT_EQ(morphism["rows"].get<std::size_t>(), back.hopf->dim());
  EXPECT_EQ(morphism["cols"], 9);
}

TEST(EnumerateGroup, CyclicCount) {
  const json j = as_json(cmd_enumerate_group("Z3", Format::Json));
  EXPECT_EQ(j["count"], 3);
  EXPECT_EQ(j["rows"].size(), 3u);
}

TEST(EnumerateGroup, GroupFileAndUnknownName) {
  EXPECT_EQ(as_json(cmd_enumerate_group(corpus("s3.group.json").string(), Format::Json))["order"], 6);
  EXPECT_EQ(cmd_enumerate_group("Q8x", Format::Text).exit_code, kExitInput);
}

TEST(EnumerateGroup, OrderCapIsRejected) {
  const fs::path p = scratch("z65.group.json");
  write_text_file(p, dump_group(FiniteGroup::cyclic(65)));
  const CommandResult r = cmd_enumerate_group(p.string(), Format::Text);
  EXPECT_NE(r.exit_code, kExitOk);
  EXPECT_NE(r.error.find("64"), std::string::npos) << r.error;
}

TEST(Double, WritesAlgebraFileThatVerifies) {
  const fs::path out = scratch("double.hopf.json");
  fs::remove(out);
  const CommandResult r = cmd_double(corpus("ks3_rho.hopf.json"), out, Format::Json);
  ASSERT_EQ(r.exit_code, kExitOk) << r.error;
  const json j = as_json(r);
  EXPECT_EQ(j["dim"], 36);
  EXPECT_EQ(j["factorizable"], true);
  const AlgebraFile back = load_algebra(out);
  EXPECT_EQ(back.hopf->dim(), 36u);
  EXPECT_TRUE(back.r.has_value());
  EXPECT_EQ(cmd_verify(out, Format::Text).exit_code, kExitOk);
}

TEST(Double, WithoutOutputPrintsTheAlgebra) {
  const CommandResult r = cmd_double(corpus("trivial_r.hopf.json"), std::nullopt, Format::Text);
  ASSERT_EQ(r.exit_code, kExitOk) << r.error;
  const AlgebraFile a = parse_algebra(r.output);
  EXPECT_TRUE(a.r.has_value());
}

TEST(Report, SquareFreeOddDimension) {
  const json j = as_json(cmd_report(corpus("kz15_nondeg.hopf.json"), Format::Json));
  ASSERT_EQ(j["items"].size(), 10u);
  EXPECT_EQ(j["items"][0]["status"], "pass");
}

TEST(Report, EvenDimensionIsNotApplicable) {
  const CommandResult r = cmd_report(corpus("ac2.hopf.json"), Format::Json);
  const json j = json::parse(r.output);
  EXPECT_EQ(j["items"][0]["status"], "fail");
  EXPECT_NE(r.output.find("not-applicable"), std::string::npos);
}

TEST(Emit, WritesToFileAndReportsUnwritableSink) {
  const CommandResult r = cmd_enumerate_group("Z2", Format::Json);
  const fs::path out = scratch("enumerate.json");
  EXPECT_EQ(emit(r, Sink{Format::Json, out}), kExitOk);
  EXPECT_EQ(read_text_file(out), r.output);
  EXPECT_EQ(emit(r, Sink{Format::Json, fs::path("/nonexistent/dir/x.json")}), kExitInput);
}
