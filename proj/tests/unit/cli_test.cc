#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.h"
#include "fb/constructors.h"
#include "fb/error.h"

namespace fb::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
  json report() const { return json::parse(out); }
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("fburn_test_" + name);
  std::ofstream(path) << content;
  return path;
}

TEST(GroupSpec, Kinds) {
  EXPECT_EQ(parse_group_spec("cyclic:5").group.order(), 5u);
  EXPECT_EQ(parse_group_spec("abelian:2,2,3").group.order(), 12u);
  EXPECT_EQ(parse_group_spec("dihedral:4").group.order(), 8u);
  EXPECT_EQ(parse_group_spec("symmetric:4").group.order(), 24u);
  const GroupSource t = parse_group_spec("thevenaz:7,3,2,4");
  EXPECT_EQ(t.group.order(), 147u);
  EXPECT_TRUE(t.thevenaz.has_value());
  EXPECT_THROW((void)parse_group_spec("cyclic"), InvalidSpec);
  EXPECT_THROW((void)parse_group_spec("cyclic:x"), InvalidSpec);
  EXPECT_THROW((void)parse_group_spec("cyclic:0"), InvalidSpec);
  EXPECT_THROW((void)parse_group_spec("symmetric:6"), InvalidSpec);
  EXPECT_THROW((void)parse_group_spec("free:2"), InvalidSpec);
  EXPECT_THROW((void)parse_group_spec("cayley:/nonexistent.json"), InvalidSpec);
}

TEST(GroupSpec, CayleyFileRoundTrip) {
  const Result r = invoke({"cayley", "dihedral:3"});
  ASSERT_EQ(r.code, 0);
  const auto path = temp_file("d6.json", r.out);
  const GroupSource g = parse_group_spec("cayley:" + path.string());
  EXPECT_EQ(g.group, dihedral_group(3));
  std::filesystem::remove(path);

  const auto bad = temp_file("bad.json", R"({"order": 2, "mul": [[0,1],[0,1]]})");
  EXPECT_THROW((void)parse_group_spec("cayley:" + bad.string()), NotAGroup);
  std::filesystem::remove(bad);
}

TEST(Marks, TrivialAndS3) {
  Result r = invoke({"--no-timing", "marks", "cyclic:1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.report()["result"]["marks"], json::parse("[[1]]"));
  r = invoke({"marks", "symmetric:3", "--no-timing"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.report()["result"]["marks"], json::parse("[[6,3,2,1],[0,1,0,1],[0,0,2,1],[0,0,0,1]]"));
  EXPECT_EQ(r.report()["inputs"]["group"]["order"], 6);
  EXPECT_FALSE(r.report().contains("timing_ms"));
}

TEST(Marks, CsvAndOutFile) {
  Result r = invoke({"marks", "cyclic:2", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "2,1\n0,1\n");
  const auto path = std::filesystem::temp_directory_path() / "fburn_test_marks.json";
  r = invoke({"marks", "cyclic:3", "--out", path.string()});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  const json j = json::parse(in);
  EXPECT_EQ(j["result"]["marks"], json::parse("[[3,1],[0,1]]"));
  std::filesystem::remove(path);
}

TEST(Gamma, C2OverC2) {
  const Result r = invoke({"--no-timing", "gamma", "cyclic:2", "--fiber", "2", "--structure"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = r.report();
  EXPECT_EQ(j["result"]["gamma"], json::parse("[[2,1,1],[0,1,0],[0,0,1]]"));
  EXPECT_EQ(j["result"]["rank"], 3);
  EXPECT_EQ(j["result"]["basis"].size(), 3u);
  EXPECT_TRUE(j["result"].contains("structure_constants"));
}

TEST(Gamma, FiberC1EqualsMarks) {
  const json marks = invoke({"--no-timing", "marks", "dihedral:4"}).report();
  const json gamma = invoke({"--no-timing", "gamma", "dihedral:4", "--fiber", "1"}).report();
  EXPECT_EQ(marks["result"]["marks"], gamma["result"]["gamma"]);
}

TEST(Verify, AutoOnSameGroupIsValid) {
  const Result r = invoke({"--no-timing", "verify", "symmetric:3", "symmetric:3", "--fiber", "2", "--auto"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.report()["verdict"], "valid");
}

TEST(Verify, C4AgainstKleinFourIsNegative) {
  const Result r = invoke({"--no-timing", "verify", "cyclic:4", "abelian:2,2", "--fiber", "2", "--auto"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.report()["verdict"], "exhausted");
  EXPECT_THAT(r.report()["result"]["caveat"].get<std::string>(), ::testing::HasSubstr("not searched"));

  const auto path = temp_file("w.json", R"({"subgroup_map":[0,1,2],"char_maps":[[0],[0,1],[0,1]]})");
  const Result w = invoke({"--no-timing", "verify", "cyclic:4", "abelian:2,2", "--fiber", "2", "--witness",
                           path.string()});
  EXPECT_EQ(w.code, 1);
  EXPECT_EQ(w.report()["verdict"], "invalid");
  std::filesystem::remove(path);
}

TEST(Verify, WitnessFileWithCounterexample) {
  const auto path =
      temp_file("w2.json", R"({"subgroup_map":[0,1,2,3,4],"char_maps":[[0],[0,1],[0,1],[0,1],[0,2,1,3]]})");
  const Result r = invoke({"--no-timing", "verify", "abelian:2,2", "abelian:2,2", "--fiber", "2", "--witness",
                           path.string()});
  EXPECT_EQ(r.code, 1);
  const json v = r.report()["result"]["verdict"];
  EXPECT_FALSE(v["valid"].get<bool>());
  EXPECT_TRUE(v.contains("counterexample"));
  std::filesystem::remove(path);
}

TEST(Verify, ThevenazWitness) {
  const Result r = invoke({"--no-timing", "verify", "thevenaz:p=11,q=5,a=3,b=9", "thevenaz:11,5,3,4", "--fiber",
                           "5", "--thevenaz-witness"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.report()["verdict"], "valid");
}

TEST(Verify, InputErrors) {
  EXPECT_EQ(invoke({"verify", "cyclic:2", "cyclic:2"}).code, 2);
  EXPECT_EQ(invoke({"verify", "cyclic:2", "cyclic:2", "--thevenaz-witness"}).code, 2);
  const auto bad = temp_file("bad_witness.json", "{not json");
  EXPECT_EQ(invoke({"verify", "cyclic:2", "cyclic:2", "--witness", bad.string()}).code, 2);
  std::filesystem::remove(bad);
}

TEST(Usage, ExitCodes) {
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"frobnicate"}).code, 2);
  EXPECT_EQ(invoke({"marks"}).code, 2);
  EXPECT_EQ(invoke({"marks", "cyclic:2", "--format", "xml"}).code, 2);
  EXPECT_EQ(invoke({"marks", "nope:2"}).code, 2);
  EXPECT_EQ(invoke({"gamma", "cyclic:2", "--fiber", "0"}).code, 2);
  EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST(Reproduce, DefaultRunPassesEveryCheck) {
  const Result r = invoke({"--no-timing", "reproduce"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json res = r.report()["result"];
  for (const auto& [name, ok] : res["checks"].items()) EXPECT_TRUE(ok.get<bool>()) << name;
  EXPECT_EQ(res["checks"].size(), 5u);
  EXPECT_EQ(res["basis_bijection"].size(), 26u);
  EXPECT_EQ(res["marks"]["g"], res["marks"]["h"]);
}

TEST(Reproduce, FiberWithPTorsion) {
  const Result r = invoke({"--no-timing", "reproduce", "--fiber", "11"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.report()["result"]["failed_stage"], "fiber");
}

TEST(Reproduce, QThreeHasNoCounterexample) {
  const Result r = invoke({"--no-timing", "reproduce", "--thevenaz", "p=7,q=3,a=2,b=4"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.report()["result"]["classification"]["isomorphism_classes"], 1);
  EXPECT_TRUE(r.report()["result"]["counterexample_pair"].is_null());
}

TEST(Reproduce, InvalidParameters) {
  EXPECT_EQ(invoke({"reproduce", "--thevenaz", "p=11,q=5,a=3,b=3"}).code, 2);
  EXPECT_EQ(invoke({"reproduce", "--against", "3"}).code, 2);
}

TEST(Determinism, ByteIdenticalReports) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"--no-timing", "gamma", "symmetric:4", "--fiber", "2,3", "--structure"},
        std::vector<std::string>{"--no-timing", "verify", "dihedral:4", "dihedral:4", "--fiber", "2", "--auto"}}) {
    const Result a = invoke(args);
    auto threaded = args;
    threaded.insert(threaded.begin(), {"--threads", "3"});
    const Result b = invoke(threaded);
    json ja = a.report(), jb = b.report();
    ja.erase("command");
    jb.erase("command");
    EXPECT_EQ(ja.dump(), jb.dump());
    EXPECT_EQ(a.out, invoke(args).out);
  }
}

TEST(Hash, Fnv1a) {
  EXPECT_EQ(fnv1a_hex(""), "fnv1a64:cbf29ce484222325");
  EXPECT_EQ(fnv1a_hex("a"), "fnv1a64:af63dc4c8601ec8c");
}

}  // namespace
}  // namespace fb::cli
