#include "elicit/cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "elicit/dataset.hpp"
#include "elicit/profile.hpp"
#include "elicit/service.hpp"
#include "support/case_studies.hpp"
#include "support/corruptions.hpp"

namespace elicit {
namespace {

using nlohmann::json;

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string fixture(const std::string& name) { return testing::fixture_path(name).string(); }

class TempFile {
 public:
  TempFile(const std::string& name, std::string_view content)
      : path_(std::filesystem::temp_directory_path() / name) {
    std::ofstream(path_) << content;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  std::string str() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

TEST(Cli, RecommendText) {
  const auto r = run({"recommend", fixture("osm.profile")});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("Union (9): "), std::string::npos);
  EXPECT_NE(r.out.find("Final (6): "), std::string::npos);
  EXPECT_TRUE(r.err.empty());
}

TEST(Cli, RecommendStructured) {
  for (const auto* c : {&testing::ipos(), &testing::osm(), &testing::bhoomi()}) {
    const auto r = run({"recommend", fixture(c->fixture), "--format", "structured"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["final"].get<testing::Names>(), c->final_set) << c->name;
    EXPECT_EQ(j["per_matrix"]["project"].get<testing::Names>(), c->project) << c->name;
  }
}

TEST(Cli, RecommendMatchesService) {
  const Service service(std::make_shared<const Dataset>(default_dataset()));
  for (const auto* c : {&testing::ipos(), &testing::osm(), &testing::bhoomi()}) {
    const auto r = run({"recommend", fixture(c->fixture), "--format", "structured"});
    const auto payload = profile_to_json(parse_profile_file(fixture(c->fixture))).dump();
    EXPECT_EQ(r.out, service.handle("POST", "/api/recommend", payload).body) << c->name;
  }
}

TEST(Cli, RecommendWithExplicitDataset) {
  const auto a = run({"recommend", fixture("ipos.profile"), "--format", "structured"});
  const auto b = run({"recommend", fixture("ipos.profile"), "--format", "structured", "--dataset",
                      (testing::source_dir() / "data" / "default.dataset").string()});
  EXPECT_EQ(b.code, kExitOk) << b.err;
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, MissingProfileIsDataError) {
  const auto r = run({"recommend", "/nonexistent/elicit/x.profile"});
  EXPECT_EQ(r.code, kExitData);
  EXPECT_NE(r.err.find("IO"), std::string::npos) << r.err;
}

TEST(Cli, ProfileErrorNamesLocation) {
  TempFile bad("elicit_cli_bad.profile", "[project]\nsize = huge\n");
  const auto r = run({"recommend", bad.str()});
  EXPECT_EQ(r.code, kExitData);
  EXPECT_EQ(r.err, "elicit: " + bad.str() + ":2: TAXONOMY project.size: unknown value 'size=huge'\n");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"recommend"}).code, kExitUsage);
  EXPECT_EQ(run({"recommend", fixture("ipos.profile"), "--format", "xml"}).code, kExitUsage);
  EXPECT_EQ(run({"explain", fixture("ipos.profile")}).code, kExitUsage);
}

TEST(Cli, HelpExitsZero) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("recommend"), std::string::npos);
}

TEST(Cli, ValidateDefault) {
  const auto r = run({"validate"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "0 error(s), 0 warning(s)\n");
}

TEST(Cli, ValidateCorruptedDatasets) {
  for (const auto& c : testing::corruptions()) {
    TempFile bad("elicit_cli_" + c.name + ".dataset", testing::corrupted_text(c));
    const auto text = run({"validate", bad.str()});
    EXPECT_EQ(text.code, kExitData) << c.code;
    EXPECT_EQ(text.out.rfind("ERROR " + c.code + " " + bad.str() + ":", 0), 0u) << text.out;

    const auto structured = run({"validate", bad.str(), "--format", "structured"});
    const auto j = json::parse(structured.out);
    EXPECT_EQ(j["ok"], false);
    EXPECT_EQ(j["findings"][0]["code"], c.code);
  }
}

TEST(Cli, RecommendOnCorruptDatasetIsDataError) {
  TempFile bad("elicit_cli_corrupt2.dataset", testing::corrupted_text(testing::corruptions().front()));
  const auto r = run({"recommend", fixture("ipos.profile"), "--dataset", bad.str()});
  EXPECT_EQ(r.code, kExitData);
  EXPECT_NE(r.err.find("RANGE"), std::string::npos);
}

TEST(Cli, Explain) {
  auto r = run({"explain", fixture("ipos.profile"), "Ethnography/Social analysis"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out.rfind("ethnography: selected by ", 0), 0u) << r.out;
  EXPECT_NE(r.out.find("C process model=agile -> "), std::string::npos);

  r = run({"explain", fixture("ipos.profile"), "laddering"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.rfind("laddering: not selected: no supporting cell", 0), 0u);

  r = run({"explain", fixture("ipos.profile"), "telepathy"});
  EXPECT_EQ(r.code, kExitData);
  EXPECT_NE(r.err.find("UNKNOWN_TECHNIQUE"), std::string::npos);
}

TEST(Cli, Taxonomy) {
  auto r = run({"taxonomy"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("observational:"), std::string::npos);
  r = run({"taxonomy", "--format", "structured"});
  EXPECT_EQ(json::parse(r.out)["categories"].size(), 4u);
}

TEST(Cli, Diff) {
  auto r = run({"diff", fixture("ipos.profile"), fixture("bhoomi.profile"), "--format", "structured"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = json::parse(r.out);
  const auto base = testing::ipos().union_set();
  const auto variant = testing::bhoomi().union_set();
  for (const auto& t : j["added"].get<testing::Names>()) {
    EXPECT_TRUE(variant.contains(t) && !base.contains(t)) << t;
  }
  for (const auto& t : j["removed"].get<testing::Names>()) {
    EXPECT_TRUE(base.contains(t) && !variant.contains(t)) << t;
  }
  EXPECT_EQ(j["added"].size() + j["unchanged"].size(), variant.size());

  r = run({"diff", fixture("ipos.profile"), fixture("ipos.profile")});
  EXPECT_NE(r.out.find("Added (0): (none)"), std::string::npos);
  EXPECT_NE(r.out.find("What-if: IPOS -> IPOS"), std::string::npos);
}

}  // namespace
}  // namespace elicit
