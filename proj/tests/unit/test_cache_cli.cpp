#include "fuchs/cache.hpp"
#include "fuchs/chartab.hpp"
#include "fuchs/classes.hpp"
#include "fuchs/cli.hpp"
#include "fuchs/error.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace fuchs;
namespace fs = std::filesystem;

namespace {

struct Run {
  int status;
  std::string out, err;
  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("fuchs-unit-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "-" +
                                                 ::testing::UnitTest::GetInstance()->current_test_info()->name())) {
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

}  // namespace

TEST(Cache, JsonRoundTripIsStructural) {
  for (const char* s : {"S(4)", "SL(2,5)", "C(6)"}) {
    const auto g = standard_group(parse_group_spec(s));
    const auto t = character_table(g, conjugacy_classes(g));
    EXPECT_EQ(table_from_json(table_to_json(t)), t);
  }
}

TEST(Cache, StoreThenReload) {
  TempDir dir;
  const auto spec = parse_group_spec("A(5)");
  const auto first = load_or_compute_table(spec, dir.path());
  EXPECT_FALSE(first.from_cache);
  EXPECT_TRUE(fs::exists(cache_file(dir.path(), spec)));
  const auto second = load_or_compute_table(spec, dir.path());
  EXPECT_TRUE(second.from_cache);
  EXPECT_EQ(first.table, second.table);
}

TEST(Cache, CorruptEntryRejected) {
  const auto g = standard_group(parse_group_spec("S(3)"));
  auto text = table_to_json(character_table(g, conjugacy_classes(g)));
  auto j = nlohmann::json::parse(text);
  j["degrees"][2] = 3;
  try {
    table_from_json(j.dump());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CacheError);
  }
  EXPECT_THROW(table_from_json("{not json"), Error);
}

TEST(Cli, MeasureExample) {
  const auto r = cli({"measure", "--sig", "o:g=0:m=2,3,7"});
  EXPECT_EQ(r.status, 0);
  const auto j = r.json();
  EXPECT_EQ(j["mu"], "1/42");
  EXPECT_EQ(j["valid"], true);
  EXPECT_FALSE(j["version"].get<std::string>().empty());
  EXPECT_FALSE(j["data_version"].get<std::string>().empty());
}

TEST(Cli, HomcountBothExample) {
  const auto r = cli({"homcount", "--sig", "o:g=0:m=2,2,2", "--group", "S(3)", "--oracle", "both"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.json()["count"], "10");
  EXPECT_EQ(r.json()["crosscheck"], "agree");
}

TEST(Cli, AlphaExample) {
  const auto r = cli({"alpha", "--levi", "GL(4):2,2"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.json()["alpha"], "1/2");
  EXPECT_EQ(r.json()["witness"], "(2|2)");
}

TEST(Cli, HypothesisFailureExitsTwoWithReport) {
  const auto thr = cli({"thresholds", "--sig", "o:g=0:m=2,3,7"});
  EXPECT_EQ(thr.status, 2);
  EXPECT_TRUE(thr.json()["missing"].contains("N2"));
  const auto sl = cli({"construct", "--family", "SL", "--n", "2", "--m", "2", "--q", "5"});
  EXPECT_EQ(sl.status, 2);
  EXPECT_EQ(sl.json()["error"], "Inadmissible");
  const auto jm = cli({"dimhom", "--sig", "o:g=0:m=7,7,7", "--family", "Sp", "--n", "50"});
  EXPECT_EQ(jm.status, 2);
}

TEST(Cli, HardErrorsExitOne) {
  EXPECT_EQ(cli({"measure", "--sig", "garbage"}).status, 1);
  EXPECT_EQ(cli({"measure", "--sig", "o:g=0:m=2,3,7", "--bogus"}).status, 1);
  EXPECT_EQ(cli({"frobnicate"}).status, 1);
  EXPECT_EQ(cli({}).status, 1);
  const auto r = cli({"chartab", "--group", "Q(8)"});
  EXPECT_EQ(r.status, 1);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, GlobalFlagsAcceptedAfterSubcommand) {
  const auto r = cli({"measure", "--sig", "o:g=2", "--format", "csv"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "command,signature,mu,valid,version,data_version");
}

TEST(Cli, CsvRowsForCharacterTable) {
  const auto r = cli({"--format", "csv", "chartab", "--group", "S(3)"});
  EXPECT_EQ(r.status, 0);
  std::istringstream lines(r.out);
  std::string header;
  std::getline(lines, header);
  EXPECT_EQ(header, "character,degree,indicator,values");
  int rows = 0;
  for (std::string line; std::getline(lines, line);) ++rows;
  EXPECT_EQ(rows, 3);
}

TEST(Cli, CacheDirectoryIsUsedAndOutputStable) {
  TempDir dir;
  const std::vector<std::string> args{"--cache-dir", dir.path().string(), "chartab", "--group", "SL(2,3)"};
  const auto a = cli(args), b = cli(args);
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, cli({"chartab", "--group", "SL(2,3)"}).out);
  EXPECT_TRUE(fs::exists(cache_file(dir.path(), parse_group_spec("SL(2,3)"))));
}

TEST(Cli, TimingOnlyOnRequest) {
  const auto plain = cli({"homcount", "--sig", "o:g=1", "--group", "S(3)"});
  EXPECT_FALSE(plain.json().contains("elapsed_ms"));
  const auto timed = cli({"homcount", "--sig", "o:g=1", "--group", "S(3)", "--timing"});
  EXPECT_TRUE(timed.json().contains("elapsed_ms"));
  EXPECT_EQ(plain.json()["count"], "18");
}

TEST(Cli, EverySubcommandRuns) {
  const std::vector<std::vector<std::string>> cmds = {
      {"validate", "--sig", "o:g=0:m=2,3,7"},
      {"thresholds", "--sig", "o:g=0:m=7,7,7,7,7,7,7"},
      {"qadmissible", "--m", "2,3,7", "--count", "3"},
      {"chartab", "--group", "C(3)", "--multiplicities"},
      {"zeta", "--group", "S(3)", "--s", "1"},
      {"homcount", "--sig", "o:g=0:m=2,2,3", "--group", "S(3)", "--classes", "1,1,2"},
      {"epi", "--sig", "o:g=0:m=2,3,7", "--group", "PSL(2,7)"},
      {"alpha", "--type", "E8", "--label", "E7"},
      {"alphabound", "--levi", "GL(4):2,2"},
      {"construct", "--family", "GL", "--n", "2", "--m", "2", "--q", "3"},
      {"jm", "--family", "SO", "--n", "14", "--m", "7"},
      {"dimhom", "--sig", "o:g=0:m=7,7,7", "--type", "D7"},
      {"bounds", "--sig", "o:g=0:m=7,7,7,7,7", "--family", "SL", "--n", "100"},
  };
  for (const auto& c : cmds) {
    const auto r = cli(c);
    EXPECT_TRUE(r.status == 0 || r.status == 2) << c[0] << ": " << r.err;
    EXPECT_EQ(r.json()["command"], c[0]);
  }
  EXPECT_EQ(cli({"zeta", "--group", "S(3)", "--s", "1"}).json()["exact"], "5/2");
  EXPECT_EQ(cli({"alpha", "--type", "E8", "--label", "E7"}).json()["alpha"], "17/29");
  EXPECT_EQ(cli({"jm", "--family", "SO", "--n", "14", "--m", "7"}).json()["jm"], 78);
  EXPECT_EQ(cli({"dimhom", "--sig", "o:g=0:m=7,7,7", "--type", "D7"}).json()["high"], 144);
  EXPECT_EQ(cli({"epi", "--sig", "o:g=0:m=2,2,2", "--group", "S(3)"}).json()["epi"], "0");
}
