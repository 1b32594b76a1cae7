#include <gtest/gtest.h>

#include <bit>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "cli/commands.hpp"
#include "cli/parse.hpp"
#include "cli/snapshot.hpp"
#include "ohwalk/dynamics.hpp"

namespace {

namespace fs = std::filesystem;
using namespace ohwalk::cli;
using std::numbers::pi;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "ohwalk");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = fs::temp_directory_path() / ("ohwalk_test_" + std::to_string(rd()));
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

TEST(ParseReal, Expressions) {
  EXPECT_DOUBLE_EQ(parse_real("0"), 0.0);
  EXPECT_DOUBLE_EQ(parse_real("pi/2"), pi / 2);
  EXPECT_DOUBLE_EQ(parse_real("3pi/4"), 3 * pi / 4);
  EXPECT_DOUBLE_EQ(parse_real("sqrt(2)"), std::numbers::sqrt2);
  EXPECT_DOUBLE_EQ(parse_real("-(1 + 2) * 2"), -6.0);
  EXPECT_DOUBLE_EQ(parse_real("1e-3"), 1e-3);
  EXPECT_DOUBLE_EQ(parse_real("2 sqrt(2)"), 2 * std::numbers::sqrt2);
  for (const char* bad : {"", "pi/", "foo", "sqrt(-1)", "1/0", "(1", "1 2", "sqrt 2"}) {
    EXPECT_THROW((void)parse_real(bad), std::invalid_argument) << bad;
  }
}

TEST(ParseReal, Lists) {
  const auto times = parse_real_list("0,pi/6,pi/5,pi/4,pi/3,pi/2");
  ASSERT_EQ(times.size(), 6U);
  EXPECT_DOUBLE_EQ(times[1], pi / 6);
  EXPECT_THROW((void)parse_real_list("0,,1"), std::invalid_argument);
}

TEST(ParseRatio, ValidAndMalformed) {
  EXPECT_EQ(parse_ratio("1/2"), (std::pair<std::int64_t, std::int64_t>{1, 2}));
  EXPECT_EQ(parse_ratio("0/1"), (std::pair<std::int64_t, std::int64_t>{0, 1}));
  for (const char* bad : {"1", "1/", "/2", "1/0", "-1/2", "1/-2", "1.5/2", "a/b", "1/2/3", " 1/2"}) {
    EXPECT_THROW((void)parse_ratio(bad), std::invalid_argument) << bad;
  }
}

TEST(FormatDouble, BitExactRoundTrip) {
  std::mt19937_64 rng(99);
  for (int k = 0; k < 20000; ++k) {
    double v = std::bit_cast<double>(rng());
    if (!std::isfinite(v)) continue;
    const std::string text = format_double(v);
    EXPECT_EQ(std::bit_cast<std::uint64_t>(std::strtod(text.c_str(), nullptr)), std::bit_cast<std::uint64_t>(v))
        << text;
  }
  EXPECT_EQ(format_double(-0.0), "-0.0");
  EXPECT_EQ(format_double(0.5), "0.5");
  EXPECT_THROW((void)format_double(std::nan("")), std::domain_error);
}

SnapshotDocument sample(double t, ohwalk::Site source = {0, 0}) {
  const auto sd = ohwalk::build_spectral(7, 1.0, 2.0);
  return make_snapshot(ohwalk::field_spectral(sd, source, t), 1.0, 2.0);
}

TEST(Snapshot, RecordInvariants) {
  const auto doc = sample(0.37, {2, 3});
  ASSERT_EQ(doc.records.size(), 36U);
  EXPECT_EQ(doc.schema, "ohwalk-snapshot/1");
  for (std::size_t k = 0; k < doc.records.size(); ++k) {
    const auto& r = doc.records[k];
    EXPECT_EQ(ohwalk::site_index(7, {r.i, r.j}), k);
    EXPECT_NEAR(r.abs, std::hypot(r.re, r.im), 1e-12);
  }
}

TEST(Snapshot, JsonRoundTripIsBitExact) {
  for (const double t : {0.0, 0.3, pi / 5, pi / 2, 9.87}) {
    const auto doc = sample(t, {1, 4});
    const std::string text = to_json(doc);
    const auto back = snapshot_from_json(text);
    EXPECT_EQ(back, doc);
    EXPECT_EQ(to_json(back), text);
  }
}

TEST(Snapshot, CsvCarriesTheSameValues) {
  const auto doc = sample(pi / 3);
  const auto rows = records_from_csv(to_csv(doc));
  EXPECT_EQ(rows, doc.records);
}

TEST(Snapshot, RejectsMalformedDocuments) {
  EXPECT_THROW((void)snapshot_from_json("{"), std::invalid_argument);
  auto doc = sample(0.1);
  auto j = nlohmann::json::parse(to_json(doc));
  j["schema"] = "other/2";
  EXPECT_THROW((void)snapshot_from_json(j.dump()), std::invalid_argument);
  j = nlohmann::json::parse(to_json(doc));
  j["records"].erase(0);
  EXPECT_THROW((void)snapshot_from_json(j.dump()), std::invalid_argument);
  EXPECT_THROW((void)records_from_csv("x,y\n"), std::invalid_argument);
}

TEST(Verify, ExitCodes) {
  EXPECT_EQ(invoke({"verify", "--n", "3", "--suite", "scheme"}).code, kSuccess);
  const auto projection = invoke({"verify", "--n", "4", "--suite", "projection", "--alpha", "1", "--beta", "2"});
  EXPECT_EQ(projection.code, kSuccess) << projection.out;
  const auto guard = invoke({"verify", "--n", "9", "--suite", "scheme"});
  EXPECT_EQ(guard.code, kUsageError);
  EXPECT_NE(guard.err.find("N<=8"), std::string::npos);
  EXPECT_EQ(invoke({"verify", "--n", "3", "--suite", "bogus"}).code, kUsageError);
  EXPECT_EQ(invoke({"verify", "--n", "0"}).code, kUsageError);
  EXPECT_EQ(invoke({"verify", "--n", "3", "--alpha", "-1", "--suite", "projection"}).code, kUsageError);
}

TEST(Verify, GuardOverrideAdmitsLargerN) {
  const auto r = invoke({"verify", "--n", "9", "--suite", "polynomials"});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_EQ(invoke({"verify", "--n", "13", "--suite", "polynomials"}).code, kUsageError);
  EXPECT_EQ(invoke({"verify", "--n", "3", "--suite", "scheme", "--guard-override", "2"}).code, kUsageError);
}

TEST(Verify, WritesJsonReport) {
  TempDir tmp;
  const auto path = tmp.path() / "report.json";
  ASSERT_EQ(invoke({"verify", "--n", "3", "--out", path.string()}).code, kSuccess);
  const auto j = nlohmann::json::parse(slurp(path));
  EXPECT_TRUE(j.at("passed").get<bool>());
  EXPECT_EQ(j.at("suites").size(), 4U);
}

TEST(Simulate, WritesOneSnapshotPerTime) {
  TempDir tmp;
  const auto r = invoke({"simulate", "--n", "7", "--alpha", "1", "--beta", "2", "--source", "0,0", "--times",
                         "0,pi/6,pi/5,pi/4,pi/3,pi/2", "--out", tmp.path().string()});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  for (int k = 0; k < 6; ++k) {
    const auto doc = snapshot_from_json(slurp(tmp.path() / ("snapshot_00" + std::to_string(k) + ".json")));
    EXPECT_EQ(doc.records.size(), 36U);
  }
  const auto first = snapshot_from_json(slurp(tmp.path() / "snapshot_000.json"));
  EXPECT_NEAR(first.records.front().re, 1.0, 1e-12);
  for (std::size_t k = 1; k < first.records.size(); ++k) EXPECT_LT(first.records[k].abs, 1e-12);
  const auto last = snapshot_from_json(slurp(tmp.path() / "snapshot_005.json"));
  EXPECT_NEAR(last.records[ohwalk::site_index(7, {7, 0})].abs, 1.0, 1e-12);
}

TEST(Simulate, CsvAndJsonAgree) {
  TempDir tmp;
  const std::vector<std::string> common{"simulate", "--n", "7", "--alpha", "sqrt(2)", "--beta", "1",
                                        "--source", "0,7", "--times", "0.2,pi/4"};
  auto json_args = common, csv_args = common;
  json_args.insert(json_args.end(), {"--out", (tmp.path() / "json").string()});
  csv_args.insert(csv_args.end(), {"--format", "csv", "--out", (tmp.path() / "csv").string()});
  ASSERT_EQ(invoke(json_args).code, kSuccess);
  ASSERT_EQ(invoke(csv_args).code, kSuccess);
  for (const char* stem : {"snapshot_000", "snapshot_001"}) {
    const auto doc = snapshot_from_json(slurp(tmp.path() / "json" / (std::string(stem) + ".json")));
    EXPECT_EQ(records_from_csv(slurp(tmp.path() / "csv" / (std::string(stem) + ".csv"))), doc.records);
  }
}

TEST(Simulate, StdoutIsByteStable) {
  const auto a = invoke({"simulate", "--n", "4", "--times", "0.5,1"});
  const auto b = invoke({"simulate", "--n", "4", "--times", "0.5,1"});
  ASSERT_EQ(a.code, kSuccess);
  EXPECT_EQ(a.out, b.out);
  const auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j.size(), 2U);
}

TEST(Simulate, UsageErrors) {
  TempDir tmp;
  const auto blocker = tmp.path() / "file";
  std::ofstream(blocker) << "x";
  EXPECT_EQ(invoke({"simulate", "--n", "3", "--out", (blocker / "sub").string()}).code, kUsageError);
  EXPECT_EQ(invoke({"simulate", "--n", "3", "--source", "4,0"}).code, kUsageError);
  EXPECT_EQ(invoke({"simulate", "--n", "3", "--times", "pi/"}).code, kUsageError);
  EXPECT_EQ(invoke({"simulate", "--n", "3", "--format", "xml"}).code, kUsageError);
  EXPECT_EQ(invoke({"simulate", "--n", "3", "--format", "csv", "--times", "0,1"}).code, kUsageError);
}

nlohmann::json scan_json(std::vector<std::string> args) {
  args.insert(args.begin(), "scan");
  const auto r = invoke(args);
  EXPECT_EQ(r.code, kSuccess) << r.err;
  return nlohmann::json::parse(r.out);
}

bool has_event(const nlohmann::json& doc, const std::string& kind, double t) {
  for (const auto& e : doc.at("events")) {
    if (e.at("kind") == kind && std::abs(e.at("time").get<double>() - t) < 1e-6) return true;
  }
  return false;
}

TEST(Scan, HalfRatioFindsFractionalRevivalThenTransfer) {
  const auto doc = scan_json({"--n", "7", "--ratio", "1/2", "--tmax", "3.2", "--steps", "4000"});
  EXPECT_TRUE(has_event(doc, "FR", pi / 4));
  EXPECT_TRUE(has_event(doc, "PST", pi / 2));
  EXPECT_EQ(doc.at("prediction").at("parity"), "odd/even");
  EXPECT_DOUBLE_EQ(doc.at("prediction").at("smallest_time").get<double>(), pi / 2);
}

TEST(Scan, SwappedRatioTransfers) {
  const auto doc = scan_json({"--n", "7", "--ratio", "2/1", "--tmax", "3.2", "--steps", "4000"});
  EXPECT_TRUE(has_event(doc, "PST", pi / 2));
}

TEST(Scan, EqualRatioHasNoTransfer) {
  const auto doc = scan_json({"--n", "5", "--ratio", "1/1", "--tmax", "6.3", "--steps", "4000"});
  for (const auto& e : doc.at("events")) EXPECT_NE(e.at("kind"), "PST");
  EXPECT_FALSE(doc.at("prediction").at("pst_predicted").get<bool>());
  EXPECT_TRUE(doc.at("prediction").at("smallest_time").is_null());
}

TEST(Scan, FloatCouplingsHaveNoPrediction) {
  const auto doc = scan_json({"--n", "4", "--alpha", "sqrt(2)", "--beta", "1", "--source", "0,4", "--tmax", "1"});
  EXPECT_FALSE(doc.contains("prediction"));
  EXPECT_TRUE(has_event(doc, "FR", pi / 4));
}

TEST(Scan, TraceAndOutputFiles) {
  TempDir tmp;
  const auto out = tmp.path() / "events.json", trace = tmp.path() / "trace.csv";
  ASSERT_EQ(invoke({"scan", "--n", "3", "--ratio", "1/2", "--steps", "50", "--out", out.string(), "--trace",
                    trace.string()})
                .code,
            kSuccess);
  EXPECT_TRUE(nlohmann::json::parse(slurp(out)).contains("events"));
  std::istringstream lines(slurp(trace));
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) ++count;
  EXPECT_EQ(count, 51);
}

TEST(Scan, UsageErrors) {
  EXPECT_EQ(invoke({"scan", "--ratio", "1/x"}).code, kUsageError);
  EXPECT_EQ(invoke({"scan", "--ratio", "1/0"}).code, kUsageError);
  EXPECT_EQ(invoke({"scan", "--ratio", "1/2", "--alpha", "3"}).code, kUsageError);
  EXPECT_EQ(invoke({"scan", "--steps", "1"}).code, kUsageError);
  EXPECT_EQ(invoke({"scan", "--tmax", "-1"}).code, kUsageError);
}

TEST(Cli, ParserErrorsAndHelp) {
  EXPECT_EQ(invoke({}).code, kUsageError);
  EXPECT_EQ(invoke({"frobnicate"}).code, kUsageError);
  EXPECT_EQ(invoke({"verify", "--n", "three"}).code, kUsageError);
  const auto help = invoke({"--help"});
  EXPECT_EQ(help.code, kSuccess);
  EXPECT_NE(help.out.find("simulate"), std::string::npos);
}

TEST(Cli, BinaryExitCodes) {
  const std::string bin = OHWALK_CLI_PATH;
  auto status = [&](const std::string& args) {
    const int raw = std::system((bin + " " + args + " > /dev/null 2>&1").c_str());
    return WEXITSTATUS(raw);
  };
  EXPECT_EQ(status("verify --n 3 --suite scheme"), 0);
  EXPECT_EQ(status("verify --n 9 --suite scheme"), 2);
  EXPECT_EQ(status("scan --ratio 1/x"), 2);
}

}  // namespace
