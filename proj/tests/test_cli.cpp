#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "psw/report.hpp"

using namespace psw;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "psw");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(int(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows(1);
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (quoted) {
      if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      rows.back().push_back(field);
      field.clear();
    } else if (c == '\n') {
      rows.back().push_back(field);
      field.clear();
      rows.emplace_back();
    } else {
      field += c;
    }
  }
  rows.pop_back();
  return rows;
}

}  // namespace

TEST(Cli, DimsRows) {
  auto r = cli({"dims", "--n-range", "1..3", "--r-range", "1..3"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json::parse(r.out);
  ASSERT_EQ(j.size(), 9u);
  auto row = [&](int n, int rr) {
    for (const auto& x : j)
      if (x["n"] == n && x["r"] == rr) return x;
    return json();
  };
  EXPECT_EQ(row(2, 2)["dnr"], 7);
  EXPECT_EQ(row(2, 2)["dnr_V"], 2);
  EXPECT_EQ(row(2, 2)["psi_span"], 2);
  EXPECT_EQ(row(1, 1)["dnr"], 2);
  EXPECT_EQ(row(1, 1)["psi_span"], 1);
  EXPECT_EQ(row(1, 1)["dnr_V"], 1);
  EXPECT_EQ(row(3, 3)["dnr"], 34);
  EXPECT_EQ(row(3, 3)["dnr_V"], 6);
  EXPECT_EQ(row(3, 3)["dnr_l"], json({1, 9, 18, 6}));
}

TEST(Cli, VerifyAllPasses) {
  auto r = cli({"verify", "--n", "2", "--r", "2", "--checks", "all"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  auto j = json::parse(r.out);
  EXPECT_EQ(j.size(), 8u);
  for (const auto& rec : j) EXPECT_EQ(rec["status"], "pass") << rec.dump();
}

TEST(Cli, SchemaFieldOrder) {
  auto r = cli({"verify", "--n", "1", "--r", "1", "--checks", "classical"});
  auto j = nlohmann::ordered_json::parse(r.out);
  std::vector<std::string> keys;
  for (auto it = j[0].begin(); it != j[0].end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"check", "n", "r", "status", "lhs_dim", "rhs_dim", "detail",
                                            "elapsed_ms"}));
  EXPECT_TRUE(j[0]["elapsed_ms"].is_null());
}

TEST(Cli, ReportOnlyDoesNotFail) {
  auto r = cli({"verify", "--n", "1", "--r", "3", "--checks", "main-theorem"});
  EXPECT_EQ(r.code, 0);
  auto j = json::parse(r.out);
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["status"], "report-only");
}

TEST(Cli, SizingRefusal) {
  auto r = cli({"verify", "--n", "2", "--r", "9"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("max-ambient"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(cli({"verify", "--n", "2", "--r", "2", "--checks", "nonsense"}).code, 2);
  EXPECT_EQ(cli({"verify", "--n", "2"}).code, 2);
  EXPECT_EQ(cli({"verify", "--n", "0", "--r", "2"}).code, 2);
  EXPECT_EQ(cli({"verify", "--n", "2", "--r", "2", "--format", "xml"}).code, 2);
  EXPECT_EQ(cli({"sweep", "--n-range", "3..1", "--r", "1"}).code, 2);
  EXPECT_EQ(cli({"frobnicate"}).code, 2);
  EXPECT_EQ(cli({}).code, 2);
  EXPECT_EQ(cli({"--help"}).code, 0);
}

TEST(Cli, CsvAndJsonCarrySameNumbers) {
  auto j = json::parse(cli({"verify", "--n", "2", "--r", "2"}).out);
  auto rows = parse_csv(cli({"verify", "--n", "2", "--r", "2", "--format", "csv"}).out);
  ASSERT_EQ(rows.size(), j.size() + 1);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"check", "n", "r", "status", "lhs_dim", "rhs_dim", "detail",
                                               "elapsed_ms", "witness"}));
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto& rec = j[i];
    const auto& row = rows[i + 1];
    ASSERT_EQ(row.size(), 9u);
    EXPECT_EQ(row[0], rec["check"].get<std::string>());
    EXPECT_EQ(row[1], std::to_string(rec["n"].get<int>()));
    EXPECT_EQ(row[2], std::to_string(rec["r"].get<int>()));
    EXPECT_EQ(row[3], rec["status"].get<std::string>());
    EXPECT_EQ(row[4], std::to_string(rec["lhs_dim"].get<std::size_t>()));
    EXPECT_EQ(row[5], std::to_string(rec["rhs_dim"].get<std::size_t>()));
    EXPECT_EQ(row[6], rec["detail"].get<std::string>());
  }
}

TEST(Cli, DeterministicJson) {
  auto a = cli({"verify", "--n", "2", "--r", "3", "--seed", "5"});
  auto b = cli({"verify", "--n", "2", "--r", "3", "--seed", "5"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_FALSE(a.out.empty());
}

TEST(Cli, SweepMarksSkippedAndStrictness) {
  auto r = cli({"sweep", "--n-range", "1..2", "--r-range", "2..3", "--max-ambient", "16",
                "--checks", "main-theorem,parabolic"});
  EXPECT_EQ(r.code, 0) << r.err;
  auto j = json::parse(r.out);
  ASSERT_EQ(j.size(), 4u);
  for (const auto& c : j) {
    bool over = (c["n"].get<int>() == 2 && c["r"].get<int>() == 3);
    EXPECT_EQ(c["status"] == "skipped", over) << c.dump();
    if (!over && c["n"] < c["r"]) {
      EXPECT_TRUE(c["strictness"] == "⊊" || c["strictness"] == "=");
      EXPECT_LE(c["psi_dim"].get<int>(), c["dnr_V_dim"].get<int>());
    }
    if (c["n"] >= c["r"]) {
      EXPECT_TRUE(c["strictness"].is_null());
    }
  }
}

TEST(Cli, TableAndOutFile) {
  auto path = ::testing::TempDir() + "psw_cli_out.json";
  auto r = cli({"verify", "--n", "1", "--r", "2", "--checks", "levi", "--out", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  auto t = cli({"sweep", "--n-range", "1..2", "--r-range", "1..2", "--format", "table", "--checks", "levi"});
  EXPECT_EQ(t.code, 0);
  EXPECT_NE(t.out.find("n=1"), std::string::npos);
}

TEST(Report, ExpandChecks) {
  EXPECT_EQ(expand_checks({"all"}), check_names());
  EXPECT_EQ(expand_checks({"levi,classical", "levi"}), (std::vector<std::string>{"classical", "levi"}));
  EXPECT_THROW(expand_checks({"bogus"}), UsageError);
  EXPECT_EQ(parse_range("2..4").hi, 4);
  EXPECT_EQ(parse_range("3").lo, 3);
  EXPECT_THROW(parse_range("a..b"), UsageError);
  EXPECT_EQ(ambient_dim(2, 9), 19683u);
  EXPECT_FALSE(within_guard(2, 9, 256));
}
