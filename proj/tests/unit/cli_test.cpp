// Copyright 2026 The qc-bound Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "qcbound/errors.hpp"

namespace qcbound::cli {
namespace {

constexpr double kPi = std::numbers::pi;

struct Result {
  int code;
  std::string out;
  std::string err;
};

std::string exact(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "qc-bound");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

TEST(Bound, Examples) {
  auto r = invoke({"bound", "ho", "--omega", "1", "--t", "3.14159265"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "3.14159265\n");
  EXPECT_NE(r.err.find("# upper bound only"), std::string::npos);

  r = invoke({"bound", "iho", "--Omega", "2", "--t", "3"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "6\n");

  r = invoke({"bound", "ho", "--omega", "1", "--t", "0"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "0\n");

  r = invoke({"bound", "displacement", "--re", "1"});
  EXPECT_EQ(r.out, "1.41421356237\n");
}

TEST(Bound, DivergentExitCode) {
  const auto r = invoke({"bound", "ho_linear", "--omega", "1", "--lambda", "0.3", "--t",
                         format_number(2 * kPi)});
  EXPECT_EQ(r.code, kDivergent);
  EXPECT_EQ(r.out.rfind("inf ", 0), 0u);
}

TEST(Bound, UsageErrors) {
  EXPECT_EQ(invoke({"bound", "pendulum"}).code, kUsage);
  EXPECT_EQ(invoke({"bound", "ho", "--omega", "abc"}).code, kUsage);
  EXPECT_EQ(invoke({"bound", "ho", "--omega", "-1", "--t", "1"}).code, kUsage);
  EXPECT_EQ(invoke({}).code, kUsage);
  EXPECT_EQ(invoke({"figure", "fig9"}).code, kUsage);
  EXPECT_EQ(invoke({"verify", "nothing"}).code, kUsage);
  EXPECT_EQ(invoke({"algebra", "export", "so3"}).code, kUsage);
}

TEST(Bound, HelpExitsCleanly) { EXPECT_EQ(invoke({"--help"}).code, kOk); }

TEST(Figure, CsvFormat) {
  const auto r = invoke({"figure", "fig2", "--t-points", "5", "--t-max", exact(4 * kPi)});
  ASSERT_EQ(r.code, kOk);
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 6u);
  EXPECT_EQ(ls[0], "t,value,branch,divergent");
  EXPECT_EQ(ls[1], "0,0,0,0");
  const std::string peak = format_number(2 * kPi) + "," + format_number(2 * kPi) + ",";
  EXPECT_EQ(ls[3].rfind(peak, 0), 0u);
  EXPECT_EQ(ls[3].back(), '0');
  EXPECT_EQ(ls[5].substr(ls[5].size() - 4), ",1,0");
  EXPECT_EQ(r.out.find('\r'), std::string::npos);
}

TEST(Figure, DivergentRowsHaveEmptyValue) {
  const auto r = invoke({"figure", "fig3", "--t-min", "0", "--t-max", exact(4 * kPi),
                         "--t-points", "3"});
  ASSERT_EQ(r.code, kOk);
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 4u);
  EXPECT_EQ(ls[2].rfind(format_number(2 * kPi) + ",,", 0), 0u);
  EXPECT_EQ(ls[2].substr(ls[2].size() - 2), ",1");
}

TEST(Figure, Deterministic) {
  EXPECT_EQ(invoke({"figure", "fig7", "--t-points", "101"}).out,
            invoke({"figure", "fig7", "--t-points", "101"}).out);
}

TEST(Figure, Fig5WritesOneFilePerSeries) {
  const auto dir = std::filesystem::temp_directory_path() / "qcb_cli_test";
  std::filesystem::create_directories(dir);
  const auto r = invoke({"figure", "fig5", "--t-points", "11", "--out", (dir / "fig5.csv").string()});
  ASSERT_EQ(r.code, kOk);
  for (const char* tag : {"p3", "p5", "p10", "p100"}) {
    const auto path = dir / (std::string("fig5.") + tag + ".csv");
    ASSERT_TRUE(std::filesystem::exists(path)) << path;
    std::ifstream f(path);
    std::string header;
    std::getline(f, header);
    EXPECT_EQ(header, "t,value,branch,divergent");
    EXPECT_NE(r.out.find("wrote " + path.string()), std::string::npos);
  }
  std::filesystem::remove_all(dir);
}

TEST(Figure, Fig5CaptionParameters) {
  const auto series = figure_data("fig5", FigureConfig{{}, std::nullopt, std::nullopt, 11});
  ASSERT_EQ(series.size(), 4u);
  EXPECT_EQ(series[2].label, "p=10");
  const auto& [t, b] = series[2].points[5];
  const auto direct = bound(target::CoupledOscillators{2, 1, 3, t, 1, 10});
  EXPECT_EQ(b.value, direct.value);
}

TEST(Figure, Fig6WithoutCouplingIsUncoupledSawtooth) {
  const auto series = figure_data("fig6", FigureConfig{{{"mu", 0.0}}, std::nullopt, std::nullopt, 51});
  ASSERT_EQ(series.size(), 1u);
  auto red = [](double x) { return std::abs(x - 4 * kPi * std::floor((x + 2 * kPi) / (4 * kPi))); };
  for (const auto& [t, b] : series[0].points) {
    ASSERT_FALSE(b.divergent);
    const double sum = red(3 * t), diff = red(t);
    EXPECT_NEAR(b.value, std::sqrt(0.5 * (sum * sum + diff * diff)), 1e-12) << t;
  }
}

TEST(Figure, JsonFormat) {
  const auto r = invoke({"figure", "fig6", "--t-points", "3", "--format", "json"});
  ASSERT_EQ(r.code, kOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["figure"], "fig6");
  EXPECT_EQ(j["series"].size(), 4u);
  EXPECT_EQ(j["series"][0]["points"].size(), 3u);
}

TEST(Figure, BadGrid) {
  EXPECT_EQ(invoke({"figure", "fig2", "--t-points", "1"}).code, kUsage);
  EXPECT_EQ(invoke({"figure", "fig2", "--t-min", "5", "--t-max", "1"}).code, kUsage);
}

TEST(Verify, AlgebraSuiteReport) {
  const auto r = invoke({"verify", "algebra"});
  EXPECT_EQ(r.code, kOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["suite"], "algebra");
  ASSERT_FALSE(j["checks"].empty());
  for (const auto& c : j["checks"]) {
    EXPECT_TRUE(c["pass"].get<bool>()) << c["name"];
    if (c["name"].get<std::string>().rfind("jacobi", 0) == 0) EXPECT_EQ(c["residual"], 0.0);
  }
}

TEST(Verify, OracleSuitePeriods) {
  const auto report = run_verify("oracle");
  EXPECT_TRUE(report.pass());
  int periods = 0;
  for (const auto& c : report.checks) {
    if (c.name.rfind("period:", 0) == 0) {
      ++periods;
      EXPECT_TRUE(c.pass) << c.name;
    }
  }
  EXPECT_EQ(periods, 2);
}

TEST(Verify, FailingCheckFailsReport) {
  VerifyReport r{"x", {{"a", 0.0, true}, {"b", 1.0, false}}};
  EXPECT_FALSE(r.pass());
  EXPECT_EQ(nlohmann::json::parse(to_json(r))["checks"][1]["pass"], false);
}

TEST(Algebra, ExportParsesBack) {
  const auto r = invoke({"algebra", "export", "ho4_general", "--m", "2", "--omega", "0.5"});
  ASSERT_EQ(r.code, kOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["name"], "ho4_general");
  EXPECT_FALSE(j["entries"].empty());
}

}  // namespace
}  // namespace qcbound::cli
