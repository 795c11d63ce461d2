// Copyright 2026 The qc-bound Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcbound/complexity.hpp"

namespace qcbound::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kDivergent = 3,
  kVerifyFailed = 4,
};

/// %.12g.
std::string format_number(double x);

struct FigureSeries {
  /// e.g. "p=10"; empty for single-series figures.
  std::string label;
  /// Filename-safe label, e.g. "p10".
  std::string tag;
  std::vector<std::pair<double, BoundResult>> points;
};

struct FigureConfig {
  std::map<std::string, double> overrides;
  std::optional<double> t_min;
  std::optional<double> t_max;
  int t_points = 1001;
};

const std::vector<std::string>& figure_names();

/// Throws Unsupported for an unknown figure name and Error for a bad grid.
std::vector<FigureSeries> figure_data(const std::string& name, const FigureConfig& config);

/// Header `t,value,branch,divergent`; divergent rows leave `value` empty.
std::string to_csv(const std::vector<std::pair<double, BoundResult>>& points);

struct Check {
  std::string name;
  double residual;
  bool pass;
};

struct VerifyReport {
  std::string suite;
  std::vector<Check> checks;

  bool pass() const;
};

const std::vector<std::string>& verify_suites();

/// Runs a property suite with fixed seeds. Throws Unsupported for an unknown
/// suite name.
VerifyReport run_verify(const std::string& suite);

/// {suite, checks: [{name, residual, pass}]}.
std::string to_json(const VerifyReport& report);

/// Entry point; returns the process exit code.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace qcbound::cli
