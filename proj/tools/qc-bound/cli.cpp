// Copyright 2026 The qc-bound Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcbound/errors.hpp"
#include "qcbound/lie_algebra.hpp"

namespace qcbound::cli {
namespace {

constexpr double kPi = std::numbers::pi;

const std::vector<std::string> kParamNames = {"omega",  "t",      "lambda", "Omega", "m",
                                              "re",     "im",     "omega1", "omega2",
                                              "mu",     "q",      "p",      "G11"};

// Binds --<name> options for every target parameter and collects the ones
// given on the command line.
class ParamOptions {
 public:
  void attach(CLI::App* app) {
    for (const auto& name : kParamNames) {
      options_[name] = app->add_option("--" + name, values_[name], "target parameter " + name);
    }
  }

  std::map<std::string, double> given() const {
    std::map<std::string, double> out;
    for (const auto& [name, opt] : options_) {
      if (opt->count() > 0) out[name] = values_.at(name);
    }
    return out;
  }

 private:
  std::map<std::string, double> values_;
  std::map<std::string, CLI::Option*> options_;
};

double param(const std::map<std::string, double>& p, const char* key, double fallback) {
  auto it = p.find(key);
  return it == p.end() ? fallback : it->second;
}

std::vector<double> grid(double lo, double hi, int points) {
  if (points < 2) throw Error("a curve needs at least 2 grid points");
  if (!(lo < hi)) throw Error("t_min must be smaller than t_max");
  std::vector<double> out(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) out[i] = lo + (hi - lo) * i / (points - 1);
  out.back() = hi;
  return out;
}

std::string tag_of(const std::string& key, double value) {
  std::string v = format_number(value);
  for (char& c : v) {
    if (c == '.') c = '_';
  }
  return key + v;
}

int write_figure(const std::string& name, const std::vector<FigureSeries>& series,
                 const std::string& out_path, const std::string& format, std::ostream& out) {
  if (format == "json") {
    nlohmann::json j;
    j["figure"] = name;
    j["series"] = nlohmann::json::array();
    for (const auto& s : series) {
      nlohmann::json pts = nlohmann::json::array();
      for (const auto& [t, b] : s.points) {
        pts.push_back({{"t", t},
                       {"value", b.divergent ? nlohmann::json(nullptr) : nlohmann::json(b.value)},
                       {"branch", b.branch},
                       {"divergent", b.divergent}});
      }
      j["series"].push_back({{"label", s.label}, {"points", std::move(pts)}});
    }
    const std::string text = j.dump() + "\n";
    if (out_path.empty()) {
      out << text;
    } else {
      std::ofstream f(out_path, std::ios::binary);
      f << text;
      out << "wrote " << out_path << "\n";
    }
    return kOk;
  }

  if (out_path.empty()) {
    for (const auto& s : series) {
      if (!s.label.empty()) out << "# series " << s.label << "\n";
      out << to_csv(s.points);
    }
    return kOk;
  }
  const std::filesystem::path base(out_path);
  for (const auto& s : series) {
    std::filesystem::path path = base;
    if (series.size() > 1) {
      path = base.parent_path() /
             (base.stem().string() + "." + s.tag + base.extension().string());
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot open " + path.string() + " for writing");
    f << to_csv(s.points);
    out << "wrote " << path.string() << "\n";
  }
  return kOk;
}

}  // namespace

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

const std::vector<std::string>& figure_names() {
  static const std::vector<std::string> names = {"fig2", "fig3", "fig4",
                                                 "fig5", "fig6", "fig7"};
  return names;
}

std::vector<FigureSeries> figure_data(const std::string& name, const FigureConfig& config) {
  const auto& o = config.overrides;
  auto t_range = [&](double lo, double hi) {
    return grid(config.t_min.value_or(lo), config.t_max.value_or(hi), config.t_points);
  };
  auto single = [](const TargetSpec& base, const std::vector<double>& ts) {
    return std::vector<FigureSeries>{{"", "", bound_curve(base, ts)}};
  };

  if (name == "fig2") {
    return single(target::HarmonicOscillator{param(o, "omega", 1.0), 0.0}, t_range(0, 16 * kPi));
  }
  if (name == "fig3") {
    return single(target::HoLinear{param(o, "omega", 1.0), param(o, "lambda", 0.3), 0.0},
                  t_range(0, 8 * kPi));
  }
  if (name == "fig4") {
    return single(target::HoQuadratic{param(o, "omega", 1.0), param(o, "lambda", 0.2), 0.0},
                  t_range(0, 8 * kPi));
  }
  if (name == "fig7") {
    return single(target::AnharmonicCubic{param(o, "omega", 1.0), param(o, "lambda", 0.05), 0.0,
                                          param(o, "G11", 1.0), param(o, "p", 100.0)},
                  t_range(0, 8 * kPi));
  }
  if (name == "fig5" || name == "fig6") {
    const bool p_sweep = name == "fig5";
    const std::string key = p_sweep ? "p" : "mu";
    std::vector<double> sweep = p_sweep ? std::vector<double>{3, 5, 10, 100}
                                        : std::vector<double>{0, 1, 2, 3};
    if (o.count(key)) sweep = {o.at(key)};
    const auto ts = t_range(0, 10);
    std::vector<FigureSeries> out;
    for (double x : sweep) {
      target::CoupledOscillators c{param(o, "omega1", 2.0), param(o, "omega2", 1.0),
                                   p_sweep ? param(o, "mu", 3.0) : x, 0.0, param(o, "q", 1.0),
                                   p_sweep ? x : param(o, "p", 10.0)};
      out.push_back({key + "=" + format_number(x), tag_of(key, x), bound_curve(c, ts)});
    }
    return out;
  }
  throw Unsupported("unknown figure '" + name + "'");
}

std::string to_csv(const std::vector<std::pair<double, BoundResult>>& points) {
  std::string s = "t,value,branch,divergent\n";
  for (const auto& [t, b] : points) {
    s += format_number(t);
    s += ',';
    if (!b.divergent) s += format_number(b.value);
    s += ',';
    s += std::to_string(b.branch);
    s += b.divergent ? ",1\n" : ",0\n";
  }
  return s;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Upper bounds on geodesic complexity of oscillator time evolution", "qc-bound"};
  app.require_subcommand(1);

  auto* bound_cmd = app.add_subcommand("bound", "Evaluate one complexity bound");
  std::string system;
  bound_cmd->add_option("system", system, "target system")->required();
  ParamOptions bound_params;
  bound_params.attach(bound_cmd);
  bool raw_difference = false;
  bound_cmd->add_flag("--raw-difference", raw_difference,
                      "coupled: use the unreduced frequency difference in the coupling factors");

  auto* fig_cmd = app.add_subcommand("figure", "Emit curve data for a figure");
  std::string fig_name;
  std::string out_path;
  std::string format = "csv";
  FigureConfig fig_config;
  double t_min = 0, t_max = 0;
  fig_cmd->add_option("name", fig_name, "figure name")->required();
  fig_cmd->add_option("--out", out_path, "output file; sweeps write one file per series");
  fig_cmd->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  auto* tmin_opt = fig_cmd->add_option("--t-min", t_min, "grid start");
  auto* tmax_opt = fig_cmd->add_option("--t-max", t_max, "grid end");
  fig_cmd->add_option("--t-points", fig_config.t_points, "number of grid points");
  ParamOptions fig_params;
  fig_params.attach(fig_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Run a property suite");
  std::string suite = "all";
  verify_cmd->add_option("suite", suite, "algebra, geodesic, oracle or all");

  auto* algebra_cmd = app.add_subcommand("algebra", "Structure-constant tables");
  algebra_cmd->require_subcommand(1);
  auto* export_cmd = algebra_cmd->add_subcommand("export", "Print a builtin table as JSON");
  std::string algebra_name;
  BuiltinParams builtin_params;
  export_cmd->add_option("name", algebra_name, "builtin algebra")->required();
  export_cmd->add_option("--m", builtin_params.mass, "ho4_general mass");
  export_cmd->add_option("--omega", builtin_params.omega, "ho4_general frequency");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kOk;
    }
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    if (*bound_cmd) {
      BoundOptions opts;
      opts.coupled_raw_difference = raw_difference;
      const BoundResult r = bound(make_target(system, bound_params.given()), opts);
      for (const auto& c : r.caveats) err << "# " << c << "\n";
      if (r.divergent) {
        out << "inf " << r.location << "\n";
        return kDivergent;
      }
      out << format_number(r.value) << "\n";
      return kOk;
    }
    if (*fig_cmd) {
      fig_config.overrides = fig_params.given();
      if (tmin_opt->count()) fig_config.t_min = t_min;
      if (tmax_opt->count()) fig_config.t_max = t_max;
      return write_figure(fig_name, figure_data(fig_name, fig_config), out_path, format, out);
    }
    if (*verify_cmd) {
      const VerifyReport report = run_verify(suite);
      out << to_json(report) << "\n";
      return report.pass() ? kOk : kVerifyFailed;
    }
    if (*export_cmd) {
      out << to_json(builtin(algebra_name, builtin_params)) << "\n";
      return kOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace qcbound::cli
