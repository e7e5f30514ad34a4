// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cascade_ris/experiment.hpp"
#include "cascade_ris/plot.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace cascade_ris;
namespace fs = std::filesystem;

namespace {

const char* kGood = R"({
  "schema_version": 1,
  "system": {"tx_antennas": 4, "users": 4, "ris_sizes": [4, 4], "power_budget": 10, "noise_var": 1},
  "sweep": {"axis": "PowerDb", "points": [0, 10], "series": [{"strategy": "UpaBd"}, {"strategy": "IdentityPhases"}],
            "trials": 16, "seed": 3},
  "output": {"csv": "out.csv", "report": "run.txt"}
})";

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("cascade-ris-test-" + name);
  fs::remove_all(p);
  return p;
}

std::string where_of(const std::string& text) {
  try {
    parse_experiment_config(text);
  } catch (const ConfigError& e) {
    return e.where();
  }
  return "";
}

}  // namespace

TEST_CASE("a complete config parses") {
  const auto c = parse_experiment_config(kGood);
  CHECK(c.schema_version == 1);
  CHECK(c.sweep.base.ris_sizes.size() == 2);
  CHECK(c.sweep.points == std::vector<double>{0, 10});
  CHECK(c.sweep.series.size() == 2);
  CHECK(c.sweep.trials == 16);
  CHECK(c.sweep.seed == Seed{3});
  CHECK(c.output.csv == "out.csv");
  CHECK_FALSE(c.output.plot.has_value());
}

TEST_CASE("schema violations carry a location") {
  std::string text = kGood;
  CHECK(where_of(std::string(kGood).replace(text.find("\"trials\""), 8, "\"trails\"")) == "/sweep/trails");
  CHECK(where_of(R"({"schema_version": 2, "system": {}, "sweep": {}})") == "/schema_version");
  CHECK(where_of(R"({"system": {}, "sweep": {}})") == "/schema_version");

  std::string empty_points = kGood;
  empty_points.replace(empty_points.find("[0, 10]"), 7, "[]");
  CHECK(where_of(empty_points) == "/sweep/points");

  std::string bad_strategy = kGood;
  bad_strategy.replace(bad_strategy.find("IdentityPhases"), 14, "Oracle");
  CHECK(where_of(bad_strategy) == "/sweep/series/1/strategy");

  std::string negative = kGood;
  negative.replace(negative.find("\"tx_antennas\": 4"), 16, "\"tx_antennas\": -4");
  CHECK(where_of(negative) == "/system/tx_antennas");

  CHECK(where_of("{\n  \"schema_version\": 1,\n  oops\n}") == "line 3, column 3");
}

TEST_CASE("csv format") {
  SweepRow ok;
  ok.axis_value = 10.0;
  ok.series = "UpaBd";
  ok.estimate.mean_bits = 1.0 / 3.0;
  ok.estimate.std_error = 0.25;
  ok.ec_taylor = 2.0;
  SweepRow bad;
  bad.axis_value = 1.0;
  bad.series = "UpaBd";
  bad.valid = false;
  const std::string csv = format_csv({ok, bad});
  CHECK(csv ==
        "axis,strategy,mean_bits,std_error,ec_taylor,ec_highsnr,ec_largeN\n"
        "10,UpaBd,0.333333333333,0.25,2,,\n"
        "1,UpaBd,,,,,\n");
  CHECK(csv.find('\r') == std::string::npos);
  CHECK(format_number(123456.7890123456) == "123456.789012");
}

TEST_CASE("atomic write replaces the target and leaves no temporary") {
  const fs::path dir = scratch("atomic");
  const fs::path target = dir / "sub" / "x.csv";
  write_atomically(target, "one\n");
  write_atomically(target, "two\n");
  CHECK(slurp(target) == "two\n");
  CHECK_FALSE(fs::exists(fs::path(target.string() + ".tmp")));
  fs::remove_all(dir);
}

TEST_CASE("run writes csv and report; reruns are byte identical; workers do not matter") {
  const auto cfg = parse_experiment_config(kGood);
  const fs::path dir = scratch("run");
  RunOverrides a;
  a.out_dir = dir / "a";
  RunOverrides b;
  b.out_dir = dir / "b";
  b.workers = 8;
  const auto ra = run_experiment(cfg, a);
  const auto ra2 = run_experiment(cfg, a);
  const auto rb = run_experiment(cfg, b);
  CHECK(ra.csv_path == dir / "a" / "out.csv");
  CHECK(fs::exists(ra.validation_report_path));
  CHECK_FALSE(ra.plot_path.has_value());
  const std::string csv = slurp(ra.csv_path);
  CHECK(csv.rfind("axis,strategy,mean_bits,std_error,ec_taylor,ec_highsnr,ec_largeN\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
  CHECK(csv == slurp(ra2.csv_path));
  CHECK(csv == slurp(rb.csv_path));
  fs::remove_all(dir);
}

TEST_CASE("overrides and plot") {
  const auto cfg = parse_experiment_config(kGood);
  const fs::path dir = scratch("plot");
  RunOverrides o;
  o.out_dir = dir;
  o.plot = true;
  o.trials = 4;
  o.seed = Seed{99};
  const auto r = run_experiment(cfg, o);
  REQUIRE(r.plot_path.has_value());
  CHECK(*r.plot_path == dir / "out.svg");
  const std::string svg = slurp(*r.plot_path);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("UpaBd") != std::string::npos);
  CHECK(r.rows.front().estimate.trials == 4);
  CHECK(r.rows.front().estimate.seed == Seed{99});
  fs::remove_all(dir);
}

TEST_CASE("invalid dimension points are reported and the run still succeeds") {
  const std::string text = R"({
    "schema_version": 1,
    "system": {"tx_antennas": 2, "users": 2, "ris_sizes": [2, 2]},
    "sweep": {"axis": "ElementsN", "points": [1, 4], "series": [{"strategy": "UpaBd"}], "trials": 4}
  })";
  const fs::path dir = scratch("invalid");
  RunOverrides o;
  o.out_dir = dir;
  const auto r = run_experiment(parse_experiment_config(text), o);
  CHECK_FALSE(r.rows[0].valid);
  CHECK(slurp(r.validation_report_path).find("invalid point 1") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("shipped default config matches the built-in defaults") {
  const auto file = load_experiment_config(fs::path(CASCADE_RIS_SOURCE_DIR) / "configs" / "default.json");
  const auto def = default_experiment_config();
  CHECK(format_run_report(file, {}) == format_run_report(def, {}));
  CHECK(file.sweep.base.ris_sizes == def.sweep.base.ris_sizes);
  CHECK(file.sweep.points == def.sweep.points);
  REQUIRE(file.sweep.series.size() == def.sweep.series.size());
  for (std::size_t i = 0; i < def.sweep.series.size(); ++i) CHECK(file.sweep.series[i].label() == def.sweep.series[i].label());
  CHECK(file.output.csv == def.output.csv);
}

TEST_CASE("svg renders with no valid rows") {
  CHECK(render_svg({}, "PowerDb").find("</svg>") != std::string::npos);
}
