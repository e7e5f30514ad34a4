// SPDX-License-Identifier: Apache-2.0

#include "cascade_ris/experiment.hpp"

#include "cascade_ris/plot.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace cascade_ris {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, const std::string& path,
                         const std::set<std::string>& allowed) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.contains(key)) throw ConfigError(path + "/" + key, "unknown key");
  }
}

const json& require(const json& obj, const std::string& path, const std::string& key) {
  if (!obj.contains(key)) throw ConfigError(path + "/" + key, "missing required key");
  return obj.at(key);
}

const json& require_object(const json& obj, const std::string& path, const std::string& key) {
  const json& v = require(obj, path, key);
  if (!v.is_object()) throw ConfigError(path + "/" + key, "expected an object");
  return v;
}

std::size_t as_count(const json& v, const std::string& path, std::size_t minimum = 1) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    throw ConfigError(path, "expected a nonnegative integer");
  }
  const auto n = v.get<std::size_t>();
  if (n < minimum) throw ConfigError(path, "must be >= " + std::to_string(minimum));
  return n;
}

double as_positive(const json& v, const std::string& path) {
  if (!v.is_number()) throw ConfigError(path, "expected a number");
  const double x = v.get<double>();
  if (!(x > 0)) throw ConfigError(path, "must be positive");
  return x;
}

SystemConfig parse_system(const json& sys) {
  const std::string p = "/system";
  reject_unknown_keys(sys, p, {"tx_antennas", "users", "ris_sizes", "power_budget", "noise_var"});
  SystemConfig c;
  c.tx_antennas = as_count(require(sys, p, "tx_antennas"), p + "/tx_antennas");
  c.users = as_count(require(sys, p, "users"), p + "/users");
  const json& sizes = require(sys, p, "ris_sizes");
  if (!sizes.is_array() || sizes.empty()) throw ConfigError(p + "/ris_sizes", "expected a nonempty array");
  c.ris_sizes.clear();
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    c.ris_sizes.push_back(as_count(sizes[i], p + "/ris_sizes/" + std::to_string(i)));
  }
  if (sys.contains("power_budget")) c.power_budget = as_positive(sys.at("power_budget"), p + "/power_budget");
  if (sys.contains("noise_var")) c.noise_var = as_positive(sys.at("noise_var"), p + "/noise_var");
  return c;
}

std::vector<SweepSeries> parse_series(const json& arr) {
  const std::string p = "/sweep/series";
  if (!arr.is_array() || arr.empty()) throw ConfigError(p, "expected a nonempty array");
  std::vector<SweepSeries> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string ip = p + "/" + std::to_string(i);
    const json& item = arr[i];
    if (!item.is_object()) throw ConfigError(ip, "expected an object");
    reject_unknown_keys(item, ip, {"strategy", "ris_count"});
    const json& name = require(item, ip, "strategy");
    if (!name.is_string()) throw ConfigError(ip + "/strategy", "expected a string");
    const auto strategy = parse_strategy(name.get<std::string>());
    if (!strategy) throw ConfigError(ip + "/strategy", "unknown strategy '" + name.get<std::string>() + "'");
    SweepSeries s{*strategy, std::nullopt};
    if (item.contains("ris_count")) s.ris_count = as_count(item.at("ris_count"), ip + "/ris_count");
    out.push_back(s);
  }
  return out;
}

void parse_sweep(const json& sw, SweepSpec& spec) {
  const std::string p = "/sweep";
  reject_unknown_keys(sw, p, {"axis", "points", "series", "trials", "seed"});
  const json& axis = require(sw, p, "axis");
  if (!axis.is_string()) throw ConfigError(p + "/axis", "expected a string");
  const auto parsed = parse_axis(axis.get<std::string>());
  if (!parsed) throw ConfigError(p + "/axis", "unknown axis '" + axis.get<std::string>() + "'");
  spec.axis = *parsed;

  const json& points = require(sw, p, "points");
  if (!points.is_array() || points.empty()) throw ConfigError(p + "/points", "expected a nonempty array");
  spec.points.clear();
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!points[i].is_number()) throw ConfigError(p + "/points/" + std::to_string(i), "expected a number");
    const double x = points[i].get<double>();
    if (i > 0 && !(x > spec.points.back())) {
      throw ConfigError(p + "/points/" + std::to_string(i), "points must be strictly increasing");
    }
    spec.points.push_back(x);
  }
  spec.series = parse_series(require(sw, p, "series"));
  if (sw.contains("trials")) spec.trials = as_count(sw.at("trials"), p + "/trials");
  if (sw.contains("seed")) spec.seed = Seed{static_cast<std::uint64_t>(as_count(sw.at("seed"), p + "/seed", 0))};
}

OutputPaths parse_output(const json& out) {
  const std::string p = "/output";
  reject_unknown_keys(out, p, {"csv", "plot", "report"});
  OutputPaths o;
  auto path_of = [&](const std::string& key) {
    const json& v = out.at(key);
    if (!v.is_string() || v.get<std::string>().empty()) throw ConfigError(p + "/" + key, "expected a path");
    return std::filesystem::path(v.get<std::string>());
  };
  if (out.contains("csv")) o.csv = path_of("csv");
  if (out.contains("report")) o.report = path_of("report");
  if (out.contains("plot")) o.plot = path_of("plot");
  return o;
}

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

std::filesystem::path resolve(const std::filesystem::path& dir, const std::filesystem::path& p) {
  return p.is_absolute() ? p : dir / p;
}

}  // namespace

ExperimentConfig default_experiment_config() {
  ExperimentConfig cfg;
  cfg.sweep.base = SystemConfig::uniform(4, 4, 2, 8, 10.0);
  cfg.sweep.axis = SweepAxis::PowerDb;
  cfg.sweep.points = {0.0, 5.0, 10.0, 15.0, 20.0};
  cfg.sweep.series = {{Strategy::UpaBd, std::nullopt},
                      {Strategy::SvdWfBd, std::nullopt},
                      {Strategy::UpaDiagProjected, std::nullopt},
                      {Strategy::RandomDiagonal, std::nullopt}};
  cfg.sweep.trials = 2000;
  cfg.sweep.seed = Seed{1};
  cfg.output.csv = "ec_vs_snr.csv";
  cfg.output.report = "run_report.txt";
  return cfg;
}

ExperimentConfig parse_experiment_config(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ConfigError(line_column(text, e.byte == 0 ? 0 : e.byte - 1), "malformed JSON");
  }
  if (!doc.is_object()) throw ConfigError("/", "expected a JSON object");
  reject_unknown_keys(doc, "", {"schema_version", "system", "sweep", "output"});

  ExperimentConfig cfg;
  const json& version = require(doc, "", "schema_version");
  if (!version.is_number_integer() || version.get<int>() != kConfigSchemaVersion) {
    throw ConfigError("/schema_version",
                      "unsupported schema version (expected " + std::to_string(kConfigSchemaVersion) + ")");
  }
  cfg.schema_version = version.get<int>();
  cfg.sweep.base = parse_system(require_object(doc, "", "system"));
  parse_sweep(require_object(doc, "", "sweep"), cfg.sweep);
  if (doc.contains("output")) {
    if (!doc.at("output").is_object()) throw ConfigError("/output", "expected an object");
    cfg.output = parse_output(doc.at("output"));
  }
  try {
    cfg.sweep.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError("/sweep", e.what());
  }
  return cfg;
}

ExperimentConfig load_experiment_config(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw ConfigError(file.string(), "cannot open config file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_experiment_config(buf.str());
}

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string format_csv(const std::vector<SweepRow>& rows) {
  std::string out = "axis,strategy,mean_bits,std_error,ec_taylor,ec_highsnr,ec_largeN\n";
  auto opt = [](const std::optional<double>& v) { return v ? format_number(*v) : std::string(); };
  for (const auto& r : rows) {
    out += format_number(r.axis_value);
    out += ',';
    out += r.series;
    out += ',';
    if (r.valid) {
      out += format_number(r.estimate.mean_bits);
      out += ',';
      out += format_number(r.estimate.std_error);
    } else {
      out += ',';
    }
    out += ',' + opt(r.ec_taylor) + ',' + opt(r.ec_highsnr) + ',' + opt(r.ec_large_n) + '\n';
  }
  return out;
}

std::string format_run_report(const ExperimentConfig& config, const std::vector<SweepRow>& rows) {
  const auto& s = config.sweep;
  std::ostringstream out;
  out << "cascade-ris run report\n";
  out << "schema_version " << config.schema_version << "\n";
  out << "M=" << s.base.tx_antennas << " K=" << s.base.users << " L=" << s.base.ris_count()
      << " P_t=" << format_number(s.base.power_budget) << " noise_var=" << format_number(s.base.noise_var)
      << "\n";
  out << "axis " << to_string(s.axis) << ", " << s.points.size() << " points, " << s.series.size()
      << " series, trials " << s.trials << ", seed " << s.seed.value << "\n";
  std::size_t invalid = 0;
  for (const auto& r : rows) {
    if (!r.valid) {
      ++invalid;
      out << "invalid point " << format_number(r.axis_value) << " [" << r.series << "]: " << r.note << "\n";
    }
  }
  out << rows.size() << " rows, " << invalid << " invalid\n";
  return out.str();
}

void write_atomically(const std::filesystem::path& path, std::string_view content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

OutputBundle run_experiment(const ExperimentConfig& config, const RunOverrides& overrides) {
  ExperimentConfig effective = config;
  if (overrides.seed) effective.sweep.seed = *overrides.seed;
  if (overrides.trials) effective.sweep.trials = *overrides.trials;
  effective.sweep.validate();

  OutputBundle bundle;
  bundle.rows = run_sweep(effective.sweep, overrides.workers);
  bundle.csv_path = resolve(overrides.out_dir, effective.output.csv);
  bundle.validation_report_path = resolve(overrides.out_dir, effective.output.report);
  write_atomically(bundle.csv_path, format_csv(bundle.rows));
  write_atomically(bundle.validation_report_path, format_run_report(effective, bundle.rows));

  if (effective.output.plot || overrides.plot) {
    std::filesystem::path plot = effective.output.plot.value_or(
        std::filesystem::path(effective.output.csv).replace_extension(".svg"));
    bundle.plot_path = resolve(overrides.out_dir, plot);
    write_atomically(*bundle.plot_path, render_svg(bundle.rows, to_string(effective.sweep.axis)));
  }
  return bundle;
}

}  // namespace cascade_ris
