// SPDX-License-Identifier: Apache-2.0
//
// Experiment configuration files, CSV output and batch runs.
//
// Config files are JSON documents:
//
//   {
//     "schema_version": 1,
//     "system": {"tx_antennas": 4, "users": 4, "ris_sizes": [4, 4],
//                "power_budget": 10, "noise_var": 1},
//     "sweep":  {"axis": "PowerDb", "points": [0, 10, 20],
//                "series": [{"strategy": "UpaBd"}, {"strategy": "UpaBd", "ris_count": 1}],
//                "trials": 2000, "seed": 1},
//     "output": {"csv": "ec.csv", "plot": "ec.svg", "report": "report.txt"}
//   }
//
// Unknown keys are rejected.  "power_budget" is ignored on a PowerDb axis,
// "plot" is optional.

#pragma once

#include "cascade_ris/simulator.hpp"

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cascade_ris {

inline constexpr int kConfigSchemaVersion = 1;

/// Schema violation; `where` is a JSON pointer or a "line L, column C" location.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string where, const std::string& what)
      : std::runtime_error(where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

struct OutputPaths {
  std::filesystem::path csv{"ec.csv"};
  std::optional<std::filesystem::path> plot;
  std::filesystem::path report{"report.txt"};
};

struct ExperimentConfig {
  int schema_version{kConfigSchemaVersion};
  SweepSpec sweep;
  OutputPaths output;
};

/// L=2, M=K=4, N=8 per RIS, P_t=10, noise 1; an SNR sweep of the BD-RIS
/// designs against the diagonal baselines.  configs/default.json holds the
/// same document.
ExperimentConfig default_experiment_config();

ExperimentConfig parse_experiment_config(std::string_view text);
ExperimentConfig load_experiment_config(const std::filesystem::path& file);

/// Command-line overrides applied on top of a config file.
struct RunOverrides {
  std::optional<Seed> seed;
  std::optional<std::size_t> trials;
  std::size_t workers{1};
  std::filesystem::path out_dir{"."};
  bool plot{false};
};

struct OutputBundle {
  std::filesystem::path csv_path;
  std::optional<std::filesystem::path> plot_path;
  std::filesystem::path validation_report_path;
  std::vector<SweepRow> rows;
};

/// printf("%.12g").
std::string format_number(double x);

/// Header "axis,strategy,mean_bits,std_error,ec_taylor,ec_highsnr,ec_largeN";
/// missing values are empty fields.  LF line endings.
std::string format_csv(const std::vector<SweepRow>& rows);

std::string format_run_report(const ExperimentConfig& config, const std::vector<SweepRow>& rows);

/// Writes to a sibling temporary file and renames it over `path`.
void write_atomically(const std::filesystem::path& path, std::string_view content);

OutputBundle run_experiment(const ExperimentConfig& config, const RunOverrides& overrides);

}  // namespace cascade_ris
