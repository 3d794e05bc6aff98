// Copyright 2026 The krausmap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Experiment configuration and the CSV-emitting runners behind the CLI.
//
// Config files are line oriented:
//
//   # comment
//   decay = 2          (alias: kappa)
//   coupling = 4       (alias: rabi)
//   frequency = 2      (alias: omega)
//   theta = 0:pi:64    start:stop:count, inclusive; or a single value
//   time = 1
//   steps = 10,100,1000
//   jumps = pair       pair | single | list:a,b,...
//   renormalize = false
//   per_operator = false
//   operator_norm = sandwich   sandwich (|K rho K^+|) | left (|K rho|)
//   out = result.csv
//   seed = 0
//
// Numeric values accept plain numbers and multiples of pi such as
// "pi/4" or "3*pi/4".

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "krausmap/kraus.hpp"
#include "krausmap/qmodel.hpp"

namespace krausmap::scenario {

/// Inclusive evenly spaced grid; a single point when count == 1.
struct Grid {
  double start = 0.0;
  double stop = 0.0;
  int count = 1;

  static Grid point(double value) { return Grid{value, value, 1}; }
  std::vector<double> points() const;
};

enum class JumpChoice { Pair, Single, Custom };
enum class OperatorNorm { Sandwich, Left };

struct ScenarioConfig {
  double kappa = 2.0;
  double rabi = 4.0;
  double omega = 2.0;
  /// Unset grids fall back to per-command defaults (see default_* below).
  std::optional<Grid> theta;
  std::optional<Grid> time;
  std::vector<int> n_list{10, 100, 1000, 10000};
  JumpChoice jumps = JumpChoice::Pair;
  std::vector<Complex> custom_jumps;
  bool renormalize = false;
  bool per_operator = false;
  OperatorNorm operator_norm = OperatorNorm::Sandwich;
  std::string output_path;  ///< empty: standard output
  std::uint64_t seed = 0;

  SystemParams params() const { return SystemParams::make(kappa, rabi, omega); }
  JumpSpec jump_spec() const;
};

inline constexpr int kDefaultGridPoints = 64;
Grid default_theta_grid();          ///< [0, pi], 64 points
Grid default_evolve_time_grid();    ///< [0, 3], 64 points
Grid default_compare_time_grid();   ///< t = 1
Grid default_kraus_time_grid();     ///< t = 1

using Setting = std::pair<std::string, std::string>;

/// Applies one key=value setting; throws ConfigError.
void apply_setting(ScenarioConfig& config, const std::string& key, const std::string& value);

/// Parses config text; errors name the 1-based line.
ScenarioConfig parse_config(std::istream& in, ScenarioConfig base = {});

/// Reads the optional file, then applies flag overrides in order, then
/// validates the result. Throws ConfigError or IoError.
ScenarioConfig load_config(const std::optional<std::string>& path,
                           const std::vector<Setting>& overrides);

/// Cross-field checks (rates, grids, step counts, jump normalization).
void validate_config(const ScenarioConfig& config);

/// Parses "pi/4", "2*pi", "-0.5", "1e-3".
double parse_number(const std::string& text);

/// Analytic trajectories over the theta x time grid.
/// Columns: theta,t,norm,re_11,im_11,...,re_33,im_33,trace_dev,min_eig
///          [,k0_norm,k1_norm,k2_norm],valid
void run_evolve(const ScenarioConfig& config, std::ostream& out);

struct CompareSummary {
  int groups = 0;
  double re_slope_min = 0.0;
  double re_slope_mean = 0.0;
  double re_slope_max = 0.0;
  double distance_slope_min = 0.0;
  double distance_slope_mean = 0.0;
  double distance_slope_max = 0.0;
};

/// Discrete-vs-analytic records over theta x time x n_list.
/// Columns: theta,t,n,norm_analytic,norm_discrete,distance,re_signed,re_abs,re_approx
CompareSummary run_compare(const ScenarioConfig& config, std::ostream& out);

void write_summary(const CompareSummary& summary, std::ostream& out);

/// K0, K1, K2 entries and the scalars that build them, at time t.
/// Columns: item,row,col,re,im (scalars leave row and col empty).
void run_kraus_dump(const ScenarioConfig& config, double t, std::ostream& out,
                    bool header = true);

/// Shortest round-trip decimal form used in every CSV.
std::string format_double(double value);

}  // namespace krausmap::scenario
