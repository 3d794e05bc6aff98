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

#include "krausmap/scenario.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <cmath>
#include <exception>
#include <fstream>
#include <functional>
#include <limits>
#include <mutex>
#include <numbers>
#include <ostream>
#include <regex>
#include <sstream>
#include <thread>

#include "krausmap/error.hpp"
#include "krausmap/genfun.hpp"
#include "krausmap/metrics.hpp"
#include "krausmap/propagator.hpp"

namespace krausmap::scenario {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::string normalize_key(std::string key) {
  key = trim(key);
  while (!key.empty() && key.front() == '-') {
    key.erase(key.begin());
  }
  for (char& c : key) {
    c = c == '-' ? '_' : static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return key;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(s);
  while (std::getline(in, part, sep)) {
    parts.push_back(trim(part));
  }
  if (!s.empty() && s.back() == sep) {
    parts.emplace_back();
  }
  return parts;
}

bool parse_bool(const std::string& text) {
  std::string v = normalize_key(text);
  if (v == "true" || v == "1" || v == "yes" || v == "on") {
    return true;
  }
  if (v == "false" || v == "0" || v == "no" || v == "off") {
    return false;
  }
  throw ConfigError("expected a boolean, got '" + text + "'");
}

int parse_count(const std::string& text) {
  const double value = parse_number(text);
  if (value != std::floor(value) || value < 1.0 || value > 1e9) {
    throw ConfigError("expected a positive integer, got '" + text + "'");
  }
  return static_cast<int>(value);
}

Grid parse_grid(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() == 1) {
    return Grid::point(parse_number(parts[0]));
  }
  if (parts.size() == 3) {
    return Grid{parse_number(parts[0]), parse_number(parts[1]), parse_count(parts[2])};
  }
  throw ConfigError("expected a value or start:stop:count, got '" + text + "'");
}

void validate_grid(const Grid& grid, const char* name, bool allow_negative) {
  if (!std::isfinite(grid.start) || !std::isfinite(grid.stop)) {
    throw ConfigError(std::string(name) + " range must be finite");
  }
  if (grid.count < 1) {
    throw ConfigError(std::string(name) + " range needs count >= 1");
  }
  if (grid.stop < grid.start) {
    throw ConfigError(std::string(name) + " range has stop < start");
  }
  if (grid.count == 1 && grid.stop != grid.start) {
    throw ConfigError(std::string(name) + " range with count 1 must have start == stop");
  }
  if (!allow_negative && grid.start < 0.0) {
    throw ConfigError(std::string(name) + " must be >= 0");
  }
}

/// Runs body(i) for i in [0, count) on a small thread pool; rethrows the
/// first exception after all workers stop.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), count));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) {
          failure = std::current_exception();
        }
        next = count;
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back(work);
    }
  }
  if (failure) {
    std::rethrow_exception(failure);
  }
}

void append(std::string& row, double value) {
  if (!row.empty()) {
    row += ',';
  }
  row += format_double(value);
}

}  // namespace

std::vector<double> Grid::points() const {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(std::max(count, 0)));
  if (count == 1) {
    out.push_back(start);
    return out;
  }
  for (int i = 0; i < count; ++i) {
    out.push_back(i == count - 1 ? stop : start + (stop - start) * i / (count - 1));
  }
  return out;
}

Grid default_theta_grid() { return Grid{0.0, std::numbers::pi, kDefaultGridPoints}; }
Grid default_evolve_time_grid() { return Grid{0.0, 3.0, kDefaultGridPoints}; }
Grid default_compare_time_grid() { return Grid::point(1.0); }
Grid default_kraus_time_grid() { return Grid::point(1.0); }

JumpSpec ScenarioConfig::jump_spec() const {
  switch (jumps) {
    case JumpChoice::Pair:
      return JumpSpec::limit_pair(kappa);
    case JumpChoice::Single:
      return JumpSpec::single(kappa);
    case JumpChoice::Custom:
      return JumpSpec::custom(custom_jumps, kappa);
  }
  throw ConfigError("unknown jump choice");
}

double parse_number(const std::string& raw) {
  const std::string text = trim(raw);
  if (text.empty()) {
    throw ConfigError("expected a number, got an empty value");
  }
  static const std::regex pi_form(
      R"(^([+-]?)(?:([0-9]*\.?[0-9]+(?:[eE][+-]?[0-9]+)?)\s*\*\s*)?pi(?:\s*/\s*([0-9]*\.?[0-9]+(?:[eE][+-]?[0-9]+)?))?$)");
  std::smatch m;
  if (std::regex_match(text, m, pi_form)) {
    double value = std::numbers::pi;
    if (m[2].matched) {
      value *= std::stod(m[2].str());
    }
    if (m[3].matched) {
      const double den = std::stod(m[3].str());
      if (den == 0.0) {
        throw ConfigError("division by zero in '" + text + "'");
      }
      value /= den;
    }
    return m[1].str() == "-" ? -value : value;
  }
  double value = 0.0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  if (*begin == '+') {
    ++begin;
  }
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError("expected a number, got '" + text + "'");
  }
  return value;
}

void apply_setting(ScenarioConfig& config, const std::string& raw_key, const std::string& raw_value) {
  const std::string key = normalize_key(raw_key);
  const std::string value = trim(raw_value);
  if (value.empty()) {
    throw ConfigError("missing value for '" + key + "'");
  }
  if (key == "decay" || key == "kappa") {
    config.kappa = parse_number(value);
  } else if (key == "coupling" || key == "rabi") {
    config.rabi = parse_number(value);
  } else if (key == "frequency" || key == "omega") {
    config.omega = parse_number(value);
  } else if (key == "theta") {
    config.theta = parse_grid(value);
  } else if (key == "time" || key == "t") {
    config.time = parse_grid(value);
  } else if (key == "steps" || key == "n") {
    std::vector<int> list;
    for (const auto& item : split(value, ',')) {
      list.push_back(parse_count(item));
    }
    config.n_list = std::move(list);
  } else if (key == "jumps") {
    const std::string choice = normalize_key(value);
    if (choice == "pair") {
      config.jumps = JumpChoice::Pair;
    } else if (choice == "single") {
      config.jumps = JumpChoice::Single;
    } else if (choice.rfind("list:", 0) == 0) {
      std::vector<Complex> amps;
      for (const auto& item : split(value.substr(value.find(':') + 1), ',')) {
        amps.emplace_back(parse_number(item), 0.0);
      }
      config.jumps = JumpChoice::Custom;
      config.custom_jumps = std::move(amps);
    } else {
      throw ConfigError("jumps must be pair, single or list:a,b,..., got '" + value + "'");
    }
  } else if (key == "renormalize") {
    config.renormalize = parse_bool(value);
  } else if (key == "per_operator") {
    config.per_operator = parse_bool(value);
  } else if (key == "operator_norm") {
    const std::string choice = normalize_key(value);
    if (choice == "sandwich") {
      config.operator_norm = OperatorNorm::Sandwich;
    } else if (choice == "left") {
      config.operator_norm = OperatorNorm::Left;
    } else {
      throw ConfigError("operator_norm must be sandwich or left, got '" + value + "'");
    }
  } else if (key == "out" || key == "output") {
    config.output_path = value;
  } else if (key == "seed") {
    std::uint64_t seed = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), seed);
    if (ec != std::errc() || ptr != value.data() + value.size()) {
      throw ConfigError("seed must be a non-negative integer, got '" + value + "'");
    }
    config.seed = seed;
  } else {
    throw ConfigError("unknown setting '" + key + "'");
  }
}

ScenarioConfig parse_config(std::istream& in, ScenarioConfig base) {
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto hash = line.find('#');
    const std::string body = trim(hash == std::string::npos ? line : line.substr(0, hash));
    if (body.empty()) {
      continue;
    }
    const auto eq = body.find('=');
    try {
      if (eq == std::string::npos) {
        throw ConfigError("expected key=value");
      }
      apply_setting(base, body.substr(0, eq), body.substr(eq + 1));
    } catch (const ConfigError& e) {
      throw ConfigError("line " + std::to_string(number) + ": " + e.what() + " ('" + body + "')");
    }
  }
  return base;
}

void validate_config(const ScenarioConfig& config) {
  try {
    (void)config.params();
  } catch (const ParameterError& e) {
    throw ConfigError(e.what());
  }
  if (config.theta) {
    validate_grid(*config.theta, "theta", true);
  }
  if (config.time) {
    validate_grid(*config.time, "time", false);
  }
  if (config.n_list.empty()) {
    throw ConfigError("steps list is empty");
  }
  try {
    (void)config.jump_spec();
  } catch (const ParameterError& e) {
    throw ConfigError(e.what());
  }
}

ScenarioConfig load_config(const std::optional<std::string>& path,
                           const std::vector<Setting>& overrides) {
  ScenarioConfig config;
  if (path) {
    std::ifstream file(*path);
    if (!file) {
      throw IoError("cannot read config file '" + *path + "'");
    }
    config = parse_config(file, config);
  }
  for (const auto& [key, value] : overrides) {
    try {
      apply_setting(config, key, value);
    } catch (const ConfigError& e) {
      throw ConfigError("flag --" + normalize_key(key) + ": " + e.what());
    }
  }
  validate_config(config);
  return config;
}

std::string format_double(double value) {
  if (value == 0.0) {
    return "0";  // also folds -0
  }
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, ec == std::errc() ? ptr : buffer);
}

void run_evolve(const ScenarioConfig& config, std::ostream& out) {
  validate_config(config);
  const SystemParams params = config.params();
  const auto thetas = config.theta.value_or(default_theta_grid()).points();
  const auto times = config.time.value_or(default_evolve_time_grid()).points();

  out << "theta,t,norm";
  for (int r = 1; r <= 3; ++r) {
    for (int c = 1; c <= 3; ++c) {
      out << ",re_" << r << c << ",im_" << r << c;
    }
  }
  out << ",trace_dev,min_eig";
  if (config.per_operator) {
    out << ",k0_norm,k1_norm,k2_norm";
  }
  out << ",valid\n";

  std::vector<std::string> rows(thetas.size() * times.size());
  parallel_for(rows.size(), [&](std::size_t idx) {
    const double theta = thetas[idx / times.size()];
    const double t = times[idx % times.size()];
    const DensityMatrix rho0 = initial_state(theta);
    const DensityMatrix rho = evolve_analytic(params, rho0, t, EvolveOptions{.validate = false});
    const ValidationReport report = validate_density(rho);

    std::string row;
    append(row, theta);
    append(row, t);
    append(row, spectral_norm(rho.matrix()));
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) {
        append(row, rho(r, c).real());
        append(row, rho(r, c).imag());
      }
    }
    append(row, report.trace_deviation);
    append(row, report.min_eigenvalue);
    if (config.per_operator) {
      const KrausSet kset = exact_kraus(params, t);
      for (const Matrix3& k : kset.operators()) {
        const Matrix3 action = config.operator_norm == OperatorNorm::Sandwich
                                   ? Matrix3(k * rho0.matrix() * k.adjoint())
                                   : Matrix3(k * rho0.matrix());
        append(row, spectral_norm(action));
      }
    }
    row += report.ok() ? ",1" : ",0";
    rows[idx] = std::move(row);
  });
  for (const auto& row : rows) {
    out << row << '\n';
  }
}

CompareSummary run_compare(const ScenarioConfig& config, std::ostream& out) {
  validate_config(config);
  const SystemParams params = config.params();
  const JumpSpec jumps = config.jump_spec();
  const auto thetas = config.theta.value_or(default_theta_grid()).points();
  const auto times = config.time.value_or(default_compare_time_grid()).points();
  for (double t : times) {
    if (t <= 0.0) {
      throw ConfigError("compare needs every time > 0");
    }
  }
  std::vector<int> n_list = config.n_list;
  std::sort(n_list.begin(), n_list.end());
  n_list.erase(std::unique(n_list.begin(), n_list.end()), n_list.end());

  const std::size_t groups = thetas.size() * times.size();
  std::vector<std::vector<EvolutionRecord>> records(groups);
  const DiscreteOptions options{.renormalize = config.renormalize};
  parallel_for(groups, [&](std::size_t idx) {
    const double theta = thetas[idx / times.size()];
    const double t = times[idx % times.size()];
    auto& group = records[idx];
    group.reserve(n_list.size());
    for (int n : n_list) {
      group.push_back(compare_engines(params, theta, t, n, jumps, options));
    }
  });

  out << "theta,t,n,norm_analytic,norm_discrete,distance,re_signed,re_abs,re_approx\n";
  CompareSummary summary;
  std::vector<double> re_slopes;
  std::vector<double> d_slopes;
  for (const auto& group : records) {
    std::vector<double> ns, re, dist;
    for (const EvolutionRecord& rec : group) {
      std::string row;
      append(row, rec.theta);
      append(row, rec.t);
      row += ',' + std::to_string(rec.n);
      append(row, rec.norm_analytic);
      append(row, rec.norm_discrete);
      append(row, rec.distance);
      append(row, rec.relative_error);
      append(row, rec.relative_error_abs());
      append(row, rec.re_approx);
      out << row << '\n';
      ns.push_back(rec.n);
      re.push_back(rec.relative_error_abs());
      dist.push_back(rec.distance);
    }
    const double rs = loglog_slope(ns, re);
    const double ds = loglog_slope(ns, dist);
    if (std::isfinite(rs)) {
      re_slopes.push_back(rs);
    }
    if (std::isfinite(ds)) {
      d_slopes.push_back(ds);
    }
  }
  auto fold = [](const std::vector<double>& v, double& lo, double& mean, double& hi) {
    if (v.empty()) {
      lo = mean = hi = std::numeric_limits<double>::quiet_NaN();
      return;
    }
    lo = *std::min_element(v.begin(), v.end());
    hi = *std::max_element(v.begin(), v.end());
    double sum = 0.0;
    for (double x : v) {
      sum += x;
    }
    mean = sum / static_cast<double>(v.size());
  };
  summary.groups = static_cast<int>(groups);
  fold(re_slopes, summary.re_slope_min, summary.re_slope_mean, summary.re_slope_max);
  fold(d_slopes, summary.distance_slope_min, summary.distance_slope_mean,
       summary.distance_slope_max);
  return summary;
}

void write_summary(const CompareSummary& summary, std::ostream& out) {
  out << "groups: " << summary.groups << '\n'
      << "log-log slope of |RE| vs n: min " << summary.re_slope_min << ", mean "
      << summary.re_slope_mean << ", max " << summary.re_slope_max << '\n'
      << "log-log slope of D vs n:    min " << summary.distance_slope_min << ", mean "
      << summary.distance_slope_mean << ", max " << summary.distance_slope_max << '\n';
}

void run_kraus_dump(const ScenarioConfig& config, double t, std::ostream& out, bool header) {
  validate_config(config);
  const SystemParams params = config.params();
  const GeneratingValues v = generating_values(params, t);
  const double cross = 2.0 * v.gamma_lambda_zero * v.lambda_zero;
  const double discriminant = v.cap_plus * v.cap_minus - cross * cross;
  const KrausSet kset = exact_kraus(params, t);

  auto scalar = [&out](const char* name, double value) {
    out << name << ",,," << format_double(value) << ",0\n";
  };
  if (header) {
    out << "item,row,col,re,im\n";
  }
  scalar("t", t);
  scalar("kappa", params.kappa());
  scalar("rabi", params.rabi());
  scalar("omega", params.omega());
  scalar("gamma", params.gamma());
  scalar("Lambda_plus", v.lambda_plus);
  scalar("Lambda_minus", v.lambda_minus);
  scalar("Lambda_zero", v.lambda_zero);
  scalar("g", v.envelope);
  scalar("lambda_plus", v.cap_plus);
  scalar("lambda_minus", v.cap_minus);
  scalar("discriminant", discriminant);
  scalar("completeness_defect", kset.completeness_defect());
  for (std::size_t mu = 0; mu < kset.size(); ++mu) {
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) {
        const Complex z = kset[mu](r, c);
        out << 'K' << mu << ',' << (r + 1) << ',' << (c + 1) << ',' << format_double(z.real())
            << ',' << format_double(z.imag()) << '\n';
      }
    }
  }
}

}  // namespace krausmap::scenario
