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

// krausmap: analytic, exact-Kraus and discrete-step evolution of the
// dissipative atom-cavity system, emitted as CSV.
//
//   krausmap evolve      [flags]   analytic rho(t) over a theta x t grid
//   krausmap compare     [flags]   discrete vs analytic records over n
//   krausmap kraus-dump  [flags]   exact Kraus operators at each time
//
// Exit codes: 0 success, 1 config error, 2 numerical/regime error, 3 I/O error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "krausmap/error.hpp"
#include "krausmap/scenario.hpp"

namespace {

using krausmap::scenario::Setting;

enum ExitCode : int { kOk = 0, kConfig = 1, kNumerical = 2, kIo = 3 };

// Flags that mirror config keys, in the order overrides are applied.
constexpr const char* kValueFlags[] = {"decay", "coupling", "frequency", "theta",
                                       "time",  "steps",    "jumps",     "operator-norm",
                                       "out",   "seed"};

struct FlagStore {
  std::string config;
  std::vector<std::string> values = std::vector<std::string>(std::size(kValueFlags));
  bool per_operator = false;
  bool renormalize = false;
};

void add_shared(CLI::App& cmd, FlagStore& store) {
  cmd.add_option("--config", store.config, "key=value config file");
  const char* help[] = {"photon decay rate kappa",
                        "atom-cavity coupling (Rabi)",
                        "transition frequency omega",
                        "initial-state angle: value or start:stop:count",
                        "time: value or start:stop:count",
                        "comma-separated step counts n",
                        "pair | single | list:a,b,...",
                        "sandwich (|K rho K^+|) or left (|K rho|)",
                        "output CSV path (default stdout)",
                        "seed for randomized scenarios"};
  for (std::size_t i = 0; i < std::size(kValueFlags); ++i) {
    cmd.add_option(std::string("--") + kValueFlags[i], store.values[i], help[i]);
  }
  cmd.add_flag("--per-operator", store.per_operator, "add |K_mu rho0 K_mu^+| columns");
  cmd.add_flag("--renormalize", store.renormalize, "divide by the trace after each step");
}

krausmap::scenario::ScenarioConfig resolve(const CLI::App& cmd, const FlagStore& store) {
  std::vector<Setting> overrides;
  for (std::size_t i = 0; i < std::size(kValueFlags); ++i) {
    if (cmd.count(std::string("--") + kValueFlags[i]) > 0) {
      overrides.emplace_back(kValueFlags[i], store.values[i]);
    }
  }
  if (store.per_operator) {
    overrides.emplace_back("per_operator", "true");
  }
  if (store.renormalize) {
    overrides.emplace_back("renormalize", "true");
  }
  std::optional<std::string> path;
  if (!store.config.empty()) {
    path = store.config;
  }
  return krausmap::scenario::load_config(path, overrides);
}

template <typename Fn>
void with_output(const std::string& path, Fn&& fn) {
  if (path.empty()) {
    fn(std::cout);
    std::cout.flush();
    if (!std::cout) {
      throw krausmap::IoError("failed writing to standard output");
    }
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    throw krausmap::IoError("cannot open output file '" + path + "'");
  }
  fn(file);
  file.flush();
  if (!file) {
    throw krausmap::IoError("failed writing '" + path + "'");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Open-system evolution of a three-level atom-cavity model"};
  app.require_subcommand(1);

  FlagStore evolve_flags, compare_flags, dump_flags;
  CLI::App* evolve = app.add_subcommand("evolve", "analytic rho(t) over a theta x t grid");
  CLI::App* compare = app.add_subcommand("compare", "discrete vs analytic comparison over n");
  CLI::App* dump = app.add_subcommand("kraus-dump", "exact Kraus operators and building blocks");
  add_shared(*evolve, evolve_flags);
  add_shared(*compare, compare_flags);
  add_shared(*dump, dump_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfig;
  }

  namespace sc = krausmap::scenario;
  try {
    if (evolve->parsed()) {
      const sc::ScenarioConfig config = resolve(*evolve, evolve_flags);
      with_output(config.output_path, [&](std::ostream& out) { sc::run_evolve(config, out); });
    } else if (compare->parsed()) {
      const sc::ScenarioConfig config = resolve(*compare, compare_flags);
      sc::CompareSummary summary;
      with_output(config.output_path,
                  [&](std::ostream& out) { summary = sc::run_compare(config, out); });
      sc::write_summary(summary, std::cerr);
    } else if (dump->parsed()) {
      const sc::ScenarioConfig config = resolve(*dump, dump_flags);
      const auto times = config.time.value_or(sc::default_kraus_time_grid()).points();
      with_output(config.output_path, [&](std::ostream& out) {
        for (std::size_t i = 0; i < times.size(); ++i) {
          sc::run_kraus_dump(config, times[i], out, i == 0);
        }
      });
    }
  } catch (const krausmap::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfig;
  } catch (const krausmap::IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kIo;
  } catch (const krausmap::Error& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return kNumerical;
  }
  return kOk;
}
