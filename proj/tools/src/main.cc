// Copyright 2026 The hwpsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// hwpsim: batch driver for sector simulations.
//
//   hwpsim dla --n 4-6 --gate all --topology fc
//   hwpsim vqe --rows 1 --cols 4 --u 4 --gate bs --layers 100
//
// Settings resolve as defaults < --config file < flags. Exit codes: 0 ok,
// 1 a computed value disagrees with its prediction, 2 usage or input error.

#include <algorithm>
#include <exception>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "commands.h"
#include "hwp/experiments.h"

namespace {

struct Bound {
  hwpsim::FlagSpec spec;
  CLI::Option* option = nullptr;
  std::string value;
};

struct Sub {
  hwpsim::Command command;
  CLI::App* app = nullptr;
  std::string config_path;
  std::string out;
  std::string format;
  std::string jobs;
  CLI::Option* format_opt = nullptr;
  CLI::Option* jobs_opt = nullptr;
  std::vector<Bound> flags;  // stable addresses once filled
};

std::vector<std::string> AllowedFormats(const std::string& command) {
  if (command == "hubbard-build") return {"text", "json"};
  return {"json", "csv"};
}

int Run(Sub& sub) {
  using hwpsim::json;
  const hwpsim::Command& cmd = sub.command;
  json cfg = cmd.defaults;
  if (!sub.config_path.empty()) {
    cfg.merge_patch(
        hwpsim::LoadConfigFile(sub.config_path, cmd.name, cmd.defaults));
  }
  for (const Bound& b : sub.flags) {
    if (b.option->count() > 0) cfg[b.spec.key] = FlagValue(b.spec, b.value);
  }
  if (sub.format_opt->count() > 0) cfg["format"] = sub.format;
  if (sub.jobs_opt != nullptr && sub.jobs_opt->count() > 0) {
    cfg["jobs"] = hwpsim::FlagValue(
        {"--jobs", "jobs", hwpsim::FlagKind::kInt, ""}, sub.jobs);
  }
  hwpsim::RunContext ctx;
  ctx.format = hwpsim::GetString(cfg, "format");
  const auto allowed = AllowedFormats(cmd.name);
  if (std::find(allowed.begin(), allowed.end(), ctx.format) == allowed.end()) {
    throw hwpsim::UsageError("format '" + ctx.format + "' not supported by " +
                             cmd.name);
  }
  ctx.out = hwpsim::ResolveOutPath(sub.out, cmd.name, ctx.format);
  ctx.config = std::move(cfg);
  return cmd.run(ctx);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hamming-weight-preserving circuit simulator, version " +
               std::string(hwp::Version())};
  app.set_version_flag("--version", std::string(hwp::Version()));
  app.require_subcommand(1);

  std::map<std::string, Sub> subs;
  for (hwpsim::Command& cmd : hwpsim::AllCommands()) {
    Sub& sub = subs[cmd.name];
    sub.command = std::move(cmd);
    sub.app = app.add_subcommand(sub.command.name, sub.command.help);
    sub.app->add_option("--config", sub.config_path,
                        "JSON settings (or an earlier report) to start from")
        ->check(CLI::ExistingFile);
    sub.app->add_option("--out", sub.out,
                        "Output path; default stdout or $HWPSIM_OUT_DIR");
    sub.format_opt = sub.app->add_option("--format", sub.format,
                                         "Output format");
    if (sub.command.defaults.contains("jobs")) {
      sub.jobs_opt = sub.app->add_option("--jobs", sub.jobs, "Worker threads");
    }
    sub.flags.reserve(sub.command.flags.size());
    for (const auto& spec : sub.command.flags) {
      sub.flags.push_back({spec, nullptr, ""});
      Bound& b = sub.flags.back();
      b.option = sub.app->add_option(spec.flag, b.value, spec.help);
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  for (auto& [name, sub] : subs) {
    if (!sub.app->parsed()) continue;
    try {
      return Run(sub);
    } catch (const hwpsim::UsageError& e) {
      std::cerr << "hwpsim " << name << ": " << e.what() << '\n';
    } catch (const std::invalid_argument& e) {
      std::cerr << "hwpsim " << name << ": " << e.what() << '\n';
    } catch (const std::domain_error& e) {
      std::cerr << "hwpsim " << name << ": " << e.what() << '\n';
    } catch (const std::exception& e) {
      std::cerr << "hwpsim " << name << ": error: " << e.what() << '\n';
    }
    return 2;
  }
  return 2;
}
