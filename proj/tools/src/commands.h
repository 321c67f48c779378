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


// Subcommand table for the hwpsim driver.

#ifndef HWPSIM_COMMANDS_H_
#define HWPSIM_COMMANDS_H_

#include <functional>
#include <string>
#include <vector>

#include "report.h"

namespace hwpsim {

enum class FlagKind { kInt, kDouble, kString, kIntList, kDoubleList };

struct FlagSpec {
  std::string flag;  // e.g. "--target-loss"
  std::string key;   // config key, e.g. "target_loss"
  FlagKind kind;
  std::string help;
};

struct RunContext {
  json config;         // fully resolved settings, echoed into the report
  std::string format;  // "json" or "csv"
  std::string out;     // resolved output path, empty for stdout
};

struct Command {
  std::string name;
  std::string help;
  json defaults;
  std::vector<FlagSpec> flags;
  // Returns the process exit code: 0 ok, 1 scientific mismatch.
  std::function<int(const RunContext&)> run;
};

std::vector<Command> AllCommands();

// Converts a flag's text into the JSON value stored under its key.
json FlagValue(const FlagSpec& spec, const std::string& text);

}  // namespace hwpsim

#endif  // HWPSIM_COMMANDS_H_
