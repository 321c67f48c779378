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


// Config resolution and report emission for the hwpsim driver.

#ifndef HWPSIM_REPORT_H_
#define HWPSIM_REPORT_H_

#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace hwpsim {

using nlohmann::json;

// Bad flags, bad config files and invalid parameter values. Maps to exit 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// "4,5,6", "4-6" or a mix such as "4,6-8". Empty text gives an empty list.
std::vector<int> ParseIntList(std::string_view text);
std::vector<double> ParseDoubleList(std::string_view text);

// Reads a JSON config. Accepts either a flat object of settings or a previous
// report, in which case its "config" block is used (and its "command" must
// match). Keys absent from `defaults` are rejected.
json LoadConfigFile(const std::string& path, const std::string& command,
                    const json& defaults);

// Checked accessors that turn JSON type errors into UsageError.
int GetInt(const json& cfg, const char* key);
double GetDouble(const json& cfg, const char* key);
std::string GetString(const json& cfg, const char* key);
bool GetBool(const json& cfg, const char* key);
std::vector<int> GetIntList(const json& cfg, const char* key);
std::vector<double> GetDoubleList(const json& cfg, const char* key);

std::string TimestampUtc();

// Round-trippable decimal form of a double.
std::string FormatDouble(double v);

class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header)
      : header_(std::move(header)) {}
  void AddRow(std::vector<std::string> row);
  void Write(std::ostream& out) const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

// Empty `out` means stdout unless HWPSIM_OUT_DIR is set, in which case the
// report goes to $HWPSIM_OUT_DIR/<command>.<format>. A relative `out` is
// resolved against HWPSIM_OUT_DIR when that is set.
std::string ResolveOutPath(const std::string& out, const std::string& command,
                           const std::string& format);

// '#' comment lines naming the tool, version, command, timestamp and config.
std::string HeaderComment(const std::string& command, const json& config);

// Opens `path` for writing (creating parent directories), or stdout if empty.
std::ostream& OpenOutput(const std::string& path, std::ofstream& file);

// Writes the report. JSON output is {tool, version, command, timestamp,
// config, results}; CSV output carries the same header as '#' comment lines.
void Emit(const std::string& command, const json& config,
          const std::string& format, const json& results,
          const CsvTable& table, const std::string& path);

}  // namespace hwpsim

#endif  // HWPSIM_REPORT_H_
