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


#include "report.h"

#include <charconv>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "hwp/experiments.h"

namespace hwpsim {

namespace {

std::vector<std::string_view> SplitCommas(std::string_view text) {
  std::vector<std::string_view> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (item.empty()) throw UsageError("empty item in list");
    out.push_back(item);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

int ParseInt(std::string_view s) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw UsageError("not an integer: '" + std::string(s) + "'");
  }
  return v;
}

template <typename F>
auto Checked(const char* key, F&& f) {
  try {
    return f();
  } catch (const json::exception&) {
    throw UsageError(std::string("config key '") + key +
                     "' is missing or has the wrong type");
  }
}

}  // namespace

std::vector<int> ParseIntList(std::string_view text) {
  std::vector<int> out;
  for (std::string_view item : SplitCommas(text)) {
    const auto dash = item.find('-', 1);
    if (dash == std::string_view::npos) {
      out.push_back(ParseInt(item));
      continue;
    }
    const int lo = ParseInt(item.substr(0, dash));
    const int hi = ParseInt(item.substr(dash + 1));
    if (hi < lo) throw UsageError("descending range '" + std::string(item) + "'");
    for (int v = lo; v <= hi; ++v) out.push_back(v);
  }
  return out;
}

std::vector<double> ParseDoubleList(std::string_view text) {
  std::vector<double> out;
  for (std::string_view item : SplitCommas(text)) {
    const std::string s(item);
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size()) {
      throw UsageError("not a number: '" + s + "'");
    }
    out.push_back(v);
  }
  return out;
}

json LoadConfigFile(const std::string& path, const std::string& command,
                    const json& defaults) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError("config file " + path + ": " + e.what());
  }
  if (!doc.is_object()) throw UsageError("config file must hold an object");
  if (doc.contains("config") && doc.contains("command")) {
    if (doc["command"] != command) {
      throw UsageError("config file is a '" +
                       doc["command"].get<std::string>() + "' report");
    }
    doc = doc["config"];
  }
  for (const auto& [key, value] : doc.items()) {
    if (!defaults.contains(key)) {
      throw UsageError("unknown config key '" + key + "' for " + command);
    }
  }
  return doc;
}

int GetInt(const json& cfg, const char* key) {
  return Checked(key, [&] { return cfg.at(key).get<int>(); });
}
double GetDouble(const json& cfg, const char* key) {
  return Checked(key, [&] { return cfg.at(key).get<double>(); });
}
std::string GetString(const json& cfg, const char* key) {
  return Checked(key, [&] { return cfg.at(key).get<std::string>(); });
}
bool GetBool(const json& cfg, const char* key) {
  return Checked(key, [&] { return cfg.at(key).get<bool>(); });
}
std::vector<int> GetIntList(const json& cfg, const char* key) {
  return Checked(key, [&] {
    const json& v = cfg.at(key);
    return v.is_array() ? v.get<std::vector<int>>()
                        : std::vector<int>{v.get<int>()};
  });
}
std::vector<double> GetDoubleList(const json& cfg, const char* key) {
  return Checked(key, [&] {
    const json& v = cfg.at(key);
    return v.is_array() ? v.get<std::vector<double>>()
                        : std::vector<double>{v.get<double>()};
  });
}

std::string TimestampUtc() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string FormatDouble(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void CsvTable::AddRow(std::vector<std::string> row) {
  if (row.size() != header_.size()) {
    throw std::logic_error("csv row width does not match the header");
  }
  rows_.push_back(std::move(row));
}

void CsvTable::Write(std::ostream& out) const {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out << ',';
      out << cells[i];
    }
    out << '\n';
  };
  line(header_);
  for (const auto& r : rows_) line(r);
}

std::string ResolveOutPath(const std::string& out, const std::string& command,
                           const std::string& format) {
  const char* env = std::getenv("HWPSIM_OUT_DIR");
  if (env == nullptr || *env == '\0') return out;
  namespace fs = std::filesystem;
  const fs::path dir(env);
  if (out.empty()) return (dir / (command + "." + format)).string();
  const fs::path p(out);
  return p.is_absolute() ? out : (dir / p).string();
}

std::string HeaderComment(const std::string& command, const json& config) {
  return "# tool: hwpsim " + std::string(hwp::Version()) + "\n" +
         "# command: " + command + "\n" + "# timestamp: " + TimestampUtc() +
         "\n" + "# config: " + config.dump() + "\n";
}

std::ostream& OpenOutput(const std::string& path, std::ofstream& file) {
  if (path.empty()) return std::cout;
  const std::filesystem::path parent =
      std::filesystem::path(path).parent_path();
  if (!parent.empty()) std::filesystem::create_directories(parent);
  file.open(path);
  if (!file) throw std::runtime_error("cannot write " + path);
  return file;
}

void Emit(const std::string& command, const json& config,
          const std::string& format, const json& results,
          const CsvTable& table, const std::string& path) {
  std::ofstream file;
  std::ostream& out = OpenOutput(path, file);
  if (format == "csv") {
    out << HeaderComment(command, config);
    table.Write(out);
  } else {
    json doc;
    doc["tool"] = "hwpsim";
    doc["version"] = hwp::Version();
    doc["command"] = command;
    doc["timestamp"] = TimestampUtc();
    doc["config"] = config;
    doc["results"] = results;
    out << doc.dump(2) << '\n';
  }
  out.flush();
  if (!out) throw std::runtime_error("write failed");
}

}  // namespace hwpsim
