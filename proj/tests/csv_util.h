// Copyright 2026 The MSCL Authors
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
#ifndef MSCL_TESTS_CSV_UTIL_H_
#define MSCL_TESTS_CSV_UTIL_H_

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace mscl::testing {

// Minimal reader for the comma-separated reports the CLI writes.
struct Csv {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  int Column(const std::string& name) const {
    for (size_t i = 0; i < header.size(); ++i) {
      if (header[i] == name) return static_cast<int>(i);
    }
    throw std::runtime_error("no column " + name);
  }
  std::vector<std::string> Strings(const std::string& name) const {
    const int c = Column(name);
    std::vector<std::string> out;
    for (const auto& r : rows) out.push_back(r[c]);
    return out;
  }
  std::vector<double> Numbers(const std::string& name) const {
    std::vector<double> out;
    for (const std::string& s : Strings(name)) {
      out.push_back(s.empty() ? 0.0 : std::stod(s));
    }
    return out;
  }
};

inline std::string ReadText(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::vector<std::string> SplitCells(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.push_back("");
  return cells;
}

inline Csv ReadCsv(const std::string& path) {
  Csv csv;
  std::istringstream in(ReadText(path));
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (first) {
      csv.header = SplitCells(line);
      first = false;
    } else {
      csv.rows.push_back(SplitCells(line));
    }
  }
  return csv;
}

// Value of "key=" in a "k1=v1 k2=v2" summary line.
inline double SummaryValue(const std::string& text, const std::string& key) {
  const size_t pos = text.find(key + "=");
  if (pos == std::string::npos) throw std::runtime_error("no key " + key);
  return std::stod(text.substr(pos + key.size() + 1));
}

}  // namespace mscl::testing

#endif  // MSCL_TESTS_CSV_UTIL_H_
