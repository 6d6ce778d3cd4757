// Copyright 2026 The qcurv Authors
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

#include "qcurv/io.hpp"

#include <cctype>
#include <fstream>

#include "qcurv/expr.hpp"

namespace qcurv {

namespace {

bool valid_constant_name(const std::string& name) {
  if (name.empty() || name == "x" || name == "q") return false;
  if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_')
    return false;
  for (char c : name)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

}  // namespace

SystemFile system_file_from_json(const nlohmann::json& j,
                                 const std::string& origin) {
  if (!j.is_object()) throw InputError(origin + ": expected a JSON object");
  SystemFile f;
  if (j.contains("label")) {
    if (!j["label"].is_string())
      throw InputError(origin + ": 'label' must be a string");
    f.label = j["label"].get<std::string>();
  }
  if (j.contains("constants")) {
    if (!j["constants"].is_array())
      throw InputError(origin + ": 'constants' must be an array of names");
    for (const auto& c : j["constants"]) {
      if (!c.is_string())
        throw InputError(origin + ": 'constants' must be an array of names");
      std::string name = c.get<std::string>();
      if (!valid_constant_name(name))
        throw InputError(origin + ": invalid constant name '" + name + "'");
      f.constants.push_back(name);
    }
  }
  if (!j.contains("rank") || !j["rank"].is_number_unsigned() ||
      j["rank"].get<unsigned>() == 0)
    throw InputError(origin + ": 'rank' must be a positive integer");
  f.rank = j["rank"].get<std::size_t>();
  if (!j.contains("matrix") || !j["matrix"].is_array() ||
      j["matrix"].size() != f.rank)
    throw InputError(origin + ": 'matrix' must be a " + std::to_string(f.rank) +
                     "x" + std::to_string(f.rank) + " array of entry strings");
  for (std::size_t i = 0; i < f.rank; ++i) {
    const auto& row = j["matrix"][i];
    if (!row.is_array() || row.size() != f.rank)
      throw InputError(origin + ": matrix row " + std::to_string(i) +
                       " must have " + std::to_string(f.rank) + " entries");
    std::vector<std::string> entries;
    for (const auto& e : row) {
      if (!e.is_string())
        throw InputError(origin + ": matrix entries must be strings");
      entries.push_back(e.get<std::string>());
    }
    f.entries.push_back(std::move(entries));
  }
  return f;
}

SystemFile load_system_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path + ": invalid JSON: " + e.what());
  }
  return system_file_from_json(j, path);
}

nlohmann::json system_file_to_json(const SystemFile& f) {
  nlohmann::json j;
  if (!f.label.empty()) j["label"] = f.label;
  j["constants"] = f.constants;
  j["rank"] = f.rank;
  j["matrix"] = f.entries;
  return j;
}

void save_system_file(const SystemFile& f, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError(path + ": cannot open file for writing");
  out << system_file_to_json(f).dump(2) << "\n";
}

QDiffSystem build_system(const SystemFile& f, const std::string& origin) {
  std::vector<std::vector<XK>> rows;
  rows.reserve(f.rank);
  for (std::size_t i = 0; i < f.rank; ++i) {
    std::vector<XK> row;
    row.reserve(f.rank);
    for (std::size_t j = 0; j < f.rank; ++j) {
      try {
        row.push_back(eval_entry(f.entries[i][j], f.constants));
      } catch (const Error& e) {
        throw InputError(origin + ": entry (" + std::to_string(i) + "," +
                         std::to_string(j) + "): " + e.what());
      }
    }
    rows.push_back(std::move(row));
  }
  try {
    return QDiffSystem(Matrix<XK>::from_rows(std::move(rows)));
  } catch (const SingularMatrixError&) {
    throw InputError(origin + ": determinant is the zero function");
  }
}

SystemFile system_to_file(const QDiffSystem& sys, const std::string& label,
                          const std::vector<std::string>& constants) {
  SystemFile f;
  f.label = label;
  f.constants = constants;
  f.rank = sys.rank();
  for (std::size_t i = 0; i < sys.rank(); ++i) {
    std::vector<std::string> row;
    row.reserve(sys.rank());
    for (std::size_t j = 0; j < sys.rank(); ++j)
      row.push_back(sys.matrix()(i, j).str());
    f.entries.push_back(std::move(row));
  }
  return f;
}

}  // namespace qcurv
