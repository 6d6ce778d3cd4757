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

#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "qcurv/system.hpp"

namespace qcurv {

/// On-disk description of a system: declared constants, rank, and a square
/// array of entry strings in the expression grammar.  Canonical printing
/// uses the same grammar, so outputs are valid inputs.
struct SystemFile {
  std::string label;
  std::vector<std::string> constants;
  std::size_t rank = 0;
  std::vector<std::vector<std::string>> entries;
};

SystemFile system_file_from_json(const nlohmann::json& j,
                                 const std::string& origin);
SystemFile load_system_file(const std::string& path);

nlohmann::json system_file_to_json(const SystemFile& f);
void save_system_file(const SystemFile& f, const std::string& path);

/// Parses and evaluates every entry; diagnostics carry the origin and the
/// entry coordinates.  Also validates det != 0.
QDiffSystem build_system(const SystemFile& f, const std::string& origin);

/// Renders a system back to entry strings.
SystemFile system_to_file(const QDiffSystem& sys, const std::string& label,
                          const std::vector<std::string>& constants);

}  // namespace qcurv
