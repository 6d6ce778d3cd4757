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

#include "qcurv/classify.hpp"
#include "qcurv/io.hpp"
#include "qcurv/jets.hpp"

namespace qcurv {

/// Command entry points shared by the CLI and the tests.  Every report is a
/// JSON object with the command echo, exact entry strings (never floats),
/// and a timing field; the human rendering carries the same verdicts.

nlohmann::json cmd_curvatures(const SystemFile& file, const QDiffSystem& sys,
                              const std::vector<unsigned>& kappas);

/// exit_code: 0 trivial-up-to, 1 nontrivial witness, 2 inconclusive.
nlohmann::json cmd_triviality(const SystemFile& file, const QDiffSystem& sys,
                              unsigned kappa_max, int& exit_code);

nlohmann::json cmd_classify(const SystemFile& file, const QDiffSystem& sys,
                            unsigned kappa_max, ClassifyMode mode);

/// Applies a construction; for tensor/dsum the second file is required.
SystemFile cmd_construct(const SystemFile& f1, const SystemFile* f2,
                         const std::string& op);

nlohmann::json cmd_jets(const SystemFile& file, const QDiffSystem& sys,
                        unsigned kappa_max);

std::string human_report(const nlohmann::json& report);

/// Resolves the place bound: explicit flag beats QCURV_KMAX beats default.
unsigned resolve_kappa_max(int flag_value);

}  // namespace qcurv
