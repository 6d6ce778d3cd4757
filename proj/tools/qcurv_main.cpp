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

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qcurv/report.hpp"

namespace {

using qcurv::ClassifyMode;
using qcurv::QDiffSystem;
using qcurv::SystemFile;

constexpr int kExitInputError = 3;

void emit(const nlohmann::json& report, bool json) {
  if (json) {
    std::cout << report.dump(2) << std::endl;
  } else {
    std::cout << qcurv::human_report(report);
  }
}

std::vector<unsigned> kappa_range(unsigned kappa_max) {
  std::vector<unsigned> kappas;
  for (unsigned k = 1; k <= kappa_max; ++k) kappas.push_back(k);
  return kappas;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "qcurv: exact curvatures, triviality tests and group templates for "
      "linear q-difference systems"};
  app.require_subcommand(1);

  std::string file1, file2, out_path, op = "prolong", mode_str = "differential";
  int kmax_flag = 0;
  std::vector<unsigned> places;
  bool as_json = false;

  auto add_common = [&](CLI::App* cmd, bool with_places) {
    cmd->add_option("file", file1, "system file (JSON)")->required();
    cmd->add_option("--kmax", kmax_flag,
                    "largest cyclotomic order (default 20, env QCURV_KMAX)");
    if (with_places)
      cmd->add_option("--places", places, "explicit list of orders kappa");
    cmd->add_flag("--json", as_json, "machine-readable report on stdout");
  };

  CLI::App* curv = app.add_subcommand("curvatures",
                                      "curvature matrices place by place");
  add_common(curv, true);

  CLI::App* triv = app.add_subcommand(
      "triviality", "identity test at every good place up to kmax");
  add_common(triv, false);

  CLI::App* clas = app.add_subcommand(
      "classify", "smallest catalog template containing all curvatures");
  add_common(clas, false);
  clas->add_option("--mode", mode_str, "differential | algebraic")
      ->check(CLI::IsMember({"differential", "algebraic"}));

  CLI::App* cons = app.add_subcommand("construct",
                                      "tensor/dsum/dual/prolong of systems");
  cons->add_option("file", file1, "first system file")->required();
  cons->add_option("file2", file2, "second system file (tensor, dsum)");
  cons->add_option("--op", op, "tensor | dsum | dual | prolong")
      ->required()
      ->check(CLI::IsMember({"tensor", "dsum", "dual", "prolong"}));
  cons->add_option("--out", out_path, "write the constructed system here");

  CLI::App* jets = app.add_subcommand(
      "jets", "groupoid generators on the dynamics and the transversal group");
  add_common(jets, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (cons->parsed()) {
      SystemFile f1 = qcurv::load_system_file(file1);
      SystemFile f2v;
      const SystemFile* f2p = nullptr;
      if (!file2.empty()) {
        f2v = qcurv::load_system_file(file2);
        f2p = &f2v;
      }
      SystemFile outf = qcurv::cmd_construct(f1, f2p, op);
      if (out_path.empty()) {
        std::cout << qcurv::system_file_to_json(outf).dump(2) << std::endl;
      } else {
        qcurv::save_system_file(outf, out_path);
      }
      return 0;
    }

    SystemFile file = qcurv::load_system_file(file1);
    QDiffSystem sys = qcurv::build_system(file, file1);
    unsigned kappa_max = qcurv::resolve_kappa_max(kmax_flag);

    if (curv->parsed()) {
      std::vector<unsigned> kappas =
          places.empty() ? kappa_range(kappa_max) : places;
      for (unsigned k : kappas)
        if (k == 0) throw qcurv::InputError("places must be >= 1");
      emit(qcurv::cmd_curvatures(file, sys, kappas), as_json);
      return 0;
    }
    if (triv->parsed()) {
      int exit_code = 0;
      emit(qcurv::cmd_triviality(file, sys, kappa_max, exit_code), as_json);
      return exit_code;
    }
    if (clas->parsed()) {
      ClassifyMode mode = mode_str == "algebraic" ? ClassifyMode::kAlgebraic
                                                  : ClassifyMode::kDifferential;
      emit(qcurv::cmd_classify(file, sys, kappa_max, mode), as_json);
      return 0;
    }
    if (jets->parsed()) {
      emit(qcurv::cmd_jets(file, sys, kappa_max), as_json);
      return 0;
    }
  } catch (const qcurv::Error& e) {
    std::cerr << "qcurv: " << e.what() << std::endl;
    return kExitInputError;
  }
  return 0;
}
