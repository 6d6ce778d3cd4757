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

#include "qcurv/report.hpp"

#include <chrono>
#include <cstdlib>

namespace qcurv {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

nlohmann::json input_echo(const SystemFile& file) {
  nlohmann::json j;
  j["label"] = file.label;
  j["constants"] = file.constants;
  j["rank"] = file.rank;
  j["matrix"] = file.entries;
  return j;
}

nlohmann::json matrix_strings(const Matrix<XC>& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

nlohmann::json place_record(const CurvatureRecord& rec) {
  nlohmann::json p;
  p["kappa"] = rec.kappa;
  p["phi"] = cyclotomic(rec.kappa).str("q");
  if (rec.good()) {
    p["status"] = "good";
    p["matrix"] = matrix_strings(*rec.matrix);
  } else {
    p["status"] = "bad";
    p["reason"] = bad_reason_str(*rec.bad);
  }
  return p;
}

}  // namespace

nlohmann::json cmd_curvatures(const SystemFile& file, const QDiffSystem& sys,
                              const std::vector<unsigned>& kappas) {
  auto start = Clock::now();
  nlohmann::json report;
  report["command"] = "curvatures";
  report["input"] = input_echo(file);
  report["kappas"] = kappas;
  nlohmann::json places = nlohmann::json::array();
  for (const CurvatureRecord& rec : curvature_batch(sys, kappas))
    places.push_back(place_record(rec));
  report["places"] = places;
  report["timing_ms"] = ms_since(start);
  return report;
}

nlohmann::json cmd_triviality(const SystemFile& file, const QDiffSystem& sys,
                              unsigned kappa_max, int& exit_code) {
  auto start = Clock::now();
  nlohmann::json report;
  report["command"] = "triviality";
  report["input"] = input_echo(file);
  report["kappa_max"] = kappa_max;
  TrivialityVerdict v = triviality_test(sys, kappa_max);
  nlohmann::json verdict;
  switch (v.kind) {
    case TrivialityVerdict::Kind::kTrivialUpTo:
      verdict["kind"] = "trivial_up_to";
      verdict["kappa_max"] = v.kappa_max;
      verdict["skipped"] = v.skipped;
      exit_code = 0;
      break;
    case TrivialityVerdict::Kind::kNontrivialWitness:
      verdict["kind"] = "nontrivial_witness";
      verdict["witness"] = {{"kappa", v.witness_kappa},
                            {"row", v.witness_row},
                            {"col", v.witness_col},
                            {"detail", v.detail}};
      exit_code = 1;
      break;
    case TrivialityVerdict::Kind::kInconclusive:
      verdict["kind"] = "inconclusive";
      verdict["detail"] = v.detail;
      exit_code = 2;
      break;
  }
  report["verdict"] = verdict;
  report["exit_code"] = exit_code;
  report["timing_ms"] = ms_since(start);
  return report;
}

nlohmann::json cmd_classify(const SystemFile& file, const QDiffSystem& sys,
                            unsigned kappa_max, ClassifyMode mode) {
  auto start = Clock::now();
  nlohmann::json report;
  report["command"] = "classify";
  report["input"] = input_echo(file);
  report["kappa_max"] = kappa_max;
  report["mode"] =
      mode == ClassifyMode::kDifferential ? "differential" : "algebraic";
  std::vector<unsigned> kappas;
  for (unsigned k = 1; k <= kappa_max; ++k) kappas.push_back(k);
  std::vector<CurvatureRecord> records = curvature_batch(sys, kappas);
  nlohmann::json places = nlohmann::json::array();
  for (const CurvatureRecord& rec : records) {
    nlohmann::json p;
    p["kappa"] = rec.kappa;
    p["status"] = rec.good() ? "good" : "bad";
    if (!rec.good()) p["reason"] = bad_reason_str(*rec.bad);
    places.push_back(p);
  }
  report["places"] = places;
  report["template"] = classify_records(records, sys.rank(), mode).id();
  report["timing_ms"] = ms_since(start);
  return report;
}

SystemFile cmd_construct(const SystemFile& f1, const SystemFile* f2,
                         const std::string& op) {
  bool binary = op == "tensor" || op == "dsum";
  if (binary && f2 == nullptr)
    throw InputError("construct: operation '" + op + "' needs two systems");
  if (!binary && f2 != nullptr)
    throw InputError("construct: operation '" + op + "' takes one system");

  QDiffSystem s1 = build_system(f1, f1.label.empty() ? "input 1" : f1.label);
  std::vector<std::string> constants = f1.constants;
  std::string label;

  if (binary) {
    QDiffSystem s2 = build_system(*f2, f2->label.empty() ? "input 2" : f2->label);
    for (const std::string& c : f2->constants)
      if (std::find(constants.begin(), constants.end(), c) == constants.end())
        constants.push_back(c);
    QDiffSystem out = op == "tensor" ? tensor(s1, s2) : dsum(s1, s2);
    label = op + "(" + f1.label + "," + f2->label + ")";
    return system_to_file(out, label, constants);
  }
  QDiffSystem out = op == "dual"      ? dual(s1)
                    : op == "prolong" ? prolong(s1)
                                      : throw InputError(
                                            "construct: unknown operation '" +
                                            op + "'");
  label = op + "(" + f1.label + ")";
  return system_to_file(out, label, constants);
}

nlohmann::json cmd_jets(const SystemFile& file, const QDiffSystem& sys,
                        unsigned kappa_max) {
  auto start = Clock::now();
  nlohmann::json report;
  report["command"] = "jets";
  report["input"] = input_echo(file);
  report["kappa_max"] = kappa_max;

  // Lin and Trv generators on the dynamics.
  nlohmann::json dyn = nlohmann::json::array();
  for (long k = -3; k <= 3; ++k) {
    LinearGerm<QFunc> germ = dyn_element(sys, k);
    nlohmann::json d;
    d["k"] = k;
    d["lin"] = check_lin(germ).ok;
    d["trv"] = check_trv(germ);
    dyn.push_back(d);
  }
  report["dynamics"] = dyn;

  std::vector<unsigned> kappas;
  for (unsigned k = 1; k <= kappa_max; ++k) kappas.push_back(k);
  std::vector<CurvatureRecord> records = curvature_batch(sys, kappas);
  nlohmann::json transversal;
  try {
    GroupTemplate t =
        classify_records(records, sys.rank(), ClassifyMode::kDifferential);
    transversal["template"] = t.id();
    transversal["ok"] = check_transversal_group(sys, kappas, t);
  } catch (const NoGoodPlaceError&) {
    transversal["template"] = nullptr;
    transversal["ok"] = false;
    transversal["detail"] = "no good place";
  }
  report["transversal"] = transversal;
  report["timing_ms"] = ms_since(start);
  return report;
}

unsigned resolve_kappa_max(int flag_value) {
  if (flag_value > 0) return static_cast<unsigned>(flag_value);
  if (const char* env = std::getenv("QCURV_KMAX")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<unsigned>(v);
    throw InputError(std::string("QCURV_KMAX must be a positive integer, got '") +
                     env + "'");
  }
  return kDefaultKappaMax;
}

std::string human_report(const nlohmann::json& report) {
  std::string out;
  const std::string command = report.value("command", "");
  const auto& input = report["input"];
  out += command + " of '" + input.value("label", "") + "' (rank " +
         std::to_string(input.value("rank", 0)) + ")\n";
  if (command == "curvatures") {
    for (const auto& p : report["places"]) {
      out += "  kappa=" + std::to_string(p.value("kappa", 0));
      if (p["status"] == "good") {
        out += ": ";
        const auto& m = p["matrix"];
        for (std::size_t i = 0; i < m.size(); ++i) {
          out += i == 0 ? "[" : "; ";
          for (std::size_t j = 0; j < m[i].size(); ++j)
            out += (j ? ", " : "") + m[i][j].get<std::string>();
        }
        out += "]\n";
      } else {
        out += ": bad (" + p.value("reason", "") + ")\n";
      }
    }
  } else if (command == "triviality") {
    const auto& v = report["verdict"];
    std::string kind = v.value("kind", "");
    if (kind == "trivial_up_to") {
      out += "  trivial up to kappa_max=" +
             std::to_string(v.value("kappa_max", 0)) + " (" +
             std::to_string(v["skipped"].size()) + " place(s) skipped)\n";
    } else if (kind == "nontrivial_witness") {
      out += "  nontrivial: witness at kappa=" +
             std::to_string(v["witness"].value("kappa", 0)) + ", " +
             v["witness"].value("detail", "") + "\n";
    } else {
      out += "  inconclusive: " + v.value("detail", "") + "\n";
    }
  } else if (command == "classify") {
    out += "  mode: " + report.value("mode", "") + "\n";
    out += "  template: " + report.value("template", "") + "\n";
  } else if (command == "jets") {
    for (const auto& d : report["dynamics"]) {
      out += "  k=" + std::to_string(d.value("k", 0)) +
             ": lin=" + (d.value("lin", false) ? "true" : "false") +
             " trv=" + (d.value("trv", false) ? "true" : "false") + "\n";
    }
    const auto& t = report["transversal"];
    out += "  transversal group: template=";
    out += t["template"].is_null() ? "-" : t["template"].get<std::string>();
    out += std::string(", ok=") + (t.value("ok", false) ? "true" : "false") + "\n";
  }
  if (report.contains("timing_ms")) {
    out += "  [" + std::to_string(report["timing_ms"].get<double>()) + " ms]\n";
  }
  return out;
}

}  // namespace qcurv
