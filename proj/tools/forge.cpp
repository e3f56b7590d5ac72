// forge: exact lattice verification toolkit.
//
//   forge golay verify
//   forge case <M22|L34|A7|A8|M11|A5x3> [--json] [--out FILE]
//   forge table2 [--json]
//   forge svp --norm <n> <lattice-file>
//   forge ns-target <p> [--out FILE]
//
// Exit codes: 0 all checks pass, 1 verification failure, 2 usage error.

#include "forge/casebook.hpp"
#include "forge/enumerate.hpp"
#include "forge/golay.hpp"
#include "forge/json_io.hpp"
#include "forge/lattice.hpp"
#include "forge/niemeier.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

namespace {

int cmd_golay_verify() {
  forge::GolayCode code = forge::GolayCode::build();  // throws on invariant failure
  auto wd = code.weight_distribution();
  std::cout << "dimension      12 (4096 codewords)\n";
  std::cout << "weights        0:" << wd[0] << " 8:" << wd[8] << " 12:" << wd[12]
            << " 16:" << wd[16] << " 24:" << wd[24] << "\n";
  std::cout << "octads         " << wd[8] << "\n";
  bool ok = wd[0] == 1 && wd[8] == 759 && wd[12] == 2576 && wd[16] == 759 && wd[24] == 1;
  std::cout << (ok ? "golay: ok" : "golay: FAILED") << "\n";
  return ok ? 0 : 1;
}

void write_out(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

int cmd_case(const std::string& name, bool as_json, const std::string& out_path) {
  auto id = forge::case_from_cli(name);
  if (!id) {
    std::cerr << "unknown case '" << name << "' (expected M22|L34|A7|A8|M11|A5x3)\n";
    return 2;
  }
  forge::CaseReport r = forge::run_case(*id);
  std::string text = as_json ? forge::case_report_to_json(r).dump(2) + "\n"
                             : forge::case_report_text(r);
  if (!out_path.empty())
    write_out(out_path, text);
  else
    std::cout << text;
  return r.passed ? 0 : 1;
}

int cmd_table2(bool as_json) {
  auto reports = forge::run_all_cases();
  bool all = true;
  for (const auto& r : reports) all = all && r.passed;
  if (as_json) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& r : reports) j.push_back(forge::case_report_to_json(r));
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "case            p   h^2   det S   glue  status\n";
    for (const auto& r : reports) {
      std::cout << r.case_name;
      for (std::size_t pad = r.case_name.size(); pad < 16; ++pad) std::cout << ' ';
      std::cout << r.target_p << (r.target_p < 10 ? "   " : "  ") << r.h2.get_str();
      for (std::size_t pad = r.h2.get_str().size(); pad < 6; ++pad) std::cout << ' ';
      std::cout << r.det_s.get_str();
      for (std::size_t pad = r.det_s.get_str().size(); pad < 8; ++pad) std::cout << ' ';
      std::cout << r.glue_order.get_str();
      for (std::size_t pad = r.glue_order.get_str().size(); pad < 6; ++pad) std::cout << ' ';
      std::cout << (r.passed ? "pass" : "FAIL") << "\n";
      for (const auto& f : r.failures) std::cout << "    ! " << f << "\n";
    }
  }
  return all ? 0 : 1;
}

int cmd_svp(const std::string& path, long norm) {
  forge::Lattice l = forge::load_lattice(path);
  forge::ShortVectorReport r = forge::vectors_with_norm(l, forge::Int(norm));
  if (r.sign_mismatch)
    std::cout << "warning: requested norm sign does not match the lattice definiteness\n";
  std::cout << "vectors of norm " << norm << ": " << r.count() << " up to sign ("
            << 2 * r.count() << " total)\n";
  for (const auto& v : r.vectors) {
    std::cout << "  (";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) std::cout << ",";
      std::cout << v[i].get_str();
    }
    std::cout << ")\n";
  }
  return 0;
}

int cmd_ns_target(int p, const std::string& out_path) {
  forge::NSTarget t = forge::ns_target(p);
  std::cout << "p = " << t.p << ", sigma = " << t.sigma << "\n";
  std::cout << "rank 22, det = " << t.lattice.determinant().get_str() << ", signature (1,21)\n";
  std::cout << "discriminant form " << t.fqf.to_string() << "\n";
  bool ok = forge::isomorphic(t.fqf, forge::ns_reference_form(p)).found();
  std::cout << "reference form match: " << (ok ? "yes" : "NO") << "\n";
  if (!out_path.empty()) forge::save_lattice(out_path, t.lattice);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification toolkit for the A1^24 Niemeier lattice casebook"};
  app.require_subcommand(1);

  auto* golay = app.add_subcommand("golay", "Golay code commands");
  golay->require_subcommand(1);
  golay->add_subcommand("verify", "build the code and print its invariants");

  std::string case_name, case_out;
  bool case_json = false;
  auto* case_cmd = app.add_subcommand("case", "verify one orbit case");
  case_cmd->add_option("name", case_name, "M22|L34|A7|A8|M11|A5x3")->required();
  case_cmd->add_flag("--json", case_json, "emit the report as JSON");
  case_cmd->add_option("--out", case_out, "write the report to a file");

  bool table_json = false;
  auto* table_cmd = app.add_subcommand("table2", "verify all six cases");
  table_cmd->add_flag("--json", table_json, "emit the reports as JSON");

  std::string svp_file;
  long svp_norm = 0;
  auto* svp_cmd = app.add_subcommand("svp", "enumerate vectors of a given norm");
  svp_cmd->add_option("--norm", svp_norm, "target norm (sign must match definiteness)")
      ->required();
  svp_cmd->add_option("file", svp_file, "lattice file {rank, gram}")->required();

  int ns_p = 0;
  std::string ns_out;
  auto* ns_cmd = app.add_subcommand("ns-target", "build a supersingular NS lattice");
  ns_cmd->add_option("p", ns_p, "characteristic: 5, 7 or 11")->required();
  ns_cmd->add_option("--out", ns_out, "write the lattice to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (golay->parsed()) return cmd_golay_verify();
    if (case_cmd->parsed()) return cmd_case(case_name, case_json, case_out);
    if (table_cmd->parsed()) return cmd_table2(table_json);
    if (svp_cmd->parsed()) return cmd_svp(svp_file, svp_norm);
    if (ns_cmd->parsed()) return cmd_ns_target(ns_p, ns_out);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
