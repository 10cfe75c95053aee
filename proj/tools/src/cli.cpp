#include "tanaka_cli/cli.hpp"

#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "tanaka/suites.hpp"
#include "tanaka_cli/report_json.hpp"

namespace tanaka::cli {

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

cochain::Cochain read_cochain_file(const std::string& path, int k) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  auto c = cochain_from_json(j);
  if (c.k != k) throw ParseError("--k " + std::to_string(k) + " disagrees with degree " + std::to_string(c.k) + " in " + path);
  return c;
}

int step_from_text(const std::string& s) {
  if (s == "all") return -1;
  if (s.size() == 1 && s[0] >= '0' && s[0] <= '3') return s[0] - '0';
  throw ParseError("--step must be 0, 1, 2, 3 or all");
}

}  // namespace

report::Report merged_suite() {
  report::Report out{"suite", {}, {}};
  for (const auto& r : suites::full_suite()) {
    for (auto c : r.checks) {
      c.name = r.command + " :: " + c.name;
      out.checks.push_back(std::move(c));
    }
    if (out.error.empty() && !r.error.empty()) out.error = r.command + ": " + r.error;
  }
  return out;
}

RunResult run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification suites for so(3,2) and the flat girdled CR model", "tanaka"};
  app.fallthrough();
  app.require_subcommand(1);
  std::string json_path;
  app.add_option("--json", json_path, "Write the report as JSON to PATH (\"-\" for standard output)");

  std::function<report::Report()> action;
  std::string command_text;

  auto* verify = app.add_subcommand("verify", "Verify the algebra and the structure equations");
  verify->require_subcommand(1);
  verify->add_subcommand("table1", "Bracket table against matrix commutators")->callback([&] { action = suites::verify_table1; });
  verify->add_subcommand("jacobi", "Jacobi identity, grading and eigenspace dimensions")->callback([&] { action = suites::verify_jacobi; });
  verify->add_subcommand("structeq", "Flat structure equations and d^2 = 0")->callback([&] { action = suites::verify_structeq; });

  int ell = 0, k = 0;
  auto* cohom = app.add_subcommand("cohomology", "Cohomology dimension of C^l_k");
  cohom->add_option("--ell", ell)->required();
  cohom->add_option("--k", k)->required();
  cohom->callback([&] { action = [&] { return suites::cohomology(ell, k); }; });

  auto* hodge = app.add_subcommand("hodge", "Kostant decomposition of C^l_k");
  hodge->add_option("--ell", ell)->required();
  hodge->add_option("--k", k)->required();
  hodge->callback([&] { action = [&] { return suites::hodge(ell, k); }; });

  std::string step;
  auto* prolong = app.add_subcommand("prolong", "Prolongation steps");
  prolong->add_option("--step", step, "0, 1, 2, 3 or all")->required();
  prolong->callback([&] { action = [&] { return suites::prolong(step_from_text(step)); }; });

  std::string input;
  auto* normalize = app.add_subcommand("normalize", "Normalize a c-torsion 2-cochain");
  normalize->add_option("--k", k)->required();
  normalize->add_option("--input", input, "JSON cochain file")->required();
  normalize->callback([&] { action = [&] { return suites::normalize(read_cochain_file(input, k)); }; });

  std::string csv;
  auto* model = app.add_subcommand("model", "Tube over the future light cone and its quadric model");
  model->require_subcommand(1);
  auto* quadric = model->add_subcommand("quadric", "Quadric membership of a point of CP^4");
  quadric->add_option("--point", csv, "t0,...,t4 as exact complex numbers")->required();
  quadric->callback([&] { action = [&] { return suites::model_quadric(suites::parse_projective_csv(csv)); }; });
  const std::pair<const char*, report::Report (*)(const model::ConePoint&)> point_commands[] = {
      {"embed", suites::model_embed},
      {"levi", suites::model_levi},
      {"cubic", suites::model_cubic},
      {"freeman", suites::model_freeman}};
  for (const auto& [name, fn] : point_commands) {
    auto* sub = model->add_subcommand(name, std::string(name) + " at a cone point");
    sub->add_option("--z", csv, "x1,x2,x3,y1,y2,y3")->required();
    sub->callback([&, fn = fn] { action = [&, fn] { return fn(model::ConePoint::parse(csv)); }; });
  }
  model->add_subcommand("identities", "Polynomial identities of the embedding")->callback([&] { action = suites::model_identities; });

  app.add_subcommand("constraints", "Constraint catalog on the flat model")->callback([&] { action = suites::constraints; });
  app.add_subcommand("suite", "Every report merged into one")->callback([&] { action = merged_suite; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return {kExitPass, {}};
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return {kExitPass, {}};
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return {kExitUsage, {}};
  }

  for (const auto& a : args) command_text += (command_text.empty() ? "" : " ") + a;
  RunResult result;
  try {
    result.report = action();
    result.exit_code = result.report.status() == report::Status::Pass ? kExitPass : kExitFail;
  } catch (const Error& e) {
    result.report = report::Report{command_text, {}, e.what()};
    result.exit_code = kExitUsage;
  }

  if (json_path == "-") {
    out << report_json_text(result.report);
  } else {
    out << report::render_text(result.report);
    if (!json_path.empty()) {
      std::ofstream file(json_path, std::ios::binary);
      if (!file) {
        err << "error: cannot write " << json_path << "\n";
        result.exit_code = kExitUsage;
      } else {
        file << report_json_text(result.report);
      }
    }
  }
  return result;
}

}  // namespace tanaka::cli
