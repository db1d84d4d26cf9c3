// Command-line front end: scheme discovery and evaluation, brute-force
// counting, oracle verification, and method triage for finitely based
// permutation classes. Output is deterministic byte-for-byte.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "enumscheme/enumscheme.hpp"

namespace {

constexpr int kExitError = 1;
constexpr int kExitFrontier = 2;

void print_sequence(const std::vector<enumscheme::BigNat>& seq) {
  for (std::size_t n = 0; n < seq.size(); ++n)
    std::cout << n << ": " << seq[n] << "\n";
}

int report_frontier(const enumscheme::Frontier& f) {
  std::cout << "no scheme found at depth " << f.depth << "; " << f.irreducible.size()
            << " irreducible permutations at length " << f.depth << ":\n";
  for (const auto& p : f.irreducible) std::cout << p.str() << "\n";
  return kExitFrontier;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

int run(int argc, char** argv) {
  CLI::App app{"enumeration schemes for finitely based permutation classes"};
  app.require_subcommand(1);

  std::string basis_text;
  std::string scheme_path;
  std::string out_path;
  std::string dot_path;
  int n = 0;
  int max_depth = 6;
  int cap = enumscheme::kDefaultBruteCap;
  int sb_max = enumscheme::kDefaultSbMax;
  int simple_cap = enumscheme::kDefaultSimpleCap;
  bool classic = false;

  auto* scheme_cmd = app.add_subcommand("scheme", "discover or evaluate schemes");
  scheme_cmd->require_subcommand(1);

  auto* find_cmd = scheme_cmd->add_subcommand("find", "search for a scheme");
  find_cmd->add_option("--basis", basis_text, "basis, patterns separated by commas")->required();
  find_cmd->add_option("--max-depth", max_depth, "expansion depth limit");
  find_cmd->add_flag("--classic", classic, "use the original reducibility test");
  find_cmd->add_option("--out", out_path, "write scheme JSON to this file");
  find_cmd->add_option("--dot", dot_path, "write scheme DOT to this file");

  auto* eval_cmd = scheme_cmd->add_subcommand("eval", "evaluate s_n for n = 0..N");
  auto* eval_scheme_opt = eval_cmd->add_option("--scheme", scheme_path, "scheme JSON file");
  auto* eval_basis_opt = eval_cmd->add_option("--basis", basis_text, "basis to search first");
  eval_cmd->add_option("--n", n, "largest length to count")->required();
  eval_scheme_opt->excludes(eval_basis_opt);

  auto* count_cmd = app.add_subcommand("count", "ground-truth counting");
  auto* brute_cmd = count_cmd->add_subcommand("brute", "count avoiders by brute force");
  brute_cmd->add_option("--basis", basis_text, "basis")->required();
  brute_cmd->add_option("--n", n, "largest length to count")->required();
  brute_cmd->add_option("--cap", cap, "raise the brute-force guard cap");

  auto* verify_cmd = app.add_subcommand("verify", "build a scheme and compare with brute force");
  verify_cmd->add_option("--basis", basis_text, "basis")->required();
  verify_cmd->add_option("--n", n, "largest length to compare")->required();
  verify_cmd->add_option("--cap", cap, "raise the brute-force guard cap");

  auto* triage_cmd = app.add_subcommand("triage", "applicability of the rival methods");
  triage_cmd->add_option("--basis", basis_text, "basis")->required();
  triage_cmd->add_option("--sb-max", sb_max, "largest slot-bounded class index to test");
  triage_cmd->add_option("--simple-cap", simple_cap, "longest simple permutations to scan");

  CLI11_PARSE(app, argc, argv);

  if (find_cmd->parsed()) {
    const enumscheme::Basis basis = enumscheme::Basis::parse(basis_text);
    const auto mode = classic ? enumscheme::BuildMode::Classic : enumscheme::BuildMode::EsPlus;
    auto result = enumscheme::build_scheme(basis, max_depth, mode);
    if (auto* frontier = std::get_if<enumscheme::Frontier>(&result))
      return report_frontier(*frontier);
    const auto& scheme = std::get<enumscheme::Scheme>(result);
    const std::string json = enumscheme::scheme_to_json_text(scheme);
    if (!out_path.empty())
      write_file(out_path, json);
    else
      std::cout << json;
    if (!dot_path.empty()) write_file(dot_path, enumscheme::scheme_to_dot(scheme));
    return 0;
  }

  if (eval_cmd->parsed()) {
    enumscheme::Scheme scheme;
    if (!scheme_path.empty()) {
      std::ifstream in(scheme_path);
      if (!in) throw std::runtime_error("cannot read " + scheme_path);
      nlohmann::json doc;
      in >> doc;
      scheme = enumscheme::scheme_from_json(doc);
    } else if (eval_basis_opt->count() > 0) {
      auto result = enumscheme::build_scheme(enumscheme::Basis::parse(basis_text), max_depth);
      if (auto* frontier = std::get_if<enumscheme::Frontier>(&result))
        return report_frontier(*frontier);
      scheme = std::get<enumscheme::Scheme>(std::move(result));
    } else {
      std::cerr << "scheme eval needs --scheme or --basis\n";
      return kExitError;
    }
    print_sequence(enumscheme::eval_sequence(scheme, n));
    return 0;
  }

  if (brute_cmd->parsed()) {
    const enumscheme::Basis basis = enumscheme::Basis::parse(basis_text);
    print_sequence(enumscheme::brute_sequence(basis, n, cap));
    return 0;
  }

  if (verify_cmd->parsed()) {
    const enumscheme::Basis basis = enumscheme::Basis::parse(basis_text);
    auto result = enumscheme::build_scheme(basis, max_depth);
    if (auto* frontier = std::get_if<enumscheme::Frontier>(&result))
      return report_frontier(*frontier);
    const auto& scheme = std::get<enumscheme::Scheme>(result);
    const auto report = enumscheme::compare_with_oracle(basis, n, scheme, cap);
    for (const auto& row : report.rows) {
      if (row.match())
        std::cout << row.n << ": " << row.brute << "\n";
      else
        std::cout << row.n << ": brute=" << row.brute << " scheme=" << row.scheme
                  << " MISMATCH\n";
    }
    std::cout << (report.all_match ? "all counts match\n" : "counts differ\n");
    return report.all_match ? 0 : kExitError;
  }

  if (triage_cmd->parsed()) {
    const enumscheme::Basis basis = enumscheme::Basis::parse(basis_text);
    const auto verdict = enumscheme::run_triage(basis, sb_max, simple_cap);
    std::cout << enumscheme::triage_table(verdict) << "\n"
              << enumscheme::triage_to_json(verdict).dump() << "\n";
    return 0;
  }

  return kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}
