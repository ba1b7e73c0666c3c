#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "assr/assr.hpp"
#include "assr/report.hpp"

namespace {

enum ExitCode : int {
  exit_ok = 0,
  exit_input = 2,
  exit_budget = 3,
  exit_rank = 4,
  exit_not_staircase = 5,
};

struct CommonFlags {
  std::string file;
  bool json = false;
  std::optional<std::uint64_t> budget;
};

assr::Budget resolve_budget(const std::optional<std::uint64_t>& flag) {
  if (flag) return {*flag};
  if (const char* env = std::getenv("ASSR_BUDGET"); env && *env) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used == std::string(env).size()) return {v};
    } catch (const std::exception&) {
    }
    throw std::invalid_argument(std::string("ASSR_BUDGET is not a non-negative integer: '") + env + "'");
  }
  return {};
}

void add_common(CLI::App* cmd, CommonFlags& flags, bool with_budget = true) {
  cmd->add_option("file", flags.file, "matrix file")->required();
  cmd->add_flag("--json", flags.json, "emit a JSON report");
  if (with_budget) cmd->add_option("--budget", flags.budget, "maximum number of minors per enumeration");
}

template <typename Report>
void emit(const Report& report, bool as_json) {
  std::cout << (as_json ? assr::to_json_text(report) : assr::render_text(report));
}

assr::IndexSequence parse_index_list(const std::string& text, std::size_t bound) {
  std::vector<std::size_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad index list '" + text + "'");
    out.push_back(std::stoul(item));
  }
  return assr::IndexSequence(std::move(out), bound);
}

assr::GenKind gen_kind(const std::string& name) {
  if (name == "tp") return assr::GenKind::tp_bidiagonal;
  if (name == "staircase") return assr::GenKind::staircase_random;
  if (name == "sign_transform") return assr::GenKind::sign_transform;
  throw std::invalid_argument("unknown generator kind '" + name + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Staircase, sign regularity and QR analysis of maximal-rank matrices"};
  app.require_subcommand(1);

  CommonFlags pattern_flags;
  auto* pattern = app.add_subcommand("pattern", "staircase type and zero pattern (I, J, Î, Ĵ)");
  add_common(pattern, pattern_flags, false);

  CommonFlags classify_flags;
  bool full = false, reduced = false;
  auto* classify = app.add_subcommand("classify", "SR / TP / ASSR classification");
  add_common(classify, classify_flags);
  auto* full_flag = classify->add_flag("--full", full, "enumerate every nontrivial minor");
  classify->add_flag("--reduced", reduced, "consecutive minors only (default)")->excludes(full_flag);

  CommonFlags qr_flags;
  double tol = 1e-10;
  bool check_tp = false, check_boundary = false;
  auto* qr = app.add_subcommand("qr", "modified Gram-Schmidt QR factorization");
  add_common(qr, qr_flags);
  qr->add_option("--tol", tol, "verification tolerance")->capture_default_str();
  qr->add_flag("--check-tp", check_tp, "check that every minor of R is nonnegative");
  qr->add_flag("--check-boundary", check_boundary, "check boundary minor signs of Q");

  CommonFlags minors_flags;
  std::size_t order = 1;
  assr::MinorsOptions minors_options;
  auto* minors = app.add_subcommand("minors", "list order-K minors with their flags");
  add_common(minors, minors_flags);
  minors->add_option("--order", order, "minor order K")->required();
  minors->add_flag("--consecutive", minors_options.consecutive, "consecutive rows and columns only");
  minors->add_flag("--nontrivial-only", minors_options.nontrivial_only, "skip trivial submatrices");
  minors->add_flag("--boundary-only", minors_options.boundary_only, "row or column boundary submatrices only");

  std::string kind = "tp", name, out_path;
  std::size_t rows = 3, cols = 3;
  std::uint64_t seed = 0;
  auto* gen = app.add_subcommand("gen", "write a generated or fixture matrix file");
  gen->add_option("--kind", kind, "fixture | tp | staircase | sign_transform")->capture_default_str();
  gen->add_option("--name", name, "fixture name");
  gen->add_option("--rows", rows, "row count")->capture_default_str();
  gen->add_option("--cols", cols, "column count")->capture_default_str();
  gen->add_option("--seed", seed, "generator seed")->capture_default_str();
  gen->add_option("--out", out_path, "output file (default: stdout)");

  CommonFlags cb_flags;
  std::string alpha_text, beta_text;
  auto* cb = app.add_subcommand("cauchy-binet", "Cauchy-Binet residual of one minor through A = QR");
  add_common(cb, cb_flags);
  cb->add_option("--alpha", alpha_text, "row indices, e.g. 1,2")->required();
  cb->add_option("--beta", beta_text, "column indices, e.g. 1,3")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_input;
  }

  try {
    if (pattern->parsed()) {
      emit(assr::make_pattern_report(assr::read_matrix_file(pattern_flags.file)), pattern_flags.json);
    } else if (classify->parsed()) {
      const assr::Budget budget = resolve_budget(classify_flags.budget);
      const auto a = assr::read_matrix_file(classify_flags.file);
      emit(assr::classify(a, full ? assr::Method::full : assr::Method::reduced, budget), classify_flags.json);
    } else if (qr->parsed()) {
      const assr::Budget budget = resolve_budget(qr_flags.budget);
      const auto a = assr::read_matrix_file(qr_flags.file);
      emit(assr::make_qr_report(a, {tol, check_tp, check_boundary}, budget), qr_flags.json);
    } else if (minors->parsed()) {
      const assr::Budget budget = resolve_budget(minors_flags.budget);
      const auto a = assr::read_matrix_file(minors_flags.file);
      emit(assr::make_minors_report(a, order, minors_options, budget), minors_flags.json);
    } else if (gen->parsed()) {
      assr::RationalMatrix a;
      if (kind == "fixture") {
        a = assr::fixture(name);
      } else {
        a = assr::generate({rows, cols, seed, gen_kind(kind)});
      }
      const std::string text = assr::format_matrix(a);
      if (out_path.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::invalid_argument("cannot write '" + out_path + "'");
        out << text;
      }
    } else if (cb->parsed()) {
      const assr::Budget budget = resolve_budget(cb_flags.budget);
      const auto a = assr::read_matrix_file(cb_flags.file);
      const assr::MinorQuery q(parse_index_list(alpha_text, a.rows()), parse_index_list(beta_text, a.cols()));
      emit(assr::make_cauchy_binet_report(a, q, 1e-9, budget), cb_flags.json);
    }
  } catch (const assr::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input;
  } catch (const assr::budget_exceeded_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_budget;
  } catch (const assr::rank_deficiency_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_rank;
  } catch (const assr::not_staircase_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_not_staircase;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_ok;
}
