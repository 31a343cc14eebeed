// Command-line front end: solve linear systems over lattice-ordered
// semirings, check candidate solutions, and cross-check the solver against
// exhaustive enumeration on finite carriers.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "latlin/latlin.hpp"

namespace {

// Exit codes shared with shell-based harnesses.
constexpr int kExitOk = 0;
constexpr int kExitDisagree = 1;
constexpr int kExitParse = 2;
constexpr int kExitDimension = 3;
constexpr int kExitBudget = 4;
constexpr int kExitMismatch = 5;
constexpr int kExitNotFinite = 6;

int exit_code_for(const latlin::Error& e) {
  switch (e.code()) {
    case latlin::ErrorCode::ParseError:
      return kExitParse;
    case latlin::ErrorCode::DimensionMismatch:
    case latlin::ErrorCode::AlgebraMismatch:
    case latlin::ErrorCode::NotTotallyOrdered:
    case latlin::ErrorCode::InvalidArgument:
      return kExitDimension;
    case latlin::ErrorCode::TermBudgetExceeded:
      return kExitBudget;
    case latlin::ErrorCode::CarrierNotFinite:
    case latlin::ErrorCode::EnumerationTooLarge:
      return kExitNotFinite;
  }
  return kExitDimension;
}

struct CommonOptions {
  std::string input;
  std::optional<std::string> algebra;
  std::uint64_t budget = 1'000'000;
  bool raw = false;
  bool deterministic = false;
  int threads = 1;
};

void add_common(CLI::App* cmd, CommonOptions& opts, bool with_solver_flags = true) {
  cmd->add_option("input", opts.input, "system file (JSON)")->required();
  cmd->add_option("--algebra", [&opts](const std::vector<std::string>& v) {
        opts.algebra = v.back();
        return true;
      },
      "override the file's algebra name");
  if (with_solver_flags) {
    cmd->add_option("--budget", opts.budget, "cap on the pre-pruning choice count");
    cmd->add_flag("--raw", opts.raw, "keep the raw union (skip canonicalization)");
    cmd->add_flag("--deterministic", opts.deterministic, "suppress the statistics block");
    cmd->add_option("--threads", opts.threads, "parallel search width (output is identical)");
  }
}

latlin::SolveOptions solve_options(const CommonOptions& opts) {
  latlin::SolveOptions so;
  so.term_budget = opts.budget;
  so.canonical = !opts.raw;
  so.threads = opts.threads;
  return so;
}

nlohmann::json vector_or_null(const std::optional<latlin::Vector>& v) {
  if (!v) return nullptr;
  return latlin::vector_to_json(*v);
}

int run_solve(const CommonOptions& opts) {
  latlin::SystemFile sys = latlin::load_system(opts.input, opts.algebra);
  latlin::SolveStats stats;
  auto started = std::chrono::steady_clock::now();
  latlin::SolutionRegion region = latlin::solve(sys.A, sys.w, solve_options(opts), &stats);
  auto greatest = latlin::greatest_solution(sys.A, sys.w);
  double wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();

  nlohmann::json report{{"system", latlin::system_to_json(sys)},
                        {"canonical", !opts.raw},
                        {"members", latlin::region_members_to_json(region)},
                        {"greatest", vector_or_null(greatest)}};
  if (!opts.deterministic) {
    report["stats"] = nlohmann::json{{"choices", stats.choice_total},
                                     {"explored", stats.explored},
                                     {"pruned", stats.pruned},
                                     {"wall_ms", wall_ms}};
  }
  std::cout << report.dump(2) << "\n";
  return kExitOk;
}

int run_check(const CommonOptions& opts, const std::string& vector_literal) {
  latlin::SystemFile sys = latlin::load_system(opts.input, opts.algebra);
  nlohmann::json jv;
  try {
    jv = nlohmann::json::parse(vector_literal);
  } catch (const nlohmann::json::exception& e) {
    throw latlin::Error(latlin::ErrorCode::ParseError, std::string("invalid vector literal: ") + e.what());
  }
  latlin::Vector v = latlin::vector_from_json(sys.alg, jv);
  if (v.size() != sys.A.cols()) {
    throw latlin::Error(latlin::ErrorCode::DimensionMismatch,
                        "vector length " + std::to_string(v.size()) + " does not match " +
                            std::to_string(sys.A.cols()) + " columns");
  }

  bool satisfies = latlin::verify(sys.A, sys.w, v);
  latlin::SolutionRegion region = latlin::solve(sys.A, sys.w, solve_options(opts));
  bool contained = region.contains(v);

  nlohmann::json report{{"satisfies_system", satisfies},
                        {"in_region", contained},
                        {"agree", satisfies == contained}};
  std::cout << report.dump(2) << "\n";
  return satisfies == contained ? kExitOk : kExitDisagree;
}

int run_oracle(const CommonOptions& opts, std::size_t limit) {
  latlin::SystemFile sys = latlin::load_system(opts.input, opts.algebra);
  latlin::SolutionRegion region = latlin::solve(sys.A, sys.w, solve_options(opts));
  std::vector<latlin::Vector> solutions = latlin::enumerate_solutions(sys.A, sys.w, limit);

  // Walk the full carrier grid once; the region and the enumeration must
  // classify every vector identically.
  const latlin::Algebra alg = sys.alg;
  const std::size_t carrier = alg.carrier_size();
  const int n = sys.A.cols();
  std::vector<std::size_t> odo(static_cast<std::size_t>(n), 0);
  latlin::Vector v = latlin::Vector::filled(alg, n, alg.carrier_at(0));
  std::size_t total = 1;
  for (int j = 0; j < n; ++j) total *= carrier;
  for (std::size_t step = 0; step < total; ++step) {
    for (int j = 1; j <= n; ++j) v.set(j, alg.carrier_at(odo[static_cast<std::size_t>(j) - 1]));
    bool sat = latlin::verify(sys.A, sys.w, v);
    bool in_region = region.contains(v);
    if (sat != in_region) {
      nlohmann::json report{{"agree", false},
                            {"counterexample", latlin::vector_to_json(v)},
                            {"satisfies_system", sat},
                            {"in_region", in_region}};
      std::cout << report.dump(2) << "\n";
      return kExitMismatch;
    }
    for (int j = n - 1; j >= 0; --j) {
      if (++odo[static_cast<std::size_t>(j)] < carrier) break;
      odo[static_cast<std::size_t>(j)] = 0;
    }
  }

  nlohmann::json report{{"agree", true},
                        {"solutions", solutions.size()},
                        {"members", region.members.size()}};
  std::cout << report.dump(2) << "\n";
  return kExitOk;
}

int run_bench(const CommonOptions& opts, int repeat) {
  latlin::SystemFile sys = latlin::load_system(opts.input, opts.algebra);
  latlin::SolveStats stats;
  double best_ms = 0;
  double total_ms = 0;
  std::size_t members = 0;
  for (int r = 0; r < repeat; ++r) {
    auto started = std::chrono::steady_clock::now();
    latlin::SolutionRegion region = latlin::solve(sys.A, sys.w, solve_options(opts), &stats);
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
    members = region.members.size();
    total_ms += ms;
    if (r == 0 || ms < best_ms) best_ms = ms;
  }
  nlohmann::json report{{"repeat", repeat},
                        {"best_ms", best_ms},
                        {"mean_ms", total_ms / repeat},
                        {"members", members},
                        {"stats", {{"choices", stats.choice_total}, {"explored", stats.explored}, {"pruned", stats.pruned}}}};
  std::cout << report.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact solution spaces of linear systems over lattice-ordered semirings"};
  app.require_subcommand(1);

  CommonOptions solve_opts;
  CLI::App* solve_cmd = app.add_subcommand("solve", "solve A v = w and print the region");
  add_common(solve_cmd, solve_opts);

  CommonOptions check_opts;
  std::string vector_literal;
  CLI::App* check_cmd = app.add_subcommand("check", "test one vector against the system and the region");
  add_common(check_cmd, check_opts);
  check_cmd->add_option("vector", vector_literal, "candidate vector as a JSON array of literals")->required();

  CommonOptions oracle_opts;
  std::size_t oracle_limit = 1'000'000;
  CLI::App* oracle_cmd = app.add_subcommand("oracle", "compare the region against exhaustive enumeration");
  add_common(oracle_cmd, oracle_opts);
  oracle_cmd->add_option("--limit", oracle_limit, "cap on carrier^n for the enumeration");

  CommonOptions bench_opts;
  int repeat = 5;
  CLI::App* bench_cmd = app.add_subcommand("bench", "time repeated solves of one system");
  add_common(bench_cmd, bench_opts);
  bench_cmd->add_option("--repeat", repeat, "number of solve runs")->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve_cmd->parsed()) return run_solve(solve_opts);
    if (check_cmd->parsed()) return run_check(check_opts, vector_literal);
    if (oracle_cmd->parsed()) return run_oracle(oracle_opts, oracle_limit);
    if (bench_cmd->parsed()) return run_bench(bench_opts, repeat);
  } catch (const latlin::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitOk;
}
