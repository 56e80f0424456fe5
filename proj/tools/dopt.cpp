#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dopt/corpus.hpp"
#include "dopt/design_matrix.hpp"
#include "dopt/params.hpp"
#include "dopt/sds.hpp"
#include "dopt/sds_io.hpp"
#include "dopt/search.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

void print_param_row(const dopt::ParameterSet& p) {
  auto xy = dopt::params_to_pair(p);
  auto sq = dopt::feasible_order(p.v());
  std::cout << p.to_string() << "  x=" << xy.x << " y=" << xy.y << "  2v-1="
            << sq->a << "^2+" << sq->b << "^2\n";
}

int run_params(int max_v, int single_v, bool show_infeasible) {
  if ((max_v > 0) == (single_v > 0)) {
    std::cerr << "params: give exactly one of --max-v and --v\n";
    return kExitUsage;
  }
  if (single_v > 0) {
    if (single_v % 2 == 0) {
      std::cerr << "params: order must be odd, got " << single_v << "\n";
      return kExitUsage;
    }
    if (!dopt::is_feasible_order(single_v)) {
      std::cout << "infeasible: " << 2 * single_v - 1
                << " not a sum of two squares\n";
      return kExitOk;
    }
    for (const auto& p : dopt::enumerate_params(single_v))
      if (p.v() == single_v) print_param_row(p);
    return kExitOk;
  }
  for (const auto& p : dopt::enumerate_params(max_v)) print_param_row(p);
  if (show_infeasible)
    for (int v : dopt::infeasible_orders(max_v))
      std::cout << "v=" << v << " infeasible: " << 2 * v - 1
                << " not a sum of two squares\n";
  return kExitOk;
}

// One report line per record; the first failing check wins.
bool report_record(const std::string& loc, const dopt::SdsRecord& rec) {
  const dopt::Sds& s = rec.sds;
  dopt::Verdict verdict = dopt::verify_sds(s);
  if (verdict) verdict = dopt::verify_doptimal(s);
  if (verdict) {
    try {
      verdict = dopt::verify_gram(dopt::build_design(s));
    } catch (const std::domain_error& e) {
      verdict = dopt::Verdict::fail("gram", e.what());
    }
  }
  if (verdict) {
    std::cout << "PASS " << loc << " " << s.params.to_string()
              << " checks=sds,doptimal,gram";
    if (!rec.tag.empty()) std::cout << "  # " << rec.tag;
    std::cout << "\n";
    return true;
  }
  std::cout << "FAIL " << loc << " " << s.params.to_string() << " "
            << verdict.check << ": " << verdict.detail << "\n";
  return false;
}

int run_verify(const std::string& file, bool builtin, bool pairwise) {
  if (builtin == !file.empty()) {
    std::cerr << "verify: give a record file or --builtin, not both\n";
    return kExitUsage;
  }
  std::vector<dopt::SdsRecord> records;
  if (builtin) {
    for (const auto& entry : dopt::builtin_corpus())
      records.push_back(dopt::SdsRecord{entry.sds, entry.source});
  } else {
    try {
      records = dopt::load_records(file);
    } catch (const dopt::ParseError& e) {
      std::cerr << file << ":" << e.line_no << ": " << e.what() << "\n";
      return kExitUsage;
    } catch (const std::exception& e) {
      std::cerr << "verify: " << e.what() << "\n";
      return kExitUsage;
    }
  }
  bool all_ok = true;
  for (size_t i = 0; i < records.size(); ++i)
    all_ok &= report_record("record " + std::to_string(i), records[i]);
  if (pairwise) {
    std::map<dopt::ParameterSet, std::vector<size_t>> groups;
    for (size_t i = 0; i < records.size(); ++i)
      groups[records[i].sds.params].push_back(i);
    for (const auto& [params, members] : groups) {
      if (members.size() < 2) continue;
      bool distinct = true;
      for (size_t i = 0; i < members.size() && distinct; ++i)
        for (size_t j = i + 1; j < members.size() && distinct; ++j)
          if (dopt::are_equivalent(records[members[i]].sds,
                                   records[members[j]].sds)) {
            std::cout << "FAIL nonequiv " << params.to_string() << " records "
                      << members[i] << " and " << members[j]
                      << " are equivalent\n";
            distinct = false;
          }
      if (distinct)
        std::cout << "PASS nonequiv " << params.to_string() << " "
                  << members.size() << " records pairwise nonequivalent\n";
      all_ok &= distinct;
    }
  }
  return all_ok ? kExitOk : kExitVerifyFail;
}

int run_search(int v, int r, int s, int lambda, int m, bool exhaustive,
               std::uint64_t limit, std::optional<double> budget, int workers) {
  std::optional<dopt::ParameterSet> params;
  try {
    params = dopt::ParameterSet::doptimal(v, r, s, lambda);
  } catch (const std::domain_error& e) {
    std::cerr << "search: rejected: " << e.what() << "\n";
    return kExitUsage;
  }
  if (exhaustive) {
    std::vector<dopt::Sds> sols;
    try {
      sols = dopt::exhaustive_search(*params);
    } catch (const std::domain_error& e) {
      std::cerr << "search: rejected: " << e.what() << "\n";
      return kExitUsage;
    }
    for (const auto& sol : sols)
      std::cout << dopt::print_record(dopt::SdsRecord{sol, {}}) << "\n";
    std::cerr << "exhausted: " << sols.size() << " solutions\n";
    return kExitOk;
  }
  dopt::SearchConfig cfg{*params, m};
  cfg.max_solutions = limit;
  cfg.budget_seconds = budget;
  cfg.workers = workers;
  dopt::SearchReport report;
  try {
    report = dopt::search_driver(cfg);
  } catch (const std::domain_error& e) {
    std::cerr << "search: rejected: " << e.what() << "\n";
    return kExitUsage;
  }
  for (const auto& sol : report.solutions)
    std::cout << dopt::print_record(dopt::SdsRecord{sol, {}}) << "\n";
  std::cerr << report.to_string();
  return kExitOk;
}

int run_construct(const std::string& input, const std::string& output) {
  std::vector<dopt::SdsRecord> records;
  try {
    records = dopt::load_records(input);
  } catch (const dopt::ParseError& e) {
    std::cerr << input << ":" << e.line_no << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "construct: " << e.what() << "\n";
    return kExitUsage;
  }
  std::string text;
  for (size_t i = 0; i < records.size(); ++i) {
    dopt::DesignMatrix design = [&] {
      try {
        return dopt::build_design(records[i].sds);
      } catch (const std::domain_error& e) {
        std::cerr << "construct: record " << i << ": " << e.what() << "\n";
        std::exit(kExitUsage);
      }
    }();
    dopt::Verdict verdict = dopt::verify_gram(design);
    if (!verdict) {
      std::cerr << "FAIL gram record " << i << " "
                << records[i].sds.params.to_string() << ": " << verdict.detail
                << "\n";
      return kExitVerifyFail;
    }
    std::cerr << "PASS gram record " << i << " "
              << records[i].sds.params.to_string() << "\n";
    text += dopt::print_matrix(design.mat);
  }
  std::ofstream out(output);
  if (!out || !(out << text)) {
    std::cerr << "construct: cannot write " << output << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

int run_det(const std::string& input) {
  std::vector<dopt::SignMatrix> mats;
  try {
    mats = dopt::load_matrices(input);
  } catch (const dopt::ParseError& e) {
    std::cerr << input << ":" << e.line_no << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "det: " << e.what() << "\n";
    return kExitUsage;
  }
  bool all_attained = true;
  for (const auto& m : mats) {
    if (m.order() % 2 != 0 || (m.order() / 2) % 2 == 0) {
      std::cerr << "det: order " << m.order()
                << " is not 2v with v odd\n";
      return kExitUsage;
    }
    mpz_class det;
    try {
      det = dopt::exact_determinant(m);
    } catch (const std::domain_error& e) {
      std::cerr << "det: " << e.what() << "\n";
      return kExitUsage;
    }
    mpz_class bound = dopt::bound_value(m.order() / 2);
    const bool attained = abs(det) == bound;
    std::cout << "order " << m.order() << ": |det| = " << abs(det)
              << ", bound = " << bound << ", "
              << (attained ? "attained" : "not attained") << "\n";
    all_attained &= attained;
  }
  return all_attained ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"D-optimal two-circulant matrices via supplementary "
               "difference sets"};
  app.require_subcommand(1);

  auto* cmd_params = app.add_subcommand(
      "params", "List feasible parameter sets and excluded orders");
  int max_v = 0, single_v = 0;
  bool show_infeasible = false;
  cmd_params->add_option("--max-v", max_v, "List all sets with v up to this");
  cmd_params->add_option("--v", single_v, "List the sets for one order");
  cmd_params->add_flag("--infeasible", show_infeasible,
                       "Also list excluded orders (with --max-v)");

  auto* cmd_verify =
      app.add_subcommand("verify", "Check SDS records and their designs");
  std::string verify_file;
  bool builtin = false, pairwise = false;
  cmd_verify->add_option("file", verify_file, "SDS record file");
  cmd_verify->add_flag("--builtin", builtin, "Verify the embedded corpus");
  cmd_verify->add_flag("--pairwise-nonequiv", pairwise,
                       "Also check canonical-form distinctness per "
                       "parameter set");

  auto* cmd_search = app.add_subcommand("search", "Search for SDS pairs");
  int v = 0, r = 0, s = 0, lambda = 0, m = 0, workers = 1;
  std::uint64_t limit = 0;
  double budget = -1;
  bool exhaustive = false;
  cmd_search->add_option("--v", v, "Order")->required();
  cmd_search->add_option("--r", r, "First block size")->required();
  cmd_search->add_option("--s", s, "Second block size")->required();
  cmd_search->add_option("--lambda", lambda, "Difference multiplicity")
      ->required();
  cmd_search->add_option("--m", m, "Compression factor (v = m*d)");
  cmd_search->add_flag("--exhaustive", exhaustive,
                       "Small-order direct search instead of compression");
  cmd_search->add_option("--limit", limit, "Stop after this many solutions");
  cmd_search->add_option("--budget-seconds", budget, "Wall-clock budget");
  cmd_search->add_option("--workers", workers, "Lift worker threads");

  auto* cmd_construct = app.add_subcommand(
      "construct", "Build and Gram-verify designs from SDS records");
  std::string construct_in, construct_out;
  cmd_construct->add_option("--input", construct_in, "SDS record file")
      ->required();
  cmd_construct->add_option("--output", construct_out, "Matrix file")
      ->required();

  auto* cmd_det =
      app.add_subcommand("det", "Exact determinants against the bound");
  std::string det_in;
  cmd_det->add_option("--input", det_in, "Matrix file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (app.got_subcommand(cmd_params))
    return run_params(max_v, single_v, show_infeasible);
  if (app.got_subcommand(cmd_verify))
    return run_verify(verify_file, builtin, pairwise);
  if (app.got_subcommand(cmd_search))
    return run_search(v, r, s, lambda, m, exhaustive, limit,
                      budget < 0 ? std::nullopt
                                 : std::optional<double>(budget),
                      workers);
  if (app.got_subcommand(cmd_construct))
    return run_construct(construct_in, construct_out);
  if (app.got_subcommand(cmd_det)) return run_det(det_in);
  return kExitUsage;
}
