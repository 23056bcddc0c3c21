// Command-line front end: build, table1, search, verify, trees.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "midlayer/analysis.hpp"
#include "midlayer/construct.hpp"
#include "midlayer/io.hpp"
#include "midlayer/search.hpp"
#include "midlayer/suites.hpp"
#include "midlayer/trees.hpp"

namespace {

using namespace midlayer;

enum Exit : int { kOk = 0, kVerifyFailed = 1, kParse = 2, kInvariant = 3, kIo = 4 };

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Output goes to stdout unless a path is given.
class Output {
 public:
  Output(const std::string& path, bool append) {
    if (path.empty() || path == "-") return;
    file_ = std::make_unique<std::ofstream>(path, append ? std::ios::app : std::ios::trunc);
    if (!*file_) throw IoError("cannot open " + path + " for writing");
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }
  void line(const std::string& text) {
    stream() << text << '\n';
    if (!stream()) throw IoError("write failed");
  }
  void flush() {
    stream().flush();
    if (!stream()) throw IoError("write failed");
  }

 private:
  std::unique_ptr<std::ofstream> file_;
};

int cmd_build(const std::string& alpha_text, const std::string& out_path, bool full) {
  const ParameterSequence seq = ParameterSequence::parse(alpha_text);
  const TwoFactor tf = build(seq, seq.target_n());
  const VerificationReport report = verify_two_factor(tf);
  Output out(out_path, false);
  out.line(full ? two_factor_json(tf) : spectrum_json(spectrum(tf), seq));
  out.flush();
  for (const auto& f : report.failures) std::cerr << "verification: " << f << '\n';
  return report.ok() ? kOk : kVerifyFailed;
}

int cmd_table1(int n_max, bool long_run, int workers) {
  if (n_max < 1 || n_max > 7) throw std::invalid_argument("table1 supports n = 1..7");
  if (n_max == 7 && !long_run) throw std::invalid_argument("n = 7 evaluates 2^21 sequences; pass --long to run it");
  bool ok = true;
  std::printf("%3s %12s %12s  %s\n", "n", "one_cycle", "two_cycles", "expected");
  for (int n = 1; n <= n_max; ++n) {
    const Table1Row row = table1_row(n, workers);
    const auto want = expected_table1(n);
    const bool match = want && *want == row;
    ok = ok && match;
    std::printf("%3d %12llu %12llu  %s\n", n, static_cast<unsigned long long>(row.one_cycle),
                static_cast<unsigned long long>(row.two_cycles), match ? "ok" : "MISMATCH");
    std::fflush(stdout);
  }
  return ok ? kOk : kVerifyFailed;
}

int cmd_search(SearchJob job, const std::string& out_path) {
  Output out(out_path, true);
  const SearchSummary s = run_search(job, [&](const SearchResultRecord& r) { out.line(r.to_json()); });
  out.flush();
  std::cerr << "evaluated " << s.evaluated << " sequences, " << s.hits << " records";
  if (s.stopped_by_limit) std::cerr << " (limit reached)";
  std::cerr << "\ncycle counts:";
  for (const auto& [c, k] : s.histogram) std::cerr << ' ' << c << ':' << k;
  std::cerr << "\nnext checkpoint: " << s.next_checkpoint << '\n';
  return kOk;
}

int cmd_verify(const std::string& suite, int n, std::uint64_t budget, std::uint64_t seed) {
  SuiteReport r;
  if (suite == "lemmas") {
    r = lemmas_suite(n, budget, seed, n);
  } else if (suite == "trees") {
    r = trees_suite(n, 2 * n);
  } else if (suite == "parity") {
    r = parity_suite(n, budget, seed);
  } else if (suite == "tau") {
    r = tau_suite(n, budget, seed);
  } else if (suite == "distinct") {
    r = distinct_suite(n, budget, seed);
  } else if (suite == "lattice") {
    r = lattice_suite(2 * n, 2 * n);
  } else if (suite == "divisibility") {
    r = divisibility_suite(n, budget, seed);
  } else if (suite == "all-zero") {
    r = all_zero_suite(n);
  } else {
    throw ParseError("unknown verify suite '" + suite + "'");
  }
  for (const auto& note : r.notes) std::cout << note << '\n';
  for (const auto& f : r.failures) std::cout << "FAIL: " << f << '\n';
  std::cout << r.name << ": " << (r.passed() ? "pass" : "FAIL") << " (" << r.checks << " checks)\n";
  return r.passed() ? kOk : kVerifyFailed;
}

int cmd_trees(int n) {
  if (n < 1 || n > kMaxCatalanIndex) throw std::invalid_argument("trees supports n = 1..30");
  const std::uint64_t c = catalan(n), plane = count_plane_trees(n), asym = count_asymmetric(n);
  std::cout << "catalan " << c << "\nplane " << plane << "\nasymmetric " << asym << '\n';
  if (n > 8) return kOk;
  const TreeCounts brute = brute_force_tree_counts(n);
  const bool ok = brute.ordered == c && brute.plane == plane && brute.asymmetric == asym;
  std::cout << "brute force " << brute.ordered << ' ' << brute.plane << ' ' << brute.asymmetric << ' '
            << (ok ? "agrees" : "DISAGREES") << '\n';
  return ok ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parametrized 2-factors in the middle layer of the odd-dimensional cube"};
  app.require_subcommand(1);

  std::string alpha_text, out_path;
  bool full = false;
  auto* build_cmd = app.add_subcommand("build", "Build one 2-factor and print its spectrum or cycles");
  build_cmd->add_option("--alpha", alpha_text, "Parameter sequence, e.g. \",0,10\"; empty for n = 1")
      ->required()
      ->expected(0, 1);
  build_cmd->add_option("--out", out_path, "Output file (default stdout)");
  build_cmd->add_flag("--full", full, "Emit every cycle instead of the spectrum");

  int n = 1;
  bool long_run = false;
  int workers = 1;
  auto* table_cmd = app.add_subcommand("table1", "Count sequences giving 1 and 2 cycles");
  table_cmd->add_option("--n", n, "Largest n (1..7)")->default_val(6);
  table_cmd->add_flag("--long", long_run, "Allow n = 7");
  table_cmd->add_option("--workers", workers, "Worker threads")->default_val(1);

  std::string mode = "exhaustive";
  std::vector<std::uint64_t> targets;
  std::uint64_t limit = 0, checkpoint = 0, budget = 1000;
  std::uint64_t seed = 0;
  auto* search_cmd = app.add_subcommand("search", "Search the parameter space and append JSONL records");
  search_cmd->add_option("--n", n, "Target level")->required();
  search_cmd->add_option("--mode", mode, "exhaustive, random or targeted")->default_val("exhaustive");
  search_cmd->add_option("--target", targets, "Cycle counts to record, e.g. 1,2")->delimiter(',');
  search_cmd->add_option("--limit", limit, "Stop after this many records (0 = no limit)");
  auto* seed_opt = search_cmd->add_option("--seed", seed, "Random seed (random/targeted)");
  search_cmd->add_option("--workers", workers, "Worker threads")->default_val(1);
  search_cmd->add_option("--checkpoint", checkpoint, "First sequence index or sample number");
  search_cmd->add_option("--budget", budget, "Samples for random/targeted mode")->default_val(1000);
  search_cmd->add_option("--out", out_path, "Results file, appended (default stdout)");

  std::string suite;
  std::uint64_t verify_budget = 1000, verify_seed = 1;
  auto* verify_cmd = app.add_subcommand("verify", "Run a property suite");
  verify_cmd->add_option("suite,--mode", suite,
                         "lemmas, trees, parity, tau, distinct, lattice, divisibility or all-zero")
      ->required();
  verify_cmd->add_option("--n", n, "Level")->default_val(4);
  verify_cmd->add_option("--budget", verify_budget, "Sample budget")->default_val(1000);
  verify_cmd->add_option("--seed", verify_seed, "Random seed")->default_val(1);

  auto* trees_cmd = app.add_subcommand("trees", "Tree counts with a brute-force cross-check");
  trees_cmd->add_option("--n", n, "Number of edges")->default_val(4);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (*build_cmd) return cmd_build(alpha_text, out_path, full);
    if (*table_cmd) return cmd_table1(n, long_run, workers);
    if (*search_cmd) {
      SearchJob job;
      job.n = n;
      job.mode = parse_search_mode(mode);
      job.targets = std::set<std::uint64_t>(targets.begin(), targets.end());
      job.limit = limit;
      if (*seed_opt) job.seed = seed;
      job.workers = workers;
      job.checkpoint = checkpoint;
      job.budget = budget;
      return cmd_search(job, out_path);
    }
    if (*verify_cmd) return cmd_verify(suite, n, verify_budget, verify_seed);
    if (*trees_cmd) return cmd_trees(n);
  } catch (const InvariantViolation& e) {
    std::cerr << "internal invariant violated: " << e.what() << '\n';
    return kInvariant;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kIo;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return kParse;
  } catch (const std::out_of_range& e) {
    std::cerr << "out of range: " << e.what() << '\n';
    return kParse;
  }
  return kOk;
}
