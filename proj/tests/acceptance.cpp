// Acceptance run: one PASS/FAIL line per criterion. Exit status is the number
// of failed criteria (capped at 1). --skip-long omits the n = 7 table row.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "midlayer/analysis.hpp"
#include "midlayer/construct.hpp"
#include "midlayer/search.hpp"
#include "midlayer/suites.hpp"

using namespace midlayer;

namespace {

// Every criterion is an exact integer comparison.
constexpr std::uint64_t kTolerance = 0;

bool within(std::uint64_t got, std::uint64_t want) {
  const std::uint64_t diff = got > want ? got - want : want - got;
  return diff <= kTolerance;
}

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void report(const char* id, const char* title, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!o.ok) ++failures;
  std::printf("%s %-6s %-34s %7.2fs  %s\n", o.ok ? "PASS" : "FAIL", id, title, secs, o.detail.c_str());
  std::fflush(stdout);
}

void skip(const char* id, const char* title, const char* why) {
  std::printf("SKIP %-6s %-34s %8s  %s\n", id, title, "", why);
  std::fflush(stdout);
}

Outcome from_suites(const std::vector<SuiteReport>& reports) {
  Outcome o;
  std::uint64_t checks = 0;
  for (const auto& r : reports) {
    checks += r.checks;
    if (!r.passed()) {
      o.ok = false;
      o.detail += r.name + ": " + r.failures.front() + "; ";
    }
  }
  if (o.ok) o.detail = std::to_string(checks) + " checks";
  return o;
}

struct Row {
  int n;
  std::uint64_t one, two;
};

const Row kTable[] = {{1, 1, 0}, {2, 1, 1}, {3, 2, 3}, {4, 6, 12}, {5, 44, 100}, {6, 614, 1580}, {7, 0, 113438}};

Outcome table_rows(int from, int to) {
  Outcome o;
  std::ostringstream d;
  for (int n = from; n <= to; ++n) {
    const Row& want = kTable[n - 1];
    const Table1Row got = table1_row(n);
    const bool ok = within(got.one_cycle, want.one) && within(got.two_cycles, want.two);
    o.ok = o.ok && ok;
    d << "n=" << n << ":(" << got.one_cycle << "," << got.two_cycles << ")" << (ok ? "" : "!") << ' ';
  }
  o.detail = d.str();
  return o;
}

Outcome all_zero_structure() {
  const std::uint64_t cycles[] = {1, 1, 2, 3, 6, 14, 34, 95, 280};
  const std::uint64_t longest_count[] = {1, 3, 9, 28, 85, 262};
  Outcome o;
  std::ostringstream d;
  for (int n = 1; n <= 9; ++n) {
    const CycleSpectrum s = spectrum(build(ParameterSequence::all_zero(n)));
    const std::uint64_t unit = 4 * static_cast<std::uint64_t>(n) + 2;
    bool ok = within(s.num_cycles(), cycles[n - 1]);
    if (n >= 2) ok = ok && within(s.shortest(), 2 * unit);
    if (n >= 4) {
      ok = ok && within(s.longest(), 2 * n * unit);
      ok = ok && within(s.count_of(s.longest()), longest_count[n - 4]);
    }
    o.ok = o.ok && ok;
    d << s.num_cycles() << (ok ? "" : "!") << (n < 9 ? "," : "");
  }
  o.detail = "cycles " + d.str();
  return o;
}

Outcome targeted_smoke() {
  Outcome o;
  std::ostringstream d;
  for (int n = 8; n <= 10; ++n) {
    SearchJob job;
    job.n = n;
    job.mode = SearchMode::Targeted;
    job.targets = {1, 2};
    job.seed = 1;
    job.budget = 200;
    job.limit = 1;
    std::vector<SearchResultRecord> hits;
    const SearchSummary s = run_search(job, [&](const SearchResultRecord& r) { hits.push_back(r); });
    bool ok = !hits.empty();
    if (ok) {
      const TwoFactor tf = build(hits.front().alpha);
      ok = verify_two_factor(tf).ok() && spectrum(tf) == hits.front().spectrum && tf.cycles.size() <= 2;
    }
    o.ok = o.ok && ok;
    d << "n=" << n << ":" << (hits.empty() ? std::string("none") : std::to_string(hits.front().num_cycles()) + " cycles")
      << " after " << s.evaluated << (ok ? " " : "! ");
  }
  o.detail = d.str();
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  bool skip_long = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--skip-long") == 0) {
      skip_long = true;
    } else {
      std::fprintf(stderr, "usage: %s [--skip-long]\n", argv[0]);
      return 2;
    }
  }

  report("1", "table rows n=1..6", [] { return table_rows(1, 6); });
  if (skip_long) {
    skip("2", "table row n=7", "--skip-long");
  } else {
    report("2", "table row n=7", [] { return table_rows(7, 7); });
  }
  report("3", "all-zero structure n=1..9", all_zero_structure);
  report("4", "divisibility n=3..8 x1000", [] {
    std::vector<SuiteReport> rs;
    for (int n = 3; n <= 8; ++n) rs.push_back(divisibility_suite(n, 1000, 1000 + n));
    return from_suites(rs);
  });
  report("5", "parity n<=6 all, n=7..9 x1000", [] {
    std::vector<SuiteReport> rs;
    for (int n = 1; n <= 6; ++n) rs.push_back(parity_suite(n, ParameterSequence::space_size(n), 1));
    for (int n = 7; n <= 9; ++n) rs.push_back(parity_suite(n, 1000, 2000 + n));
    return from_suites(rs);
  });
  report("6", "distinct 2-factors n<=4", [] {
    std::vector<SuiteReport> rs;
    for (int n = 1; n <= 4; ++n) rs.push_back(distinct_suite(n, ParameterSequence::space_size(n) * 2, 1));
    return from_suites(rs);
  });
  report("7", "tau automorphism n<=5", [] { return from_suites({tau_suite(5, ParameterSequence::space_size(5), 1)}); });
  report("8", "lattice oracle suite", [] { return from_suites({lattice_suite(16, 12)}); });
  report("9", "tree suite", [] { return from_suites({trees_suite(8, 16)}); });
  report("10", "path-structure suite n<=6", [] {
    return from_suites({lemmas_suite(6, ParameterSequence::space_size(5), 1, 8)});
  });
  report("smoke", "targeted search n=8..10", targeted_smoke);

  std::printf("%s\n", failures == 0 ? "all criteria passed" : "some criteria FAILED");
  return failures == 0 ? 0 : 1;
}
