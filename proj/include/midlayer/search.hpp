#ifndef MIDLAYER_SEARCH_HPP
#define MIDLAYER_SEARCH_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "midlayer/analysis.hpp"
#include "midlayer/bitcube.hpp"

namespace midlayer {

enum class SearchMode { Exhaustive, Random, Targeted };

std::string_view to_string(SearchMode mode);
/// Throws ParseError for unknown names.
SearchMode parse_search_mode(std::string_view text);

struct SearchJob {
  int n = 1;
  SearchMode mode = SearchMode::Exhaustive;
  /// Cycle counts worth recording. Empty records every evaluated sequence
  /// (exhaustive/random); targeted mode requires at least one entry.
  std::set<std::uint64_t> targets;
  /// Stop after this many records; 0 means no limit.
  std::uint64_t limit = 0;
  std::optional<std::uint64_t> seed;
  int workers = 1;
  /// Exhaustive: first sequence index to evaluate. Random/targeted: first
  /// sample number.
  std::uint64_t checkpoint = 0;
  /// Random: sequences sampled. Targeted: prefixes sampled (each swept over
  /// every final alpha vector).
  std::uint64_t budget = 1000;
  int exhaustive_bound = 7;

  /// Throws std::invalid_argument describing the first problem.
  void validate() const;
};

struct SearchResultRecord {
  ParameterSequence alpha;
  CycleSpectrum spectrum;
  std::uint64_t wall_ms = 0;
  std::optional<std::uint64_t> seed;

  std::uint64_t num_cycles() const { return spectrum.num_cycles(); }
  /// One JSON object on a single line (no trailing newline).
  std::string to_json() const;
  /// Throws ParseError on malformed lines.
  static SearchResultRecord from_json(std::string_view line);
};

struct SearchSummary {
  std::uint64_t evaluated = 0;
  std::uint64_t hits = 0;
  std::map<std::uint64_t, std::uint64_t> histogram;  // cycle count -> sequences
  /// Checkpoint value that continues where this run stopped.
  std::uint64_t next_checkpoint = 0;
  bool stopped_by_limit = false;
};

using RecordSink = std::function<void(const SearchResultRecord&)>;

/// Runs the job; the sink is called from one thread at a time. Every
/// evaluated sequence has its cycle-count parity checked against
/// predicted_parity (InvariantViolation on mismatch).
SearchSummary run_search(const SearchJob& job, const RecordSink& sink = {});

/// Cycle-count histogram over all 2^(n choose 2) sequences of length n.
std::map<std::uint64_t, std::uint64_t> cycle_count_histogram(int n, int workers = 1);

struct Table1Row {
  int n = 0;
  std::uint64_t one_cycle = 0;
  std::uint64_t two_cycles = 0;

  friend bool operator==(const Table1Row&, const Table1Row&) = default;
};

/// Published counts of sequences giving 1 and 2 cycles, n = 1..7.
std::optional<Table1Row> expected_table1(int n);
Table1Row table1_row(int n, int workers = 1);

}  // namespace midlayer

#endif  // MIDLAYER_SEARCH_HPP
