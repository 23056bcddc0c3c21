#ifndef MIDLAYER_SUITES_HPP
#define MIDLAYER_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace midlayer {

/// Outcome of one property suite: informational notes plus every failed check.
struct SuiteReport {
  std::string name;
  std::uint64_t checks = 0;
  std::vector<std::string> notes;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
  void expect(bool ok, const std::string& what);
  void note(const std::string& text) { notes.push_back(text); }
};

/// D-set recursions for lengths up to recursion_len, Dyck invariance and
/// mirror pivots of f_alpha up to invariance_len, recomposition of every
/// classified path up to recursion_len, Catalan cardinalities up to 2*10.
SuiteReport lattice_suite(int recursion_len = 16, int invariance_len = 12);

struct TreeCounts {
  std::uint64_t ordered = 0;
  std::uint64_t plane = 0;
  std::uint64_t asymmetric = 0;
};

/// Counts by enumerating every ordered rooted tree with `edges` edges and
/// grouping them into rotation classes.
TreeCounts brute_force_tree_counts(int edges);

/// psi bijectivity and active depth for lengths <= psi_len; rotation-class
/// partition and closed-form counts for 1..max_edges edges; the three
/// integer sequences through index 10.
SuiteReport trees_suite(int max_edges = 8, int psi_len = 16);

/// Construction lemmas for levels 1..n_max: coverage conditions, F/S/L
/// images, F/L invariance, path-length and FS/SL relations, alpha
/// independence of path lengths. Prefixes are exhaustive where at most
/// `samples` exist, otherwise `samples` random prefixes. The all-zero SL
/// relation is checked for levels 1..all_zero_max.
SuiteReport lemmas_suite(int n_max, std::uint64_t samples = 2048, std::uint64_t seed = 1, int all_zero_max = 0);

/// Observed cycle-count parity against the formula at level n; exhaustive
/// when the space has at most `budget` sequences.
SuiteReport parity_suite(int n, std::uint64_t budget = 1000, std::uint64_t seed = 1);

/// tau_{rev(alpha)} maps build(alpha) onto build(alpha with reversed last
/// vector), levels 1..n_max, exhaustive up to `budget` sequences per level.
SuiteReport tau_suite(int n_max, std::uint64_t budget = 4096, std::uint64_t seed = 1);

/// Pairwise distinct 2-factors at level n: all sequences when at most
/// `budget` exist, otherwise `budget` random pairs.
SuiteReport distinct_suite(int n, std::uint64_t budget = 2000, std::uint64_t seed = 1);

/// Explicit assembly of `samples` random sequences at level n; full 2-factor
/// verification plus length = (4n+2) * Dyck vertices per cycle.
SuiteReport divisibility_suite(int n, std::uint64_t samples = 1000, std::uint64_t seed = 1);

/// All-zero sequences for levels 1..n_max: cycle count, extreme lengths and
/// the cycle/plane-tree correspondence.
SuiteReport all_zero_suite(int n_max);

}  // namespace midlayer

#endif  // MIDLAYER_SUITES_HPP
