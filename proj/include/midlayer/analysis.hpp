#ifndef MIDLAYER_ANALYSIS_HPP
#define MIDLAYER_ANALYSIS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "midlayer/construct.hpp"
#include "midlayer/trees.hpp"

namespace midlayer {

/// Multiset of cycle lengths of one 2-factor.
struct CycleSpectrum {
  int n = 0;
  std::map<std::uint64_t, std::uint64_t> counts;  // length -> number of cycles
  /// Per cycle (in TwoFactor order): vertices v∘(0) with phi(v) a Dyck path.
  /// Empty when the spectrum was built from lengths only.
  std::vector<std::uint64_t> dyck_counts;

  std::uint64_t num_cycles() const;
  std::uint64_t total_length() const;
  std::uint64_t shortest() const { return counts.empty() ? 0 : counts.begin()->first; }
  std::uint64_t longest() const { return counts.empty() ? 0 : counts.rbegin()->first; }
  std::uint64_t count_of(std::uint64_t length) const;

  friend bool operator==(const CycleSpectrum& a, const CycleSpectrum& b) {
    return a.n == b.n && a.counts == b.counts;
  }
};

CycleSpectrum spectrum(const TwoFactor& tf);
CycleSpectrum spectrum_from_lengths(int n, const std::vector<std::uint64_t>& lengths);

/// True iff the low 2n bits of v spell a Dyck path of length 2n.
bool is_dyck_vertex(Word v, int n);

struct VerificationReport {
  bool coverage = true;
  bool disjoint = true;
  bool adjacency = true;
  bool divisibility = true;
  std::vector<std::string> failures;

  bool ok() const { return coverage && disjoint && adjacency && divisibility; }
};

VerificationReport verify_two_factor(const TwoFactor& tf);

struct BetaVector {
  std::vector<int> entries;  // entries[i-1] = beta_n(i)

  std::string str() const;
};

bool is_power_of_two(std::uint64_t x);
BetaVector beta(int n);
/// (alpha·beta_n + [n is a power of 2]) mod 2.
int predicted_parity(const AlphaVector& alpha, int n);

/// Plane tree whose rotation class the Dyck vertices of an all-zero cycle form.
/// Throws InvariantViolation when they are not exactly one rotation class.
PlaneTreeCode cycle_tree_class(const std::vector<Word>& cycle, int n);

using EdgeSet = std::vector<std::pair<Word, Word>>;

/// Undirected edges, each as (min, max), sorted.
EdgeSet edge_set(const TwoFactor& tf);
bool same_edges(const TwoFactor& a, const TwoFactor& b);

/// True iff the 2-factors of all sequences are pairwise different edge sets.
bool distinct_check(int n, const std::vector<ParameterSequence>& seqs);

/// Applies tau_{alpha'} vertex-wise; the result carries alpha with its last
/// vector replaced by alpha'.
TwoFactor tau_image(const TwoFactor& tf, const AlphaVector& alpha_prime);

}  // namespace midlayer

#endif  // MIDLAYER_ANALYSIS_HPP
