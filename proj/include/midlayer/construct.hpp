#ifndef MIDLAYER_CONSTRUCT_HPP
#define MIDLAYER_CONSTRUCT_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "midlayer/bitcube.hpp"
#include "midlayer/word_index.hpp"

namespace midlayer {

struct TwoFactor;

/// Oriented path in the layer Q_{2n}(k, k+1) whose two ends lie in level k.
class DanglingPath {
 public:
  DanglingPath(std::vector<Word> vertices, int level_n, int layer_k);

  int level() const { return level_n_; }
  int layer() const { return layer_k_; }
  int bit_length() const { return 2 * level_n_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return vertices_.size() - 1; }
  Bitstring vertex(std::size_t i) const { return Bitstring(vertices_.at(i), bit_length()); }
  Bitstring first() const { return vertex(0); }
  Bitstring second() const { return vertex(1); }
  Bitstring last() const { return vertex(vertices_.size() - 1); }
  std::span<const Word> words() const { return vertices_; }

 private:
  std::vector<Word> vertices_;
  int level_n_;
  int layer_k_;
};

/// Empty when the path is a valid dangling path in Q_m(k, k+1); otherwise a
/// description of the first defect found.
std::string dangling_path_defect(std::span<const Word> vertices, int bit_length, int layer_k);

/// Flat storage for a family of oriented paths sharing one bit length.
class PathFamily {
 public:
  std::size_t size() const { return offsets_.size() - 1; }
  bool empty() const { return size() == 0; }
  std::size_t vertex_total() const { return vertices_.size(); }

  std::span<const Word> path(std::size_t i) const {
    return {vertices_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
  }
  Word first(std::size_t i) const { return vertices_[offsets_[i]]; }
  Word second(std::size_t i) const { return vertices_[offsets_[i] + 1]; }
  Word last(std::size_t i) const { return vertices_[offsets_[i + 1] - 1]; }
  std::size_t edges(std::size_t i) const { return offsets_[i + 1] - offsets_[i] - 1; }

  void reserve(std::size_t paths, std::size_t vertices);
  /// Appends a path with `suffix` OR-ed onto every vertex.
  void append(std::span<const Word> vertices, Word suffix = 0);
  /// Appends every path of `other`, each vertex OR-ed with `suffix`.
  void append_all(const PathFamily& other, Word suffix);
  /// Orders paths by first vertex, lexicographically in position order.
  void sort_by_first(int bit_length);

 private:
  std::vector<Word> vertices_;
  std::vector<std::uint64_t> offsets_{0};
};

/// The families P_{2n}(k, k+1), k = n .. min(2n-1, k_cap), built from one
/// parameter prefix (alpha_2, ..., alpha_{2(n-1)}).
class ConstructionState {
 public:
  int n() const { return n_; }
  std::optional<int> k_cap() const { return k_cap_; }
  int k_min() const { return n_; }
  int k_max() const { return k_cap_ ? std::min(2 * n_ - 1, *k_cap_) : 2 * n_ - 1; }
  bool has_family(int k) const { return k >= k_min() && k <= k_max(); }
  const PathFamily& family(int k) const;
  DanglingPath path(int k, std::size_t i) const;
  const ParameterSequence& alpha_prefix() const { return prefix_; }

 private:
  friend ConstructionState base_state(std::optional<int> k_cap);
  friend ConstructionState split_state(const ConstructionState&, const TwoFactor&,
                                       const AlphaVector&);

  int n_ = 1;
  std::optional<int> k_cap_;
  std::vector<PathFamily> families_;  // index k - n
  ParameterSequence prefix_;
};

/// Disjoint cycles covering the middle layer of Q_{2n+1}. Each cycle starts
/// at its lexicographically smallest vertex and continues toward the smaller
/// of its two neighbours; cycles are ordered by first vertex.
struct TwoFactor {
  int n = 0;
  ParameterSequence alpha;
  std::vector<std::vector<Word>> cycles;

  int bit_length() const { return 2 * n + 1; }
  std::size_t vertex_count() const;
};

/// Rotates/reverses a cycle into canonical orientation.
void canonicalize_cycle(std::vector<Word>& cycle, int bit_length);
/// Canonicalizes every cycle and sorts the list.
void canonicalize_cycles(std::vector<std::vector<Word>>& cycles, int bit_length);

/// n = 1: the single path ((1,0), (1,1), (0,1)).
ConstructionState base_state(std::optional<int> k_cap = std::nullopt);

/// Glues P(n,n+1)∘(0), f_alpha(P(n,n+1))∘(1) and the F/L matching edges into
/// the middle-layer 2-factor. Throws InvariantViolation if an f_alpha image
/// endpoint is not a first/last vertex of the family.
TwoFactor assemble_two_factor(const ConstructionState& state, const AlphaVector& alpha);

/// Cuts `tf` at its (F(P), S(P))∘(0) edges and builds the level n+1 families.
/// `tf` must be the assembly of `state` with `alpha`.
ConstructionState split_state(const ConstructionState& state, const TwoFactor& tf, const AlphaVector& alpha);

/// State at level prefix.target_n() + 1 (base state for an empty prefix).
ConstructionState build_state(const ParameterSequence& prefix, std::optional<int> k_cap = std::nullopt);

/// The 2-factor C_{2n+1} for n = seq.target_n().
TwoFactor build(const ParameterSequence& seq, std::optional<int> k_cap = std::nullopt);

struct FslSets {
  std::vector<Bitstring> first;
  std::vector<Bitstring> second;
  std::vector<Bitstring> last;
};

/// First/second/last vertex sets of families[k], each sorted.
FslSets fsl_sets(const ConstructionState& state, int k);

/// Exhaustive check of path validity and the two coverage conditions.
/// Returns the list of violations (empty when the state is sound).
std::vector<std::string> check_state(const ConstructionState& state);

/// Cycle structure of C_{2n+1} computed at path granularity: each cycle is a
/// cyclic sequence of middle-family paths P, P', ... where P' is reached
/// through the partner path P̂ with f(L(P̂)) = L(P) and f(F(P̂)) = F(P').
/// One instance serves every alpha_{2n} for a fixed family.
class PathPairing {
 public:
  struct Summary {
    std::size_t num_cycles = 0;
    std::vector<std::uint64_t> lengths;  // ascending
  };

  explicit PathPairing(const ConstructionState& state);

  int n() const { return n_; }
  std::size_t path_count() const { return first_.size(); }
  Summary evaluate(const AlphaVector& alpha) const;
  std::size_t count_cycles(const AlphaVector& alpha) const;

 private:
  template <bool kWithLengths>
  Summary walk(const AlphaVector& alpha) const;

  int n_;
  std::vector<Word> first_;
  std::vector<Word> last_;
  std::vector<std::uint32_t> edges_;
  WordIndex first_index_;
  WordIndex last_index_;
};

}  // namespace midlayer

#endif  // MIDLAYER_CONSTRUCT_HPP
