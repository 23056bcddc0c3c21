#ifndef MIDLAYER_BITCUBE_HPP
#define MIDLAYER_BITCUBE_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace midlayer {

using Word = std::uint64_t;

inline constexpr int kMaxBits = 64;

/// Raised when textual input (bitstrings, alpha vectors, sequences) is malformed.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a structural guarantee of the construction is observed to fail.
/// Never expected in a correct build; the CLI maps it to exit code 3.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Word-level primitives. Paper position i (1-based, leftmost) lives in bit i-1.
namespace bits {

inline constexpr Word low_mask(int m) {
  return m >= 64 ? ~Word{0} : (Word{1} << m) - 1;
}

/// Reverses the low m bits of x; higher bits are dropped.
inline constexpr Word reverse(Word x, int m) {
  if (m == 0) return 0;
  x = ((x >> 1) & 0x5555555555555555ULL) | ((x & 0x5555555555555555ULL) << 1);
  x = ((x >> 2) & 0x3333333333333333ULL) | ((x & 0x3333333333333333ULL) << 2);
  x = ((x >> 4) & 0x0F0F0F0F0F0F0F0FULL) | ((x & 0x0F0F0F0F0F0F0F0FULL) << 4);
  x = ((x >> 8) & 0x00FF00FF00FF00FFULL) | ((x & 0x00FF00FF00FF00FFULL) << 8);
  x = ((x >> 16) & 0x0000FFFF0000FFFFULL) | ((x & 0x0000FFFF0000FFFFULL) << 16);
  x = (x >> 32) | (x << 32);
  return x >> (64 - m);
}

inline constexpr Word reverse_invert(Word x, int m) {
  return ~reverse(x, m) & low_mask(m);
}

/// Exchanges bit j and bit j+1 for every j set in `mask` (mask bits must be
/// pairwise non-adjacent).
inline constexpr Word swap_pairs(Word x, Word mask) {
  const Word t = (x ^ (x >> 1)) & mask;
  return x ^ (t | (t << 1));
}

/// f_alpha on a word of length m = 2n given the swap mask of alpha.
inline constexpr Word f_map(Word x, Word mask, int m) {
  return reverse_invert(swap_pairs(x, mask), m);
}

/// Inverse of f_map: undo the reverse-invert, then undo the swaps.
inline constexpr Word f_map_inverse(Word y, Word mask, int m) {
  return swap_pairs(reverse_invert(y, m), mask);
}

inline constexpr int weight(Word x) { return std::popcount(x); }

/// All words of length m with exactly k ones, in increasing numeric order.
std::vector<Word> words_of_weight(int m, int k);

/// Textual form, leftmost character = position 1.
std::string to_string(Word x, int m);

/// Lexicographic key of the textual form (position 1 most significant).
inline constexpr Word lex_key(Word x, int m) { return reverse(x, m); }

}  // namespace bits

/// Fixed-length bitstring; a vertex label of the m-cube.
class Bitstring {
 public:
  Bitstring() = default;
  Bitstring(Word word, int length);

  /// Builds from a list of 0/1 entries in position order.
  static Bitstring of(std::initializer_list<int> entries);
  /// Parses a string over {0,1}; leftmost character is position 1.
  static Bitstring parse(std::string_view text);

  int length() const { return length_; }
  Word word() const { return word_; }
  /// Entry at 1-based position.
  bool at(int position) const;
  std::string str() const { return bits::to_string(word_, length_); }

  friend bool operator==(const Bitstring&, const Bitstring&) = default;
  friend auto operator<=>(const Bitstring& a, const Bitstring& b) {
    if (auto c = a.length_ <=> b.length_; c != 0) return c;
    return bits::lex_key(a.word_, a.length_) <=> bits::lex_key(b.word_, b.length_);
  }

 private:
  Word word_ = 0;
  int length_ = 0;
};

/// Binary vector alpha_{2n} of length n-1 choosing which adjacent bit pairs
/// (2i, 2i+1) the map pi swaps.
class AlphaVector {
 public:
  AlphaVector() = default;
  /// entries: bit i-1 holds alpha(i).
  AlphaVector(Word entries, int level);

  static AlphaVector zeros(int level) { return AlphaVector(0, level); }
  static AlphaVector parse(std::string_view text, int level);
  /// Lexicographic rank of the textual form in [0, 2^(level-1)).
  static AlphaVector from_rank(std::uint64_t rank, int level);

  int level() const { return level_; }
  int size() const { return level_ - 1; }
  Word entries() const { return entries_; }
  bool at(int i) const;
  std::uint64_t rank() const;
  /// Bit mask for bits::swap_pairs: bit 2i-1 for every i with alpha(i) = 1.
  Word swap_mask() const { return mask_; }
  AlphaVector reversed() const;
  std::string str() const { return bits::to_string(entries_, size()); }

  friend bool operator==(const AlphaVector& a, const AlphaVector& b) {
    return a.level_ == b.level_ && a.entries_ == b.entries_;
  }

 private:
  Word entries_ = 0;
  Word mask_ = 0;
  int level_ = 1;
};

/// (alpha_2, alpha_4, ..., alpha_2n); the i-th entry has level i.
class ParameterSequence {
 public:
  ParameterSequence() = default;
  explicit ParameterSequence(std::vector<AlphaVector> alphas);

  static ParameterSequence all_zero(int n);
  /// Comma-separated alpha strings; ",0,10" is ((), (0), (1,0)).
  static ParameterSequence parse(std::string_view text);
  /// Inverse of index(); enumeration order is lexicographic on the
  /// level-by-level textual form.
  static ParameterSequence from_index(std::uint64_t index, int n);

  int target_n() const { return static_cast<int>(alphas_.size()); }
  const std::vector<AlphaVector>& alphas() const { return alphas_; }
  const AlphaVector& at_level(int i) const { return alphas_.at(i - 1); }
  const AlphaVector& last() const { return alphas_.back(); }
  ParameterSequence prefix(int levels) const;
  ParameterSequence extended(const AlphaVector& next) const;
  /// Number of sequences of this length: 2^(n choose 2).
  static std::uint64_t space_size(int n);
  std::uint64_t index() const;
  std::string str() const;

  friend bool operator==(const ParameterSequence&, const ParameterSequence&) = default;

 private:
  std::vector<AlphaVector> alphas_;
};

int weight(const Bitstring& x);
Bitstring reverse_invert(const Bitstring& x);
Bitstring concat(const Bitstring& x, const Bitstring& y);
Bitstring pi_alpha(const AlphaVector& alpha, const Bitstring& x);
Bitstring f_alpha(const AlphaVector& alpha, const Bitstring& x);
Bitstring tau_alpha(const AlphaVector& alpha_prime, const Bitstring& x);
bool is_adjacent(const Bitstring& u, const Bitstring& v);

}  // namespace midlayer

#endif  // MIDLAYER_BITCUBE_HPP
