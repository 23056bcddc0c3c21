#ifndef MIDLAYER_LATTICE_HPP
#define MIDLAYER_LATTICE_HPP

#include <string>
#include <string_view>
#include <vector>

#include "midlayer/bitcube.hpp"

namespace midlayer {

enum class Step : unsigned char { Down = 0, Up = 1 };

/// Lattice path from (0,0) with steps (+1,+1) / (+1,-1), identified with its
/// step sequence. Steps are packed like a Bitstring (step j in bit j-1, 1 = up).
class LatticePath {
 public:
  LatticePath() = default;
  LatticePath(Word steps, int length);
  LatticePath(std::initializer_list<Step> steps);

  /// String over {U,D}.
  static LatticePath parse(std::string_view text);

  int size() const { return length_; }
  Word steps() const { return steps_; }
  Step step(int j) const;  // 1-based
  int upsteps() const { return bits::weight(steps_); }
  /// Ordinate at abscissa x, 0 <= x <= size().
  int height(int x) const;
  int final_height() const { return 2 * upsteps() - length_; }
  std::vector<int> heights() const;
  /// p[x, x']: the steps between abscissas x and x'.
  LatticePath subpath(int from, int to) const;
  LatticePath then(const LatticePath& q) const;
  std::string str() const;

  friend bool operator==(const LatticePath&, const LatticePath&) = default;
  friend auto operator<=>(const LatticePath& a, const LatticePath& b) {
    if (auto c = a.length_ <=> b.length_; c != 0) return c;
    return bits::lex_key(a.steps_, a.length_) <=> bits::lex_key(b.steps_, b.length_);
  }

 private:
  Word steps_ = 0;
  int length_ = 0;
};

enum class PathTag { DEq0, DGt0, DMinus, None };

std::string_view to_string(PathTag tag);

struct PathClass {
  PathTag tag = PathTag::None;
  int n = 0;
  int k = 0;

  friend bool operator==(const PathClass&, const PathClass&) = default;
};

/// Split of a classified path around its pivot abscissa:
///   DEq0:   p = (U) ell (D) r
///   DGt0:   p = (U) ell (U) r
///   DMinus: p = ell (D,U) r
struct Decomposition {
  LatticePath ell;
  LatticePath r;
  int pivot = 0;
};

LatticePath phi(const Bitstring& x);
Bitstring phi_inv(const LatticePath& p);

/// Returns NONE for paths that fit none of the three classes, so that callers
/// can sweep arbitrary step sequences.
PathClass classify(const LatticePath& p);

/// Throws std::invalid_argument when the path is unclassified, or when the
/// two pivot steps do not fit (a DGt0 path ending at height 1, a DMinus path
/// ending at -1, the empty path).
Decomposition decompose(const LatticePath& p);

/// Recomposes a path of the given class from its two subpaths.
LatticePath recompose(PathTag tag, const LatticePath& ell, const LatticePath& r);

LatticePath rev_bar_path(const LatticePath& p);
LatticePath f_alpha_path(const AlphaVector& alpha, const LatticePath& p);

/// True iff the path never moves below y = 0 (membership in D_n(k)).
bool is_nonnegative(const LatticePath& p);

inline constexpr int kMaxEnumerationLength = 24;

/// Brute-force oracle: every step sequence of length n with k upsteps and
/// class `tag`, in lexicographic order.
std::vector<LatticePath> enumerate_class(int n, int k, PathTag tag);

}  // namespace midlayer

#endif  // MIDLAYER_LATTICE_HPP
