#ifndef MIDLAYER_TREES_HPP
#define MIDLAYER_TREES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "midlayer/lattice.hpp"

namespace midlayer {

/// Ordered rooted tree with an active vertex. Vertices are numbered 0..k in
/// preorder (root = 0, children left to right), so two trees are equal iff
/// their ordered shapes and active vertices agree.
class RootedTree {
 public:
  /// Single vertex, active at the root.
  RootedTree();

  /// Builds from per-vertex ordered child lists; vertex 0 is the root. The
  /// result is renumbered into preorder. Throws on anything that is not a
  /// tree rooted at 0.
  static RootedTree from_children(const std::vector<std::vector<int>>& children, int active = 0);

  static RootedTree star(int rays);
  /// Path on edges+1 vertices rooted at one end.
  static RootedTree path(int edges);

  int vertex_count() const { return static_cast<int>(children_.size()); }
  int edge_count() const { return vertex_count() - 1; }
  int active() const { return active_; }
  bool root_is_active() const { return active_ == 0; }
  int parent(int v) const { return parent_.at(static_cast<std::size_t>(v)); }
  const std::vector<int>& children(int v) const { return children_.at(static_cast<std::size_t>(v)); }
  int depth(int v) const;
  bool on_rightmost_branch(int v) const;
  RootedTree with_active(int v) const;

  friend bool operator==(const RootedTree& a, const RootedTree& b) {
    return a.active_ == b.active_ && a.children_ == b.children_;
  }

 private:
  std::vector<int> parent_;
  std::vector<std::vector<int>> children_;
  int active_ = 0;
};

/// Lexicographically smallest Dyck bitstring in a rotation class.
struct PlaneTreeCode {
  Bitstring code;

  std::string str() const { return code.str(); }
  friend bool operator==(const PlaneTreeCode&, const PlaneTreeCode&) = default;
  friend auto operator<=>(const PlaneTreeCode&, const PlaneTreeCode&) = default;
};

/// UP appends a new rightmost child to the active vertex and moves to it;
/// DOWN moves to the parent. Throws if the path dips below y = 0.
RootedTree psi(const LatticePath& p);

/// Inverse of psi. Throws if the active vertex is off the rightmost branch.
LatticePath psi_inv(const RootedTree& t);

/// The leftmost child of the root becomes the root; the old root, keeping
/// its remaining children, becomes the new root's rightmost child.
RootedTree rotate(const RootedTree& t);

/// Orbit of t under rotate, starting with t itself.
std::vector<RootedTree> rotation_class(const RootedTree& t);

PlaneTreeCode canonical_plane_tree(const RootedTree& t);

inline constexpr int kMaxCatalanIndex = 30;

std::uint64_t catalan(int n);
std::uint64_t count_plane_trees(int edges);
std::uint64_t count_asymmetric(int edges);

}  // namespace midlayer

#endif  // MIDLAYER_TREES_HPP
