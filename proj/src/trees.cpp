#include "midlayer/trees.hpp"

#include <algorithm>
#include <stdexcept>

namespace midlayer {

namespace {

// Renumbers the tree reachable from `root` into preorder.
void build_preorder(int root, const std::vector<std::vector<int>>& children, int active,
                    std::vector<int>& parent_out, std::vector<std::vector<int>>& children_out,
                    int& active_out) {
  const std::size_t n = children.size();
  std::vector<int> new_id(n, -1);
  std::vector<int> order;
  order.reserve(n);
  std::vector<int> stack{root};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    if (v < 0 || static_cast<std::size_t>(v) >= n) throw std::invalid_argument("tree vertex out of range");
    if (new_id[static_cast<std::size_t>(v)] != -1) throw std::invalid_argument("tree has a cycle or shared child");
    new_id[static_cast<std::size_t>(v)] = static_cast<int>(order.size());
    order.push_back(v);
    const auto& ch = children[static_cast<std::size_t>(v)];
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
  }
  if (order.size() != n) throw std::invalid_argument("tree has unreachable vertices");
  if (active < 0 || static_cast<std::size_t>(active) >= n) throw std::invalid_argument("active vertex out of range");

  parent_out.assign(n, -1);
  children_out.assign(n, {});
  for (std::size_t i = 0; i < n; ++i) {
    const int old = order[i];
    for (int c : children[static_cast<std::size_t>(old)]) {
      const int nc = new_id[static_cast<std::size_t>(c)];
      children_out[i].push_back(nc);
      parent_out[static_cast<std::size_t>(nc)] = static_cast<int>(i);
    }
  }
  active_out = new_id[static_cast<std::size_t>(active)];
}

using u128 = unsigned __int128;
using i128 = __int128;

u128 central_binomial(int d) {
  u128 b = 1;
  for (int i = 1; i <= d; ++i) b = b * static_cast<u128>(d + i) / static_cast<u128>(i);
  return b;
}

int totient(int m) {
  int result = m;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

int moebius(int m) {
  int mu = 1;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      m /= p;
      if (m % p == 0) return 0;
      mu = -mu;
    }
  }
  if (m > 1) mu = -mu;
  return mu;
}

void check_edges(int n) {
  if (n < 1 || n > kMaxCatalanIndex) {
    throw std::out_of_range("tree counts support 1.." + std::to_string(kMaxCatalanIndex) + " edges");
  }
}

// Shared by the plane and asymmetric counts; `sign` is -1 or +1 on the
// odd-n correction term.
std::uint64_t necklace_adjusted(int n, bool use_moebius, int sign) {
  check_edges(n);
  i128 sum = 0;
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    const int coef = use_moebius ? moebius(n / d) : totient(n / d);
    sum += static_cast<i128>(coef) * static_cast<i128>(central_binomial(d));
  }
  if (sum % (2 * n) != 0) throw std::logic_error("divisor sum not divisible by 2n");
  const i128 r = sum / (2 * n);
  i128 correction = static_cast<i128>(catalan(n));
  if (n % 2 == 1) correction += sign * static_cast<i128>(catalan((n - 1) / 2));
  if (correction % 2 != 0) throw std::logic_error("tree count correction is odd");
  return static_cast<std::uint64_t>(r - correction / 2);
}

}  // namespace

RootedTree::RootedTree() : parent_{-1}, children_{{}}, active_(0) {}

RootedTree RootedTree::from_children(const std::vector<std::vector<int>>& children, int active) {
  if (children.empty()) throw std::invalid_argument("tree needs at least one vertex");
  RootedTree t;
  build_preorder(0, children, active, t.parent_, t.children_, t.active_);
  return t;
}

RootedTree RootedTree::star(int rays) {
  std::vector<std::vector<int>> ch(static_cast<std::size_t>(rays) + 1);
  for (int i = 1; i <= rays; ++i) ch[0].push_back(i);
  return from_children(ch);
}

RootedTree RootedTree::path(int edges) {
  std::vector<std::vector<int>> ch(static_cast<std::size_t>(edges) + 1);
  for (int i = 0; i < edges; ++i) ch[static_cast<std::size_t>(i)].push_back(i + 1);
  return from_children(ch);
}

int RootedTree::depth(int v) const {
  int d = 0;
  for (int u = v; parent_.at(static_cast<std::size_t>(u)) != -1; u = parent_[static_cast<std::size_t>(u)]) ++d;
  return d;
}

bool RootedTree::on_rightmost_branch(int v) const {
  for (int u = v; u != 0; u = parent_.at(static_cast<std::size_t>(u))) {
    const auto& siblings = children_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(u)])];
    if (siblings.back() != u) return false;
  }
  return true;
}

RootedTree RootedTree::with_active(int v) const {
  if (v < 0 || v >= vertex_count()) throw std::out_of_range("active vertex");
  RootedTree t = *this;
  t.active_ = v;
  return t;
}

RootedTree psi(const LatticePath& p) {
  std::vector<std::vector<int>> children{{}};
  std::vector<int> parent{-1};
  int current = 0;
  for (int j = 1; j <= p.size(); ++j) {
    if (p.step(j) == Step::Up) {
      const int w = static_cast<int>(children.size());
      children[static_cast<std::size_t>(current)].push_back(w);
      children.emplace_back();
      parent.push_back(current);
      current = w;
    } else {
      if (current == 0) throw std::invalid_argument("psi: path " + p.str() + " moves below y=0");
      current = parent[static_cast<std::size_t>(current)];
    }
  }
  // New vertices are always appended after the rightmost branch, so the
  // creation order is already preorder.
  return RootedTree::from_children(children, current);
}

LatticePath psi_inv(const RootedTree& t) {
  if (!t.on_rightmost_branch(t.active())) {
    throw std::invalid_argument("psi_inv: active vertex is not on the rightmost branch");
  }
  Word steps = 0;
  int length = 0;
  // Iterative DFS emitting U on descent and D on return.
  std::vector<std::pair<int, std::size_t>> stack{{0, 0}};
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    const auto& ch = t.children(v);
    if (next < ch.size()) {
      const int c = ch[next++];
      steps |= Word{1} << length;
      ++length;
      stack.emplace_back(c, 0);
    } else {
      stack.pop_back();
      if (!stack.empty()) ++length;
    }
  }
  return LatticePath(steps & bits::low_mask(length - t.depth(t.active())), length - t.depth(t.active()));
}

RootedTree rotate(const RootedTree& t) {
  if (t.edge_count() < 1) throw std::invalid_argument("rotate: single-vertex tree");
  if (!t.root_is_active()) throw std::invalid_argument("rotate: active vertex must be the root");
  std::vector<std::vector<int>> ch(static_cast<std::size_t>(t.vertex_count()));
  for (int v = 0; v < t.vertex_count(); ++v) ch[static_cast<std::size_t>(v)] = t.children(v);
  const int new_root = ch[0].front();
  ch[0].erase(ch[0].begin());
  ch[static_cast<std::size_t>(new_root)].push_back(0);

  std::vector<int> parent;
  std::vector<std::vector<int>> children;
  int active = 0;
  build_preorder(new_root, ch, new_root, parent, children, active);
  return RootedTree::from_children(children, active);
}

std::vector<RootedTree> rotation_class(const RootedTree& t) {
  std::vector<RootedTree> orbit{t};
  if (t.edge_count() == 0) return orbit;
  for (RootedTree u = rotate(t); !(u == t); u = rotate(u)) {
    orbit.push_back(u);
    if (static_cast<int>(orbit.size()) > 2 * t.edge_count()) {
      throw InvariantViolation("rotation orbit longer than 2n");
    }
  }
  return orbit;
}

PlaneTreeCode canonical_plane_tree(const RootedTree& t) {
  if (!t.root_is_active()) throw std::invalid_argument("canonical_plane_tree: active vertex must be the root");
  Bitstring best = phi_inv(psi_inv(t));
  for (const auto& u : rotation_class(t)) best = std::min(best, phi_inv(psi_inv(u)));
  return PlaneTreeCode{best};
}

std::uint64_t catalan(int n) {
  if (n < 0 || n > kMaxCatalanIndex) throw std::out_of_range("catalan supports 0..30");
  return static_cast<std::uint64_t>(central_binomial(n) / static_cast<u128>(n + 1));
}

std::uint64_t count_plane_trees(int edges) { return necklace_adjusted(edges, false, -1); }

std::uint64_t count_asymmetric(int edges) { return necklace_adjusted(edges, true, +1); }

}  // namespace midlayer
