#include "midlayer/construct.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace midlayer {

namespace {

Word lex(Word x, int m) { return bits::lex_key(x, m); }

std::string vertex_text(Word x, int m) { return bits::to_string(x, m); }

}  // namespace

DanglingPath::DanglingPath(std::vector<Word> vertices, int level_n, int layer_k)
    : vertices_(std::move(vertices)), level_n_(level_n), layer_k_(layer_k) {
  if (const std::string defect = dangling_path_defect(vertices_, 2 * level_n_, layer_k_); !defect.empty()) {
    throw std::invalid_argument("not a dangling path: " + defect);
  }
}

std::string dangling_path_defect(std::span<const Word> vertices, int bit_length, int layer_k) {
  if (vertices.size() < 3) return "fewer than three vertices";
  if (vertices.size() % 2 == 0) return "odd number of edges";
  std::unordered_set<Word> seen;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const Word v = vertices[i];
    if ((v & ~bits::low_mask(bit_length)) != 0) return "vertex " + std::to_string(i) + " exceeds bit length";
    const int want = layer_k + static_cast<int>(i % 2);
    if (bits::weight(v) != want) {
      return "vertex " + std::to_string(i) + " (" + vertex_text(v, bit_length) + ") has weight " +
             std::to_string(bits::weight(v)) + ", expected " + std::to_string(want);
    }
    if (i > 0 && bits::weight(v ^ vertices[i - 1]) != 1) {
      return "vertices " + std::to_string(i - 1) + " and " + std::to_string(i) + " are not adjacent";
    }
    if (!seen.insert(v).second) return "vertex " + vertex_text(v, bit_length) + " repeated";
  }
  return {};
}

void PathFamily::reserve(std::size_t paths, std::size_t vertices) {
  offsets_.reserve(paths + 1);
  vertices_.reserve(vertices);
}

void PathFamily::append(std::span<const Word> vertices, Word suffix) {
  for (Word v : vertices) vertices_.push_back(v | suffix);
  offsets_.push_back(vertices_.size());
}

void PathFamily::append_all(const PathFamily& other, Word suffix) {
  for (std::size_t i = 0; i < other.size(); ++i) append(other.path(i), suffix);
}

void PathFamily::sort_by_first(int bit_length) {
  std::vector<std::size_t> order(size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return lex(first(a), bit_length) < lex(first(b), bit_length);
  });
  PathFamily sorted;
  sorted.reserve(size(), vertex_total());
  for (std::size_t i : order) sorted.append(path(i));
  *this = std::move(sorted);
}

const PathFamily& ConstructionState::family(int k) const {
  if (!has_family(k)) {
    throw std::out_of_range("no family for k=" + std::to_string(k) + " at n=" + std::to_string(n_));
  }
  return families_[static_cast<std::size_t>(k - n_)];
}

DanglingPath ConstructionState::path(int k, std::size_t i) const {
  const auto p = family(k).path(i);
  return DanglingPath(std::vector<Word>(p.begin(), p.end()), n_, k);
}

std::size_t TwoFactor::vertex_count() const {
  std::size_t total = 0;
  for (const auto& c : cycles) total += c.size();
  return total;
}

void canonicalize_cycle(std::vector<Word>& cycle, int bit_length) {
  const std::size_t len = cycle.size();
  if (len < 2) return;
  std::size_t start = 0;
  for (std::size_t i = 1; i < len; ++i) {
    if (lex(cycle[i], bit_length) < lex(cycle[start], bit_length)) start = i;
  }
  const Word next = cycle[(start + 1) % len];
  const Word prev = cycle[(start + len - 1) % len];
  const bool forward = lex(next, bit_length) <= lex(prev, bit_length);
  std::vector<Word> out(len);
  for (std::size_t s = 0; s < len; ++s) {
    out[s] = forward ? cycle[(start + s) % len] : cycle[(start + len - s) % len];
  }
  cycle = std::move(out);
}

void canonicalize_cycles(std::vector<std::vector<Word>>& cycles, int bit_length) {
  for (auto& c : cycles) canonicalize_cycle(c, bit_length);
  std::sort(cycles.begin(), cycles.end(), [&](const auto& a, const auto& b) {
    const Word ka = a.empty() ? 0 : lex(a.front(), bit_length);
    const Word kb = b.empty() ? 0 : lex(b.front(), bit_length);
    return ka < kb;
  });
}

ConstructionState base_state(std::optional<int> k_cap) {
  if (k_cap && *k_cap < 1) throw std::invalid_argument("k_cap must be at least 1");
  ConstructionState s;
  s.n_ = 1;
  s.k_cap_ = k_cap;
  PathFamily fam;
  const Word path[] = {0b01, 0b11, 0b10};  // (1,0), (1,1), (0,1)
  fam.append(path);
  s.families_.push_back(std::move(fam));
  return s;
}

TwoFactor assemble_two_factor(const ConstructionState& state, const AlphaVector& alpha) {
  const int n = state.n();
  if (alpha.level() != n) {
    throw std::invalid_argument("alpha level " + std::to_string(alpha.level()) +
                                " does not match state level " + std::to_string(n));
  }
  const int m = 2 * n;
  const Word top = Word{1} << m;
  const Word mask = alpha.swap_mask();
  const PathFamily& fam = state.family(n);
  const std::size_t count = fam.size();

  std::vector<Word> firsts(count), lasts(count);
  for (std::size_t i = 0; i < count; ++i) {
    firsts[i] = fam.first(i);
    lasts[i] = fam.last(i);
  }
  const WordIndex by_first(firsts, m);
  const WordIndex by_last(lasts, m);

  TwoFactor tf;
  tf.n = n;
  tf.alpha = state.alpha_prefix().extended(alpha);

  std::vector<char> visited(count, 0);
  std::vector<char> partner_used(count, 0);
  for (std::size_t start = 0; start < count; ++start) {
    if (visited[start]) continue;
    std::vector<Word> cycle;
    std::size_t j = start;
    do {
      visited[j] = 1;
      const auto p = fam.path(j);
      cycle.insert(cycle.end(), p.begin(), p.end());

      const std::int32_t hat = by_last.find(bits::f_map_inverse(lasts[j], mask, m));
      if (hat == WordIndex::kMissing) {
        throw InvariantViolation("f_alpha preimage of last vertex " + vertex_text(lasts[j], m) +
                                 " is not a last vertex");
      }
      if (partner_used[static_cast<std::size_t>(hat)]++) {
        throw InvariantViolation("partner path used twice during assembly");
      }
      const auto q = fam.path(static_cast<std::size_t>(hat));
      for (auto it = q.rbegin(); it != q.rend(); ++it) cycle.push_back(bits::f_map(*it, mask, m) | top);

      const std::int32_t next = by_first.find(bits::f_map(q.front(), mask, m));
      if (next == WordIndex::kMissing) {
        throw InvariantViolation("f_alpha image of first vertex " + vertex_text(q.front(), m) +
                                 " is not a first vertex");
      }
      j = static_cast<std::size_t>(next);
      if (visited[j] && j != start) throw InvariantViolation("assembly walk re-entered a finished cycle");
    } while (j != start);
    tf.cycles.push_back(std::move(cycle));
  }
  canonicalize_cycles(tf.cycles, tf.bit_length());
  return tf;
}

ConstructionState split_state(const ConstructionState& state, const TwoFactor& tf, const AlphaVector& alpha) {
  const int n = state.n();
  if (tf.n != n || alpha.level() != n) throw std::invalid_argument("split_state: level mismatch");
  if (state.k_cap() && *state.k_cap() < n + 1) {
    throw std::invalid_argument("split_state: k_cap below the next level");
  }
  const int m = 2 * n;
  const Word top = Word{1} << m;       // suffix bit of C_{2n+1}
  const Word outer = Word{1} << (m + 1);  // second suffix bit
  const PathFamily& middle = state.family(n);

  std::vector<Word> firsts(middle.size());
  for (std::size_t i = 0; i < middle.size(); ++i) firsts[i] = middle.first(i);
  const WordIndex by_first(firsts, m);

  PathFamily fresh;
  fresh.reserve(middle.size(), tf.vertex_count() + middle.size());
  std::vector<std::size_t> marks;
  std::vector<Word> walk;
  for (const auto& cycle : tf.cycles) {
    const std::size_t len = cycle.size();
    auto first_index = [&](Word v) -> std::int32_t {
      return (v & top) ? WordIndex::kMissing : by_first.find(v);
    };
    std::size_t anchor = len;
    for (std::size_t i = 0; i < len; ++i) {
      if (first_index(cycle[i]) != WordIndex::kMissing) {
        anchor = i;
        break;
      }
    }
    if (anchor == len) throw InvariantViolation("cycle contains no first vertex");
    const Word anchor_second = middle.second(static_cast<std::size_t>(first_index(cycle[anchor])));
    int dir;
    if (cycle[(anchor + 1) % len] == anchor_second) {
      dir = 1;
    } else if (cycle[(anchor + len - 1) % len] == anchor_second) {
      dir = -1;
    } else {
      throw InvariantViolation("first vertex not adjacent to its second vertex on the cycle");
    }
    walk.resize(len);
    for (std::size_t s = 0; s < len; ++s) {
      const std::size_t pos = dir > 0 ? (anchor + s) % len : (anchor + len - s) % len;
      walk[s] = cycle[pos];
    }

    marks.clear();
    for (std::size_t s = 0; s < len; ++s) {
      const std::int32_t fi = first_index(walk[s]);
      if (fi == WordIndex::kMissing) continue;
      if (walk[(s + 1) % len] != middle.second(static_cast<std::size_t>(fi))) {
        throw InvariantViolation("(F,S) edges are not coherently oriented on a cycle");
      }
      marks.push_back(s);
    }
    for (std::size_t a = 0; a < marks.size(); ++a) {
      const std::size_t from = marks[a] + 1;
      const std::size_t to = a + 1 < marks.size() ? marks[a + 1] : marks[0] + len;
      std::vector<Word> arc;
      arc.reserve(to - from + 2);
      arc.push_back(walk[from % len]);  // S(P)∘(0,0)
      for (std::size_t s = from; s <= to; ++s) arc.push_back(walk[s % len] | outer);
      fresh.append(arc);
    }
  }

  ConstructionState next;
  next.n_ = n + 1;
  next.k_cap_ = state.k_cap_;
  next.prefix_ = state.prefix_.extended(alpha);
  const int m2 = m + 2;
  static const PathFamily kEmpty;
  auto old = [&](int k) -> const PathFamily& { return state.has_family(k) ? state.family(k) : kEmpty; };
  const Word s00 = 0, s10 = top, s01 = outer, s11 = top | outer;

  for (int k = next.k_min(); k <= next.k_max(); ++k) {
    PathFamily fam;
    if (k == n + 1) {
      fam.append_all(old(n + 1), s00);
      fam.append_all(old(n), s10);
      fam.append_all(fresh, 0);
    } else {
      fam.append_all(old(k), s00);
      fam.append_all(old(k - 1), s10);
      fam.append_all(old(k - 1), s01);
      fam.append_all(old(k - 2), s11);
    }
    fam.sort_by_first(m2);
    next.families_.push_back(std::move(fam));
  }
  return next;
}

ConstructionState build_state(const ParameterSequence& prefix, std::optional<int> k_cap) {
  ConstructionState state = base_state(k_cap);
  for (const auto& alpha : prefix.alphas()) {
    const TwoFactor tf = assemble_two_factor(state, alpha);
    state = split_state(state, tf, alpha);
  }
  return state;
}

TwoFactor build(const ParameterSequence& seq, std::optional<int> k_cap) {
  const int n = seq.target_n();
  if (n < 1) throw std::invalid_argument("build needs a non-empty parameter sequence");
  const ConstructionState state = build_state(seq.prefix(n - 1), k_cap);
  return assemble_two_factor(state, seq.last());
}

FslSets fsl_sets(const ConstructionState& state, int k) {
  const PathFamily& fam = state.family(k);
  const int m = 2 * state.n();
  FslSets out;
  for (std::size_t i = 0; i < fam.size(); ++i) {
    out.first.emplace_back(fam.first(i), m);
    out.second.emplace_back(fam.second(i), m);
    out.last.emplace_back(fam.last(i), m);
  }
  std::sort(out.first.begin(), out.first.end());
  std::sort(out.second.begin(), out.second.end());
  std::sort(out.last.begin(), out.last.end());
  return out;
}

std::vector<std::string> check_state(const ConstructionState& state) {
  std::vector<std::string> problems;
  const int n = state.n();
  const int m = 2 * n;
  for (int k = state.k_min(); k <= state.k_max(); ++k) {
    const PathFamily& fam = state.family(k);
    const std::string where = "family k=" + std::to_string(k);
    std::vector<Word> lower, upper;
    for (std::size_t i = 0; i < fam.size(); ++i) {
      const auto p = fam.path(i);
      if (auto d = dangling_path_defect(p, m, k); !d.empty()) {
        problems.push_back(where + " path " + std::to_string(i) + ": " + d);
      }
      for (Word v : p) (bits::weight(v) == k ? lower : upper).push_back(v);
    }
    std::sort(lower.begin(), lower.end());
    std::sort(upper.begin(), upper.end());
    if (std::adjacent_find(lower.begin(), lower.end()) != lower.end() ||
        std::adjacent_find(upper.begin(), upper.end()) != upper.end()) {
      problems.push_back(where + ": paths are not disjoint");
    }
    if (upper != bits::words_of_weight(m, k + 1)) {
      problems.push_back(where + ": upper level not covered exactly");
    }
    std::vector<Word> expected_lower = bits::words_of_weight(m, k);
    if (k > n) {
      const PathFamily& below = state.family(k - 1);
      std::vector<Word> seconds(below.size());
      for (std::size_t i = 0; i < below.size(); ++i) seconds[i] = below.second(i);
      std::sort(seconds.begin(), seconds.end());
      std::vector<Word> diff;
      std::set_difference(expected_lower.begin(), expected_lower.end(), seconds.begin(), seconds.end(),
                          std::back_inserter(diff));
      expected_lower = std::move(diff);
    }
    if (lower != expected_lower) {
      problems.push_back(where + (k == n ? ": lower level not covered exactly"
                                         : ": lower level differs from complement of second vertices below"));
    }
  }
  return problems;
}

PathPairing::PathPairing(const ConstructionState& state) : n_(state.n()) {
  const PathFamily& fam = state.family(n_);
  const std::size_t count = fam.size();
  first_.resize(count);
  last_.resize(count);
  edges_.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    first_[i] = fam.first(i);
    last_[i] = fam.last(i);
    edges_[i] = static_cast<std::uint32_t>(fam.edges(i));
  }
  first_index_ = WordIndex(first_, 2 * n_);
  last_index_ = WordIndex(last_, 2 * n_);
}

template <bool kWithLengths>
PathPairing::Summary PathPairing::walk(const AlphaVector& alpha) const {
  if (alpha.level() != n_) throw std::invalid_argument("alpha level does not match pairing level");
  const int m = 2 * n_;
  const Word mask = alpha.swap_mask();
  const std::size_t count = first_.size();
  std::vector<char> visited(count, 0);
  Summary out;
  for (std::size_t start = 0; start < count; ++start) {
    if (visited[start]) continue;
    ++out.num_cycles;
    std::uint64_t length = 0;
    std::size_t j = start;
    do {
      visited[j] = 1;
      const std::int32_t hat = last_index_.find(bits::f_map_inverse(last_[j], mask, m));
      if (hat == WordIndex::kMissing) throw InvariantViolation("f_alpha does not preserve the last-vertex set");
      const std::int32_t next = first_index_.find(bits::f_map(first_[static_cast<std::size_t>(hat)], mask, m));
      if (next == WordIndex::kMissing) throw InvariantViolation("f_alpha does not preserve the first-vertex set");
      if constexpr (kWithLengths) length += edges_[j] + edges_[static_cast<std::size_t>(hat)] + 2;
      j = static_cast<std::size_t>(next);
      if (visited[j] && j != start) throw InvariantViolation("path pairing is not a permutation");
    } while (j != start);
    if constexpr (kWithLengths) out.lengths.push_back(length);
  }
  if constexpr (kWithLengths) std::sort(out.lengths.begin(), out.lengths.end());
  return out;
}

PathPairing::Summary PathPairing::evaluate(const AlphaVector& alpha) const { return walk<true>(alpha); }

std::size_t PathPairing::count_cycles(const AlphaVector& alpha) const { return walk<false>(alpha).num_cycles; }

}  // namespace midlayer
