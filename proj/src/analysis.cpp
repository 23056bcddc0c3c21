#include "midlayer/analysis.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "midlayer/lattice.hpp"

namespace midlayer {

std::uint64_t CycleSpectrum::num_cycles() const {
  std::uint64_t total = 0;
  for (const auto& [len, count] : counts) total += count;
  return total;
}

std::uint64_t CycleSpectrum::total_length() const {
  std::uint64_t total = 0;
  for (const auto& [len, count] : counts) total += len * count;
  return total;
}

std::uint64_t CycleSpectrum::count_of(std::uint64_t length) const {
  auto it = counts.find(length);
  return it == counts.end() ? 0 : it->second;
}

bool is_dyck_vertex(Word v, int n) {
  const PathClass c = classify(phi(Bitstring(v & bits::low_mask(2 * n), 2 * n)));
  return c.tag == PathTag::DEq0 && c.k == n;
}

CycleSpectrum spectrum(const TwoFactor& tf) {
  CycleSpectrum s;
  s.n = tf.n;
  const Word top = Word{1} << (2 * tf.n);
  for (const auto& cycle : tf.cycles) {
    ++s.counts[cycle.size()];
    std::uint64_t dyck = 0;
    for (Word v : cycle) {
      if (!(v & top) && is_dyck_vertex(v, tf.n)) ++dyck;
    }
    s.dyck_counts.push_back(dyck);
  }
  return s;
}

CycleSpectrum spectrum_from_lengths(int n, const std::vector<std::uint64_t>& lengths) {
  CycleSpectrum s;
  s.n = n;
  for (auto len : lengths) ++s.counts[len];
  return s;
}

VerificationReport verify_two_factor(const TwoFactor& tf) {
  VerificationReport r;
  const int m = tf.bit_length();
  const std::uint64_t period = 4 * static_cast<std::uint64_t>(tf.n) + 2;

  std::vector<Word> seen;
  seen.reserve(tf.vertex_count());
  for (std::size_t c = 0; c < tf.cycles.size(); ++c) {
    const auto& cycle = tf.cycles[c];
    seen.insert(seen.end(), cycle.begin(), cycle.end());
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const Word a = cycle[i];
      const Word b = cycle[(i + 1) % cycle.size()];
      if (cycle.size() < 2 || bits::weight(a ^ b) != 1) {
        if (r.adjacency) {
          r.failures.push_back("cycle " + std::to_string(c) + ": " + bits::to_string(a, m) + " and " +
                               bits::to_string(b, m) + " are not adjacent");
        }
        r.adjacency = false;
      }
    }
    if (cycle.size() < period || cycle.size() % period != 0) {
      if (r.divisibility) {
        r.failures.push_back("cycle " + std::to_string(c) + " has length " + std::to_string(cycle.size()) +
                             ", not a positive multiple of " + std::to_string(period));
      }
      r.divisibility = false;
    }
  }

  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
    r.disjoint = false;
    r.failures.push_back("some vertex lies on more than one cycle position");
  }
  std::vector<Word> expected = bits::words_of_weight(m, tf.n);
  const auto upper = bits::words_of_weight(m, tf.n + 1);
  expected.insert(expected.end(), upper.begin(), upper.end());
  std::sort(expected.begin(), expected.end());
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
  if (seen != expected) {
    r.coverage = false;
    r.failures.push_back("cycles visit " + std::to_string(seen.size()) + " distinct vertices, middle layer has " +
                         std::to_string(expected.size()) + " (or foreign vertices present)");
  }
  return r;
}

std::string BetaVector::str() const {
  std::string out;
  for (int e : entries) out += e ? '1' : '0';
  return out;
}

bool is_power_of_two(std::uint64_t x) { return x != 0 && (x & (x - 1)) == 0; }

BetaVector beta(int n) {
  if (n < 1) throw std::invalid_argument("beta needs n >= 1");
  BetaVector b;
  for (int i = 1; i < n; ++i) {
    b.entries.push_back(is_power_of_two(static_cast<std::uint64_t>(i)) &&
                        is_power_of_two(static_cast<std::uint64_t>(n - i)));
  }
  return b;
}

int predicted_parity(const AlphaVector& alpha, int n) {
  if (alpha.level() != n) throw std::invalid_argument("alpha level does not match n");
  const BetaVector b = beta(n);
  int sum = is_power_of_two(static_cast<std::uint64_t>(n)) ? 1 : 0;
  for (int i = 1; i < n; ++i) sum += alpha.at(i) * b.entries[static_cast<std::size_t>(i - 1)];
  return sum % 2;
}

PlaneTreeCode cycle_tree_class(const std::vector<Word>& cycle, int n) {
  const Word top = Word{1} << (2 * n);
  std::set<Word> dyck;
  for (Word v : cycle) {
    if (!(v & top) && is_dyck_vertex(v, n)) dyck.insert(v);
  }
  if (dyck.empty()) throw InvariantViolation("cycle has no Dyck vertices");
  const RootedTree t = psi(phi(Bitstring(*dyck.begin(), 2 * n)));
  std::set<Word> orbit;
  for (const auto& u : rotation_class(t)) orbit.insert(phi_inv(psi_inv(u)).word());
  if (orbit != dyck) {
    throw InvariantViolation("Dyck vertices of the cycle are not a single rotation class");
  }
  return canonical_plane_tree(t);
}

EdgeSet edge_set(const TwoFactor& tf) {
  EdgeSet edges;
  edges.reserve(tf.vertex_count());
  for (const auto& cycle : tf.cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const Word a = cycle[i];
      const Word b = cycle[(i + 1) % cycle.size()];
      edges.emplace_back(std::min(a, b), std::max(a, b));
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

bool same_edges(const TwoFactor& a, const TwoFactor& b) {
  return a.n == b.n && edge_set(a) == edge_set(b);
}

bool distinct_check(int n, const std::vector<ParameterSequence>& seqs) {
  std::vector<EdgeSet> all;
  all.reserve(seqs.size());
  for (const auto& s : seqs) {
    if (s.target_n() != n) throw std::invalid_argument("sequence " + s.str() + " does not target n");
    all.push_back(edge_set(build(s)));
  }
  std::sort(all.begin(), all.end());
  return std::adjacent_find(all.begin(), all.end()) == all.end();
}

TwoFactor tau_image(const TwoFactor& tf, const AlphaVector& alpha_prime) {
  if (alpha_prime.level() != tf.n) throw std::invalid_argument("alpha' level does not match the 2-factor");
  const int m = 2 * tf.n;
  const Word mask = alpha_prime.swap_mask();
  const Word top = Word{1} << m;
  TwoFactor out;
  out.n = tf.n;
  out.alpha = tf.alpha.target_n() == tf.n ? tf.alpha.prefix(tf.n - 1).extended(alpha_prime) : tf.alpha;
  out.cycles.reserve(tf.cycles.size());
  for (const auto& cycle : tf.cycles) {
    std::vector<Word> image;
    image.reserve(cycle.size());
    for (Word v : cycle) image.push_back(bits::f_map(v & bits::low_mask(m), mask, m) | (~v & top));
    out.cycles.push_back(std::move(image));
  }
  canonicalize_cycles(out.cycles, tf.bit_length());
  return out;
}

}  // namespace midlayer
