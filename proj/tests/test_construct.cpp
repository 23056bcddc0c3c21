#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "midlayer/analysis.hpp"
#include "midlayer/construct.hpp"
#include "midlayer/lattice.hpp"

using namespace midlayer;

namespace {

Word W(const char* s) { return Bitstring::parse(s).word(); }

std::vector<Word> Ws(std::initializer_list<const char*> list) {
  std::vector<Word> out;
  for (const char* s : list) out.push_back(W(s));
  return out;
}

std::vector<Word> as_vector(std::span<const Word> s) { return {s.begin(), s.end()}; }

// Builds the 2-factor from the edge union of the state directly: path edges
// with suffix 0, image path edges with suffix 1, and the vertical edges at
// every first and last vertex. Cycles are traced through adjacency lists.
std::vector<std::vector<Word>> edge_union_cycles(const ConstructionState& state, const AlphaVector& alpha) {
  const int n = state.n();
  const int m = 2 * n;
  const Word top = Word{1} << m;
  std::map<Word, std::vector<Word>> adj;
  auto link = [&](Word a, Word b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  };
  const PathFamily& fam = state.family(n);
  for (std::size_t i = 0; i < fam.size(); ++i) {
    const auto p = fam.path(i);
    for (std::size_t j = 0; j + 1 < p.size(); ++j) {
      link(p[j], p[j + 1]);
      link(bits::f_map(p[j], alpha.swap_mask(), m) | top, bits::f_map(p[j + 1], alpha.swap_mask(), m) | top);
    }
    link(p.front(), p.front() | top);
    link(p.back(), p.back() | top);
  }
  std::set<Word> seen;
  std::vector<std::vector<Word>> cycles;
  for (const auto& [start, nbrs] : adj) {
    REQUIRE(nbrs.size() == 2);
    if (seen.count(start)) continue;
    std::vector<Word> cyc{start};
    seen.insert(start);
    Word prev = start, cur = nbrs[0];
    while (cur != start) {
      cyc.push_back(cur);
      seen.insert(cur);
      const auto& nc = adj.at(cur);
      const Word next = nc[0] == prev ? nc[1] : nc[0];
      prev = cur;
      cur = next;
    }
    cycles.push_back(cyc);
  }
  canonicalize_cycles(cycles, m + 1);
  return cycles;
}

std::vector<ParameterSequence> prefixes(int levels, std::size_t cap, std::mt19937_64& rng) {
  std::vector<ParameterSequence> out;
  if (levels == 0) return {ParameterSequence()};
  const std::uint64_t size = ParameterSequence::space_size(levels);
  if (size <= cap) {
    for (std::uint64_t i = 0; i < size; ++i) out.push_back(ParameterSequence::from_index(i, levels));
  } else {
    for (std::size_t i = 0; i < cap; ++i) out.push_back(ParameterSequence::from_index(rng() % size, levels));
  }
  return out;
}

}  // namespace

TEST_CASE("dangling path validation") {
  CHECK(dangling_path_defect(Ws({"10", "11", "01"}), 2, 1).empty());
  CHECK_FALSE(dangling_path_defect(Ws({"10", "11"}), 2, 1).empty());
  CHECK_FALSE(dangling_path_defect(Ws({"10", "11", "10"}), 2, 1).empty());
  CHECK_FALSE(dangling_path_defect(Ws({"1000", "1100", "0100"}), 4, 2).empty());
  CHECK_FALSE(dangling_path_defect(Ws({"1010", "1110", "0101"}), 4, 2).empty());
  CHECK_THROWS_AS(DanglingPath(Ws({"10", "11"}), 1, 1), std::invalid_argument);
}

TEST_CASE("base state") {
  const ConstructionState s = base_state();
  CHECK(s.n() == 1);
  CHECK(s.k_min() == 1);
  CHECK(s.k_max() == 1);
  CHECK(s.family(1).size() == 1);
  CHECK(as_vector(s.family(1).path(0)) == Ws({"10", "11", "01"}));
  const FslSets fsl = fsl_sets(s, 1);
  CHECK(fsl.first == std::vector<Bitstring>{Bitstring::parse("10")});
  CHECK(fsl.second == std::vector<Bitstring>{Bitstring::parse("11")});
  CHECK(fsl.last == std::vector<Bitstring>{Bitstring::parse("01")});
  CHECK(check_state(s).empty());
}

TEST_CASE("assembly examples") {
  const TwoFactor t1 = assemble_two_factor(base_state(), AlphaVector::zeros(1));
  REQUIRE(t1.cycles.size() == 1);
  CHECK(t1.cycles[0] == Ws({"001", "011", "010", "110", "100", "101"}));
  CHECK(verify_two_factor(t1).ok());

  const ConstructionState s2 = build_state(ParameterSequence::parse(""));
  CHECK(s2.n() == 2);
  const TwoFactor a = assemble_two_factor(s2, AlphaVector::parse("0", 2));
  CHECK(a.cycles.size() == 1);
  CHECK(a.cycles[0].size() == 20);
  const TwoFactor b = assemble_two_factor(s2, AlphaVector::parse("1", 2));
  REQUIRE(b.cycles.size() == 2);
  CHECK(b.cycles[0].size() == 10);
  CHECK(b.cycles[1].size() == 10);
}

TEST_CASE("split of the 6-cycle") {
  const ConstructionState s1 = base_state();
  const AlphaVector a1 = AlphaVector::zeros(1);
  const ConstructionState s2 = split_state(s1, assemble_two_factor(s1, a1), a1);
  CHECK(s2.n() == 2);
  CHECK(s2.k_min() == 2);
  CHECK(s2.k_max() == 3);
  REQUIRE(s2.family(2).size() == 2);
  CHECK(as_vector(s2.family(2).path(0)) == Ws({"1010", "1110", "0110"}));
  const auto p_new = Ws({"1100", "1101", "0101", "0111", "0011", "1011", "1001"});
  CHECK(as_vector(s2.family(2).path(1)) == p_new);
  CHECK(dangling_path_defect(p_new, 4, 2).empty());
  REQUIRE(s2.family(3).size() == 1);
  CHECK(as_vector(s2.family(3).path(0)) == Ws({"1011", "1111", "0111"}));
  const FslSets fsl = fsl_sets(s2, 2);
  CHECK(fsl.first == std::vector<Bitstring>{Bitstring::parse("1010"), Bitstring::parse("1100")});
  std::vector<Bitstring> dyck;
  for (const auto& p : enumerate_class(4, 2, PathTag::DEq0)) dyck.push_back(phi_inv(p));
  std::sort(dyck.begin(), dyck.end());
  CHECK(fsl.first == dyck);
  CHECK(check_state(s2).empty());
}

TEST_CASE("build examples") {
  const TwoFactor t = build(ParameterSequence::parse(""));
  CHECK(t.cycles.size() == 1);
  CHECK(t.cycles[0].size() == 6);
  const TwoFactor z = build(ParameterSequence::all_zero(4));
  std::vector<std::size_t> lens;
  for (const auto& c : z.cycles) lens.push_back(c.size());
  std::sort(lens.begin(), lens.end());
  CHECK(lens == std::vector<std::size_t>{36, 72, 144});
  CHECK(build(ParameterSequence::parse(",1")).cycles.size() == 2);
  const TwoFactor c = build(ParameterSequence::parse(",0,00"));
  lens.clear();
  for (const auto& cy : c.cycles) lens.push_back(cy.size());
  std::sort(lens.begin(), lens.end());
  CHECK(lens == std::vector<std::size_t>{28, 42});
}

TEST_CASE("k_cap keeps exactly the families needed") {
  const auto seq = ParameterSequence::parse(",1,01,110");
  const TwoFactor full = build(seq);
  const TwoFactor capped = build(seq, 4);
  CHECK(full.cycles == capped.cycles);
  const ConstructionState st = build_state(seq.prefix(3), 4);
  CHECK(st.k_max() == 4);
  CHECK_FALSE(st.has_family(5));
  CHECK_THROWS_AS(base_state(0), std::invalid_argument);
}

TEST_CASE("canonical cycle form") {
  std::vector<Word> c = Ws({"110", "100", "101", "001", "011", "010"});
  canonicalize_cycle(c, 3);
  CHECK(c == Ws({"001", "011", "010", "110", "100", "101"}));
  std::vector<Word> r(c.rbegin(), c.rend());
  canonicalize_cycle(r, 3);
  CHECK(r == c);
}

TEST_CASE("states satisfy the coverage conditions") {
  std::mt19937_64 rng(3);
  for (int levels = 0; levels <= 5; ++levels) {
    for (const auto& pre : prefixes(levels, 24, rng)) {
      const ConstructionState st = levels == 0 ? base_state() : build_state(pre);
      const auto problems = check_state(st);
      CHECK_MESSAGE(problems.empty(), pre.str() << ": " << (problems.empty() ? "" : problems.front()));
    }
  }
}

TEST_CASE("path-level assembly matches the explicit edge union") {
  std::mt19937_64 rng(5);
  for (int n = 1; n <= 5; ++n) {
    for (const auto& pre : prefixes(n - 1, 12, rng)) {
      const ConstructionState st = n == 1 ? base_state() : build_state(pre);
      for (Word a = 0; a < (Word{1} << (n - 1)); ++a) {
        const AlphaVector alpha(a, n);
        const TwoFactor tf = assemble_two_factor(st, alpha);
        CHECK(tf.cycles == edge_union_cycles(st, alpha));
      }
    }
  }
}

TEST_CASE("path pairing agrees with explicit assembly") {
  std::mt19937_64 rng(9);
  for (int n = 1; n <= 6; ++n) {
    for (const auto& pre : prefixes(n - 1, n <= 5 ? 64 : 4, rng)) {
      const ConstructionState st = n == 1 ? base_state() : build_state(pre, n);
      const PathPairing pairing(st);
      CHECK(pairing.path_count() == st.family(n).size());
      for (Word a = 0; a < (Word{1} << (n - 1)); ++a) {
        const AlphaVector alpha(a, n);
        const TwoFactor tf = assemble_two_factor(st, alpha);
        std::vector<std::uint64_t> lens;
        for (const auto& c : tf.cycles) lens.push_back(c.size());
        std::sort(lens.begin(), lens.end());
        const auto summary = pairing.evaluate(alpha);
        CHECK(summary.num_cycles == tf.cycles.size());
        CHECK(summary.lengths == lens);
        CHECK(pairing.count_cycles(alpha) == tf.cycles.size());
      }
    }
  }
}
