#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "midlayer/analysis.hpp"
#include "midlayer/io.hpp"
#include "midlayer/trees.hpp"

using namespace midlayer;

namespace {

ParameterSequence S(const char* s) { return ParameterSequence::parse(s); }

// Reference parity formula, evaluated from the definition of beta.
int reference_parity(const AlphaVector& alpha, int n) {
  auto pow2 = [](int x) { return x > 0 && (x & (x - 1)) == 0; };
  int sum = pow2(n) ? 1 : 0;
  for (int i = 1; i < n; ++i) sum += (alpha.at(i) && pow2(i) && pow2(n - i)) ? 1 : 0;
  return sum % 2;
}

}  // namespace

TEST_CASE("spectrum examples") {
  const CycleSpectrum s1 = spectrum(build(S("")));
  CHECK(s1.counts == std::map<std::uint64_t, std::uint64_t>{{6, 1}});
  const CycleSpectrum s4 = spectrum(build(ParameterSequence::all_zero(4)));
  CHECK(s4.counts == std::map<std::uint64_t, std::uint64_t>{{36, 1}, {72, 1}, {144, 1}});
  CHECK(s4.num_cycles() == 3);
  CHECK(s4.total_length() == 252);
  CHECK(s4.shortest() == 36);
  CHECK(s4.longest() == 144);
  const CycleSpectrum s2 = spectrum(build(S(",1")));
  CHECK(s2.counts == std::map<std::uint64_t, std::uint64_t>{{10, 2}});
  CHECK(s2 == spectrum_from_lengths(2, {10, 10}));
}

TEST_CASE("verify_two_factor and negative controls") {
  const TwoFactor good = build(S(""));
  CHECK(verify_two_factor(good).ok());

  TwoFactor missing = good;
  missing.cycles[0].pop_back();
  const auto r1 = verify_two_factor(missing);
  CHECK_FALSE(r1.coverage);
  CHECK_FALSE(r1.ok());

  TwoFactor swapped = good;
  std::swap(swapped.cycles[0][1], swapped.cycles[0][2]);
  const auto r2 = verify_two_factor(swapped);
  CHECK_FALSE(r2.adjacency);

  TwoFactor doubled = build(S(",1"));
  doubled.cycles[1] = doubled.cycles[0];
  const auto r3 = verify_two_factor(doubled);
  CHECK_FALSE(r3.disjoint);
  CHECK_FALSE(r3.coverage);
}

TEST_CASE("beta and predicted parity") {
  CHECK(beta(3).entries == std::vector<int>{1, 1});
  CHECK(beta(4).entries == std::vector<int>{0, 1, 0});
  CHECK(beta(7).entries == std::vector<int>(6, 0));
  CHECK(predicted_parity(AlphaVector::parse("0", 2), 2) == 1);
  CHECK(predicted_parity(AlphaVector::parse("1", 2), 2) == 0);
  for (Word a = 0; a < 64; ++a) CHECK(predicted_parity(AlphaVector(a, 7), 7) == 0);
  for (int n = 1; n <= 14; ++n)
    for (Word a = 0; a < (Word{1} << std::min(n - 1, 10)); ++a) {
      const AlphaVector alpha(a, n);
      CHECK(predicted_parity(alpha, n) == reference_parity(alpha, n));
    }
}

TEST_CASE("cycle tree classes of all-zero 2-factors") {
  const TwoFactor t2 = build(ParameterSequence::all_zero(2));
  CHECK(cycle_tree_class(t2.cycles[0], 2).str() == "1010");

  const TwoFactor t4 = build(ParameterSequence::all_zero(4));
  const RootedTree spider = RootedTree::from_children({{1, 2, 3}, {4}, {}, {}, {}});
  std::set<PlaneTreeCode> codes;
  for (const auto& c : t4.cycles) {
    const PlaneTreeCode code = cycle_tree_class(c, 4);
    codes.insert(code);
    if (c.size() == 144) CHECK(code == canonical_plane_tree(spider));
  }
  CHECK(codes.size() == 3);
  CHECK(codes.size() == count_plane_trees(4));
}

TEST_CASE("cycle lengths are multiples of 4n+2 given by Dyck vertices") {
  std::mt19937_64 rng(21);
  for (int n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto seq = ParameterSequence::from_index(rng() % ParameterSequence::space_size(n), n);
      const TwoFactor tf = build(seq);
      CHECK(verify_two_factor(tf).ok());
      const CycleSpectrum s = spectrum(tf);
      REQUIRE(s.dyck_counts.size() == tf.cycles.size());
      for (std::size_t i = 0; i < tf.cycles.size(); ++i)
        CHECK(tf.cycles[i].size() == static_cast<std::size_t>(4 * n + 2) * s.dyck_counts[i]);
      CHECK(static_cast<int>(s.num_cycles() % 2) == predicted_parity(seq.last(), n));
    }
  }
}

TEST_CASE("distinct_check") {
  auto all = [](int n) {
    std::vector<ParameterSequence> v;
    for (std::uint64_t i = 0; i < ParameterSequence::space_size(n); ++i)
      v.push_back(ParameterSequence::from_index(i, n));
    return v;
  };
  CHECK(distinct_check(2, all(2)));
  CHECK(distinct_check(3, all(3)));
  CHECK(distinct_check(4, all(4)));
  CHECK_FALSE(distinct_check(3, {S(",0,01"), S(",0,01")}));
}

TEST_CASE("tau_image") {
  const TwoFactor a = build(S(",0"));
  CHECK(same_edges(tau_image(a, AlphaVector::parse("0", 2)), a));
  const TwoFactor b = build(S(",0,10"));
  const TwoFactor image = tau_image(b, AlphaVector::parse("01", 3));
  CHECK(image.alpha == S(",0,01"));
  CHECK(same_edges(image, build(S(",0,01"))));
  const TwoFactor c = build(S(""));
  CHECK(same_edges(tau_image(c, AlphaVector::zeros(1)), c));
}

TEST_CASE("two-factor JSON round trip") {
  const TwoFactor tf = build(S(",1,10"));
  const std::string text = two_factor_json(tf);
  const TwoFactor back = parse_two_factor_json(text);
  CHECK(back.n == tf.n);
  CHECK(back.alpha == tf.alpha);
  CHECK(back.cycles == tf.cycles);
  CHECK(two_factor_json(back, 2) == two_factor_json(tf, 2));
  CHECK_THROWS_AS(parse_two_factor_json("{"), ParseError);
  CHECK_THROWS_AS(parse_two_factor_json(R"({"n":1,"alpha":"","cycles":[["10"]]})"), ParseError);
  CHECK(spectrum_json(spectrum(tf), tf.alpha) ==
        R"({"alpha":",1,10","n":3,"num_cycles":)" + std::to_string(tf.cycles.size()) +
            R"(,"spectrum":)" + [&] {
              std::string s = "{";
              for (const auto& [len, cnt] : spectrum(tf).counts) {
                if (s.size() > 1) s += ",";
                s += "\"" + std::to_string(len) + "\":" + std::to_string(cnt);
              }
              return s + "}}";
            }());
}
