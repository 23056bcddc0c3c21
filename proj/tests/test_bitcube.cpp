#include <random>

#include "doctest.h"
#include "midlayer/bitcube.hpp"

using namespace midlayer;

namespace {

Bitstring B(const char* s) { return Bitstring::parse(s); }

AlphaVector A(const char* s) {
  const std::string t(s);
  return AlphaVector::parse(t, static_cast<int>(t.size()) + 1);
}

// Position-by-position reference for pi_alpha, straight from the definition.
Bitstring naive_pi(const AlphaVector& alpha, const Bitstring& x) {
  std::string s = x.str();
  for (int i = 1; i <= alpha.size(); ++i)
    if (alpha.at(i)) std::swap(s[2 * i - 1], s[2 * i]);
  return Bitstring::parse(s);
}

Bitstring naive_rev_bar(const Bitstring& x) {
  std::string s = x.str();
  std::string out(s.rbegin(), s.rend());
  for (char& c : out) c = c == '0' ? '1' : '0';
  return Bitstring::parse(out);
}

}  // namespace

TEST_CASE("weight") {
  CHECK(weight(B("10")) == 1);
  CHECK(weight(B("000")) == 0);
  CHECK(weight(B("1101")) == 3);
}

TEST_CASE("reverse_invert") {
  CHECK(reverse_invert(B("10")) == B("10"));
  CHECK(reverse_invert(B("11")) == B("00"));
  CHECK(reverse_invert(B("1100")) == B("1100"));
}

TEST_CASE("concat") {
  CHECK(concat(B("10"), B("1")) == B("101"));
  CHECK(concat(B("0110"), Bitstring()) == B("0110"));
  CHECK(concat(B("01"), B("11")) == B("0111"));
}

TEST_CASE("pi_alpha") {
  CHECK(pi_alpha(A("1"), B("1010")) == B("1100"));
  CHECK(pi_alpha(A("0"), B("1010")) == B("1010"));
  CHECK(pi_alpha(A("10"), B("101100")) == B("110100"));
}

TEST_CASE("f_alpha") {
  CHECK(f_alpha(A(""), B("10")) == B("10"));
  CHECK(f_alpha(A("0"), B("1100")) == B("1100"));
  CHECK(f_alpha(A("1"), B("1010")) == B("1100"));
}

TEST_CASE("tau_alpha") {
  CHECK(tau_alpha(A(""), B("100")) == B("101"));
  CHECK(tau_alpha(A(""), B("111")) == B("000"));
  CHECK(tau_alpha(A("0"), B("11001")) == B("11000"));
}

TEST_CASE("is_adjacent") {
  CHECK(is_adjacent(B("100"), B("110")));
  CHECK_FALSE(is_adjacent(B("100"), B("010")));
  CHECK_FALSE(is_adjacent(B("100"), B("100")));
  CHECK_THROWS_AS(is_adjacent(B("10"), B("100")), std::invalid_argument);
}

TEST_CASE("parsing rejects bad input") {
  CHECK_THROWS_AS(Bitstring::parse("102"), ParseError);
  CHECK_THROWS_AS(AlphaVector::parse("00", 2), ParseError);
  CHECK_THROWS_AS(ParameterSequence::parse(",0,1"), ParseError);
  CHECK_THROWS_AS(ParameterSequence::parse("1"), ParseError);
  CHECK_THROWS_AS(Bitstring(0, 65), std::invalid_argument);
}

TEST_CASE("sequence text and index round trip") {
  const auto seq = ParameterSequence::parse(",0,10");
  CHECK(seq.target_n() == 3);
  CHECK(seq.str() == ",0,10");
  CHECK(seq.at_level(3) == A("10"));
  for (int n = 1; n <= 5; ++n) {
    const std::uint64_t size = ParameterSequence::space_size(n);
    CHECK(size == (std::uint64_t{1} << (n * (n - 1) / 2)));
    std::string prev;
    for (std::uint64_t i = 0; i < size; ++i) {
      const auto s = ParameterSequence::from_index(i, n);
      CHECK(s.index() == i);
      CHECK(ParameterSequence::parse(s.str()) == s);
      if (i > 0) CHECK(prev < s.str());
      prev = s.str();
    }
  }
}

TEST_CASE("word primitives agree with the string definitions") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 14);
    const int m = 2 * n;
    const Bitstring x(rng() & bits::low_mask(m), m);
    const AlphaVector alpha(rng() & bits::low_mask(n - 1), n);
    CHECK(pi_alpha(alpha, x) == naive_pi(alpha, x));
    CHECK(reverse_invert(x) == naive_rev_bar(x));
    CHECK(f_alpha(alpha, x) == naive_rev_bar(naive_pi(alpha, x)));
    const Word y = bits::f_map(x.word(), alpha.swap_mask(), m);
    CHECK(bits::f_map_inverse(y, alpha.swap_mask(), m) == x.word());
    CHECK(weight(f_alpha(alpha, x)) == m - weight(x));
  }
}

TEST_CASE("tau is an involution pairing the two middle levels") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const Bitstring x(rng() & bits::low_mask(2 * n + 1), 2 * n + 1);
    const AlphaVector alpha(rng() & bits::low_mask(n - 1), n);
    const Bitstring y = tau_alpha(alpha, x);
    CHECK(weight(y) == 2 * n + 1 - weight(x));
    CHECK(tau_alpha(alpha.reversed(), y) == x);
  }
}

TEST_CASE("words_of_weight") {
  const auto w = bits::words_of_weight(6, 3);
  CHECK(w.size() == 20);
  for (std::size_t i = 1; i < w.size(); ++i) CHECK(w[i - 1] < w[i]);
  for (Word x : w) CHECK(bits::weight(x) == 3);
}
