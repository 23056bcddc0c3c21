#include <set>

#include "doctest.h"
#include "midlayer/lattice.hpp"

using namespace midlayer;

namespace {

constexpr Step U = Step::Up;
constexpr Step D = Step::Down;

LatticePath P(const char* s) { return LatticePath::parse(s); }

// Reference predicates written directly over the height profile.
int min_height(const LatticePath& p) {
  int lo = 0;
  for (int h : p.heights()) lo = std::min(lo, h);
  return lo;
}

int touches(const LatticePath& p, int y) {
  int c = 0;
  const auto h = p.heights();
  for (std::size_t x = 1; x < h.size(); ++x) c += h[x] == y;
  return c;
}

}  // namespace

TEST_CASE("phi and phi_inv") {
  CHECK(phi(Bitstring::parse("10")) == LatticePath({U, D}));
  CHECK(phi(Bitstring::parse("11")) == LatticePath({U, U}));
  CHECK(phi(Bitstring::parse("01")) == LatticePath({D, U}));
  CHECK(phi_inv(LatticePath({U, D})) == Bitstring::parse("10"));
  CHECK(phi_inv(LatticePath()) == Bitstring());
  CHECK(phi_inv(LatticePath({D, U})) == Bitstring::parse("01"));
}

TEST_CASE("classify") {
  CHECK(classify(P("UD")) == PathClass{PathTag::DEq0, 2, 1});
  CHECK(classify(P("UU")) == PathClass{PathTag::DGt0, 2, 2});
  CHECK(classify(P("DU")) == PathClass{PathTag::DMinus, 2, 1});
  CHECK(classify(P("DD")).tag == PathTag::None);
  CHECK(classify(P("DUDU")).tag == PathTag::None);
}

TEST_CASE("decompose") {
  auto d = decompose(P("UD"));
  CHECK(d.ell.size() == 0);
  CHECK(d.r.size() == 0);
  CHECK(d.pivot == 2);
  d = decompose(P("UUDD"));
  CHECK(d.ell == P("UD"));
  CHECK(d.r.size() == 0);
  CHECK(d.pivot == 4);
  d = decompose(P("DU"));
  CHECK(d.ell.size() == 0);
  CHECK(d.r.size() == 0);
  CHECK(d.pivot == 1);
  CHECK_THROWS_AS(decompose(P("DD")), std::invalid_argument);
}

TEST_CASE("rev_bar_path and f_alpha_path") {
  CHECK(rev_bar_path(P("UD")) == P("UD"));
  CHECK(rev_bar_path(P("UUDD")) == P("UUDD"));
  CHECK(rev_bar_path(P("UDUDDU")) == P("DUUDUD"));
  CHECK(f_alpha_path(AlphaVector::parse("", 1), P("UD")) == P("UD"));
  CHECK(f_alpha_path(AlphaVector::parse("0", 2), P("UUDD")) == P("UUDD"));
  CHECK(f_alpha_path(AlphaVector::parse("1", 2), P("UDUD")) == P("UUDD"));
}

TEST_CASE("enumerate_class examples") {
  CHECK(enumerate_class(2, 1, PathTag::DEq0) == std::vector<LatticePath>{P("UD")});
  CHECK(enumerate_class(6, 3, PathTag::DEq0).size() == 5);
  // DUDU drops to -1 twice, so it is not in the once-below class.
  CHECK(enumerate_class(4, 2, PathTag::DMinus) == std::vector<LatticePath>{P("DUUD"), P("UDDU")});
}

TEST_CASE("classify agrees with height-profile predicates") {
  for (int len = 0; len <= 12; ++len) {
    for (Word s = 0; s < (Word{1} << len); ++s) {
      const LatticePath p(s, len);
      const int lo = min_height(p);
      const PathClass c = classify(p);
      PathTag want = PathTag::None;
      if (lo == 0 && touches(p, 0) > 0) want = PathTag::DEq0;
      else if (lo == 0) want = PathTag::DGt0;
      else if (lo == -1 && touches(p, -1) == 1) want = PathTag::DMinus;
      CHECK(c.tag == want);
      if (want != PathTag::None) {
        CHECK(c.n == len);
        CHECK(c.k == p.upsteps());
      }
      CHECK(is_nonnegative(p) == (lo >= 0));
    }
  }
}

TEST_CASE("decompose and recompose are inverse") {
  for (int len = 1; len <= 12; ++len) {
    for (Word s = 0; s < (Word{1} << len); ++s) {
      const LatticePath p(s, len);
      const PathClass c = classify(p);
      if (c.tag == PathTag::None) continue;
      if (c.tag == PathTag::DGt0 && p.final_height() == 1) continue;
      if (c.tag == PathTag::DMinus && p.final_height() == -1) continue;
      const Decomposition d = decompose(p);
      CHECK(d.ell.size() + d.r.size() + 2 == len);
      CHECK(recompose(c.tag, d.ell, d.r) == p);
    }
  }
}

TEST_CASE("f_alpha maps Dyck paths to Dyck paths") {
  for (int n = 1; n <= 5; ++n) {
    const auto dyck = enumerate_class(2 * n, n, PathTag::DEq0);
    const std::set<LatticePath> dyck_set(dyck.begin(), dyck.end());
    for (Word a = 0; a < (Word{1} << (n - 1)); ++a) {
      const AlphaVector alpha(a, n);
      std::set<LatticePath> image;
      for (const auto& p : dyck) image.insert(f_alpha_path(alpha, p));
      CHECK(image == dyck_set);
    }
  }
}
