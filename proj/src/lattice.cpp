#include "midlayer/lattice.hpp"

#include <algorithm>

namespace midlayer {

LatticePath::LatticePath(Word steps, int length) : steps_(steps), length_(length) {
  if (length < 0 || length > kMaxBits) throw std::invalid_argument("lattice path length out of range");
  if ((steps & ~bits::low_mask(length)) != 0) {
    throw std::invalid_argument("lattice path has steps beyond its length");
  }
}

LatticePath::LatticePath(std::initializer_list<Step> steps) {
  if (steps.size() > static_cast<std::size_t>(kMaxBits)) {
    throw std::invalid_argument("lattice path length out of range");
  }
  for (Step s : steps) {
    if (s == Step::Up) steps_ |= Word{1} << length_;
    ++length_;
  }
}

LatticePath LatticePath::parse(std::string_view text) {
  if (text.size() > static_cast<std::size_t>(kMaxBits)) throw ParseError("lattice path too long");
  Word w = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == 'U') {
      w |= Word{1} << i;
    } else if (text[i] != 'D') {
      throw ParseError("invalid step '" + std::string(1, text[i]) + "' (expected U or D)");
    }
  }
  return LatticePath(w, static_cast<int>(text.size()));
}

Step LatticePath::step(int j) const {
  if (j < 1 || j > length_) throw std::out_of_range("lattice path step index");
  return ((steps_ >> (j - 1)) & 1U) ? Step::Up : Step::Down;
}

int LatticePath::height(int x) const {
  if (x < 0 || x > length_) throw std::out_of_range("lattice path abscissa");
  const int ups = bits::weight(steps_ & bits::low_mask(x));
  return 2 * ups - x;
}

std::vector<int> LatticePath::heights() const {
  std::vector<int> h(static_cast<std::size_t>(length_) + 1, 0);
  for (int j = 1; j <= length_; ++j) {
    h[static_cast<std::size_t>(j)] = h[static_cast<std::size_t>(j - 1)] + (((steps_ >> (j - 1)) & 1U) ? 1 : -1);
  }
  return h;
}

LatticePath LatticePath::subpath(int from, int to) const {
  if (from < 0 || to > length_ || from > to) throw std::out_of_range("lattice subpath range");
  const int len = to - from;
  return LatticePath((steps_ >> from) & bits::low_mask(len), len);
}

LatticePath LatticePath::then(const LatticePath& q) const {
  const int m = length_ + q.length_;
  if (m > kMaxBits) throw std::invalid_argument("lattice path concatenation exceeds 64 steps");
  return LatticePath(steps_ | (length_ == 64 ? 0 : q.steps_ << length_), m);
}

std::string LatticePath::str() const {
  std::string out(static_cast<std::size_t>(length_), 'D');
  for (int i = 0; i < length_; ++i) {
    if ((steps_ >> i) & 1U) out[static_cast<std::size_t>(i)] = 'U';
  }
  return out;
}

std::string_view to_string(PathTag tag) {
  switch (tag) {
    case PathTag::DEq0: return "D_EQ0";
    case PathTag::DGt0: return "D_GT0";
    case PathTag::DMinus: return "D_MINUS";
    case PathTag::None: return "NONE";
  }
  return "?";
}

LatticePath phi(const Bitstring& x) { return LatticePath(x.word(), x.length()); }

Bitstring phi_inv(const LatticePath& p) { return Bitstring(p.steps(), p.size()); }

PathClass classify(const LatticePath& p) {
  PathClass c{PathTag::None, p.size(), p.upsteps()};
  int h = 0;
  int min_h = 0;
  int zero_touches = 0;
  int minus_one_touches = 0;
  for (int j = 0; j < p.size(); ++j) {
    h += ((p.steps() >> j) & 1U) ? 1 : -1;
    min_h = std::min(min_h, h);
    if (h == 0) ++zero_touches;
    if (h == -1) ++minus_one_touches;
  }
  if (min_h >= 0) {
    c.tag = zero_touches > 0 ? PathTag::DEq0 : PathTag::DGt0;
  } else if (min_h == -1 && minus_one_touches == 1) {
    c.tag = PathTag::DMinus;
  }
  return c;
}

Decomposition decompose(const LatticePath& p) {
  const PathClass c = classify(p);
  const std::vector<int> h = p.heights();
  const int n = p.size();
  Decomposition d;
  switch (c.tag) {
    case PathTag::DEq0: {
      int x = 1;
      while (h[static_cast<std::size_t>(x)] != 0) ++x;
      d.pivot = x;
      d.ell = p.subpath(1, x - 1);
      d.r = p.subpath(x, n);
      break;
    }
    case PathTag::DGt0: {
      int x = -1;
      for (int j = n; j >= 0; --j) {
        if (h[static_cast<std::size_t>(j)] == 1) {
          x = j;
          break;
        }
      }
      if (x < 1 || x == n) throw std::invalid_argument("D_GT0 path " + p.str() + " has no step after its last visit to y=1");
      d.pivot = x;
      d.ell = p.subpath(1, x);
      d.r = p.subpath(x + 1, n);
      break;
    }
    case PathTag::DMinus: {
      int x = 1;
      while (h[static_cast<std::size_t>(x)] != -1) ++x;
      if (x == n) throw std::invalid_argument("D_MINUS path " + p.str() + " ends at y=-1");
      d.pivot = x;
      d.ell = p.subpath(0, x - 1);
      d.r = p.subpath(x + 1, n);
      break;
    }
    case PathTag::None:
      throw std::invalid_argument("cannot decompose unclassified path " + p.str());
  }
  return d;
}

LatticePath recompose(PathTag tag, const LatticePath& ell, const LatticePath& r) {
  const LatticePath up{Step::Up};
  const LatticePath down{Step::Down};
  switch (tag) {
    case PathTag::DEq0: return up.then(ell).then(down).then(r);
    case PathTag::DGt0: return up.then(ell).then(up).then(r);
    case PathTag::DMinus: return ell.then(LatticePath{Step::Down, Step::Up}).then(r);
    case PathTag::None: break;
  }
  throw std::invalid_argument("cannot recompose an unclassified path");
}

LatticePath rev_bar_path(const LatticePath& p) { return phi(reverse_invert(phi_inv(p))); }

LatticePath f_alpha_path(const AlphaVector& alpha, const LatticePath& p) {
  return phi(f_alpha(alpha, phi_inv(p)));
}

bool is_nonnegative(const LatticePath& p) {
  int h = 0;
  for (int j = 0; j < p.size(); ++j) {
    h += ((p.steps() >> j) & 1U) ? 1 : -1;
    if (h < 0) return false;
  }
  return true;
}

std::vector<LatticePath> enumerate_class(int n, int k, PathTag tag) {
  if (n < 0 || n > kMaxEnumerationLength) {
    throw std::invalid_argument("enumerate_class supports lengths 0.." + std::to_string(kMaxEnumerationLength));
  }
  std::vector<LatticePath> out;
  if (k < 0 || k > n) return out;
  const Word limit = Word{1} << n;
  for (Word w = 0; w < limit; ++w) {
    if (bits::weight(w) != k) continue;
    const LatticePath p(w, n);
    if (classify(p).tag == tag) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace midlayer
