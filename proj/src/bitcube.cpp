#include "midlayer/bitcube.hpp"

#include <string>

namespace midlayer {

namespace bits {

std::string to_string(Word x, int m) {
  std::string out(static_cast<std::size_t>(m), '0');
  for (int i = 0; i < m; ++i) {
    if ((x >> i) & 1U) out[static_cast<std::size_t>(i)] = '1';
  }
  return out;
}

std::vector<Word> words_of_weight(int m, int k) {
  std::vector<Word> out;
  if (k < 0 || k > m || m > 63) return out;
  if (k == 0) return {0};
  const Word limit = Word{1} << m;
  // Gosper's hack: next larger word with the same popcount.
  for (Word w = low_mask(k); w < limit;) {
    out.push_back(w);
    const Word c = w & (~w + 1);
    const Word r = w + c;
    w = (((r ^ w) >> 2) / c) | r;
  }
  return out;
}

}  // namespace bits

namespace {

void check_length(int length) {
  if (length < 0 || length > kMaxBits) {
    throw std::invalid_argument("bitstring length out of range: " + std::to_string(length));
  }
}

Word parse_bits(std::string_view text) {
  if (text.size() > static_cast<std::size_t>(kMaxBits)) {
    throw ParseError("bitstring longer than 64 characters");
  }
  Word w = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      w |= Word{1} << i;
    } else if (text[i] != '0') {
      throw ParseError("invalid character '" + std::string(1, text[i]) + "' in bitstring");
    }
  }
  return w;
}

}  // namespace

Bitstring::Bitstring(Word word, int length) : word_(word), length_(length) {
  check_length(length);
  if ((word & ~bits::low_mask(length)) != 0) {
    throw std::invalid_argument("bitstring word has bits beyond its length");
  }
}

Bitstring Bitstring::of(std::initializer_list<int> entries) {
  check_length(static_cast<int>(entries.size()));
  Word w = 0;
  int i = 0;
  for (int e : entries) {
    if (e != 0 && e != 1) throw std::invalid_argument("bitstring entries must be 0 or 1");
    if (e) w |= Word{1} << i;
    ++i;
  }
  return Bitstring(w, i);
}

Bitstring Bitstring::parse(std::string_view text) {
  return Bitstring(parse_bits(text), static_cast<int>(text.size()));
}

bool Bitstring::at(int position) const {
  if (position < 1 || position > length_) throw std::out_of_range("bitstring position");
  return (word_ >> (position - 1)) & 1U;
}

AlphaVector::AlphaVector(Word entries, int level) : entries_(entries), level_(level) {
  if (level < 1 || 2 * level > kMaxBits) {
    throw std::invalid_argument("alpha level out of range: " + std::to_string(level));
  }
  if ((entries & ~bits::low_mask(level - 1)) != 0) {
    throw std::invalid_argument("alpha entries exceed level - 1 positions");
  }
  for (int i = 1; i < level; ++i) {
    if ((entries >> (i - 1)) & 1U) mask_ |= Word{1} << (2 * i - 1);
  }
}

AlphaVector AlphaVector::parse(std::string_view text, int level) {
  if (static_cast<int>(text.size()) != level - 1) {
    throw ParseError("alpha vector at level " + std::to_string(level) + " needs " +
                     std::to_string(level - 1) + " entries, got '" + std::string(text) + "'");
  }
  return AlphaVector(parse_bits(text), level);
}

AlphaVector AlphaVector::from_rank(std::uint64_t rank, int level) {
  const int len = level - 1;
  if (len < 64 && rank >= (std::uint64_t{1} << len)) {
    throw std::out_of_range("alpha rank out of range");
  }
  return AlphaVector(bits::reverse(rank, len), level);
}

bool AlphaVector::at(int i) const {
  if (i < 1 || i >= level_) throw std::out_of_range("alpha index");
  return (entries_ >> (i - 1)) & 1U;
}

std::uint64_t AlphaVector::rank() const { return bits::reverse(entries_, size()); }

AlphaVector AlphaVector::reversed() const {
  return AlphaVector(bits::reverse(entries_, size()), level_);
}

ParameterSequence::ParameterSequence(std::vector<AlphaVector> alphas) : alphas_(std::move(alphas)) {
  for (std::size_t i = 0; i < alphas_.size(); ++i) {
    if (alphas_[i].level() != static_cast<int>(i) + 1) {
      throw std::invalid_argument("alpha at position " + std::to_string(i + 1) +
                                  " has level " + std::to_string(alphas_[i].level()));
    }
  }
}

ParameterSequence ParameterSequence::all_zero(int n) {
  std::vector<AlphaVector> a;
  for (int i = 1; i <= n; ++i) a.push_back(AlphaVector::zeros(i));
  return ParameterSequence(std::move(a));
}

ParameterSequence ParameterSequence::parse(std::string_view text) {
  std::vector<AlphaVector> a;
  std::size_t start = 0;
  int level = 1;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view field =
        text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    a.push_back(AlphaVector::parse(field, level));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
    ++level;
  }
  return ParameterSequence(std::move(a));
}

std::uint64_t ParameterSequence::space_size(int n) {
  const int b = n * (n - 1) / 2;
  if (b >= 64) throw std::overflow_error("parameter space exceeds 2^63");
  return std::uint64_t{1} << b;
}

ParameterSequence ParameterSequence::from_index(std::uint64_t index, int n) {
  if (n < 1) throw std::invalid_argument("sequence length must be positive");
  if (index >= space_size(n)) throw std::out_of_range("sequence index out of range");
  std::vector<AlphaVector> a(static_cast<std::size_t>(n));
  for (int i = n; i >= 1; --i) {
    const int len = i - 1;
    a[static_cast<std::size_t>(i - 1)] = AlphaVector::from_rank(index & bits::low_mask(len), i);
    index >>= len;
  }
  return ParameterSequence(std::move(a));
}

std::uint64_t ParameterSequence::index() const {
  std::uint64_t idx = 0;
  for (const auto& a : alphas_) idx = (idx << a.size()) | a.rank();
  return idx;
}

ParameterSequence ParameterSequence::prefix(int levels) const {
  if (levels < 0 || levels > target_n()) throw std::out_of_range("prefix length");
  return ParameterSequence(std::vector<AlphaVector>(alphas_.begin(), alphas_.begin() + levels));
}

ParameterSequence ParameterSequence::extended(const AlphaVector& next) const {
  auto a = alphas_;
  a.push_back(next);
  return ParameterSequence(std::move(a));
}

std::string ParameterSequence::str() const {
  std::string out;
  for (std::size_t i = 0; i < alphas_.size(); ++i) {
    if (i) out += ',';
    out += alphas_[i].str();
  }
  return out;
}

int weight(const Bitstring& x) { return bits::weight(x.word()); }

Bitstring reverse_invert(const Bitstring& x) {
  return Bitstring(bits::reverse_invert(x.word(), x.length()), x.length());
}

Bitstring concat(const Bitstring& x, const Bitstring& y) {
  const int m = x.length() + y.length();
  if (m > kMaxBits) throw std::invalid_argument("concatenation exceeds 64 bits");
  return Bitstring(x.word() | (x.length() == 64 ? 0 : y.word() << x.length()), m);
}

namespace {

void check_even_length(const AlphaVector& alpha, const Bitstring& x) {
  if (x.length() != 2 * alpha.level()) {
    throw std::invalid_argument("bitstring length " + std::to_string(x.length()) +
                                " does not match alpha level " + std::to_string(alpha.level()));
  }
}

}  // namespace

Bitstring pi_alpha(const AlphaVector& alpha, const Bitstring& x) {
  check_even_length(alpha, x);
  return Bitstring(bits::swap_pairs(x.word(), alpha.swap_mask()), x.length());
}

Bitstring f_alpha(const AlphaVector& alpha, const Bitstring& x) {
  check_even_length(alpha, x);
  return Bitstring(bits::f_map(x.word(), alpha.swap_mask(), x.length()), x.length());
}

Bitstring tau_alpha(const AlphaVector& alpha_prime, const Bitstring& x) {
  const int m = 2 * alpha_prime.level();
  if (x.length() != m + 1) {
    throw std::invalid_argument("tau expects length 2n+1 for alpha level n");
  }
  const Word head = bits::f_map(x.word() & bits::low_mask(m), alpha_prime.swap_mask(), m);
  const Word tail = (~x.word() >> m) & 1U;
  return Bitstring(head | (tail << m), m + 1);
}

bool is_adjacent(const Bitstring& u, const Bitstring& v) {
  if (u.length() != v.length()) throw std::invalid_argument("adjacency of different lengths");
  return std::popcount(u.word() ^ v.word()) == 1;
}

}  // namespace midlayer
