#ifndef MIDLAYER_WORD_INDEX_HPP
#define MIDLAYER_WORD_INDEX_HPP

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "midlayer/bitcube.hpp"

namespace midlayer {

/// Read-only map from distinct words of a fixed bit length to their position
/// in the input. Dense table for short words, hash map otherwise.
class WordIndex {
 public:
  static constexpr int kDenseBits = 22;
  static constexpr std::int32_t kMissing = -1;

  WordIndex() = default;
  WordIndex(std::span<const Word> keys, int bit_length) : dense_(bit_length <= kDenseBits) {
    if (dense_) {
      table_.assign(std::size_t{1} << bit_length, kMissing);
      for (std::size_t i = 0; i < keys.size(); ++i) table_[keys[i]] = static_cast<std::int32_t>(i);
    } else {
      map_.reserve(keys.size() * 2);
      for (std::size_t i = 0; i < keys.size(); ++i) map_.emplace(keys[i], static_cast<std::int32_t>(i));
    }
  }

  std::int32_t find(Word key) const {
    if (dense_) return key < table_.size() ? table_[key] : kMissing;
    auto it = map_.find(key);
    return it == map_.end() ? kMissing : it->second;
  }

 private:
  bool dense_ = true;
  std::vector<std::int32_t> table_;
  std::unordered_map<Word, std::int32_t> map_;
};

}  // namespace midlayer

#endif  // MIDLAYER_WORD_INDEX_HPP
