#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace cyclo {

/// Fixed-size bitset sized at runtime. Canonical representation for element
/// subsets of a group; equality and hashing are exact.
class DynBitset {
 public:
  DynBitset() = default;
  explicit DynBitset(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  std::size_t size() const { return bits_; }

  void set(std::size_t i) { words_[i >> 6] |= (1ull << (i & 63)); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(1ull << (i & 63)); }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

  std::size_t count() const {
    std::size_t n = 0;
    for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  bool none() const {
    for (std::uint64_t w : words_)
      if (w) return false;
    return true;
  }

  bool subset_of(const DynBitset& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  DynBitset& operator|=(const DynBitset& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }

  DynBitset& operator&=(const DynBitset& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }

  bool operator==(const DynBitset&) const = default;

  /// Lexicographic order on the ascending member lists; a proper prefix
  /// sorts first. Used as a deterministic tie-break between subgroups.
  static int compare_members(const DynBitset& a, const DynBitset& b) {
    std::size_t ia = a.next(0), ib = b.next(0);
    while (ia != npos && ib != npos) {
      if (ia != ib) return ia < ib ? -1 : 1;
      ia = a.next(ia + 1);
      ib = b.next(ib + 1);
    }
    if (ia == ib) return 0;
    return ia == npos ? -1 : 1;
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  /// First member index >= from, or npos.
  std::size_t next(std::size_t from) const {
    if (from >= bits_) return npos;
    std::size_t w = from >> 6;
    std::uint64_t word = words_[w] & (~0ull << (from & 63));
    while (true) {
      if (word) {
        std::size_t i = (w << 6) + static_cast<std::size_t>(std::countr_zero(word));
        return i < bits_ ? i : npos;
      }
      if (++w >= words_.size()) return npos;
      word = words_[w];
    }
  }

  std::vector<std::uint32_t> member_list() const {
    std::vector<std::uint32_t> out;
    for (std::size_t i = next(0); i != npos; i = next(i + 1))
      out.push_back(static_cast<std::uint32_t>(i));
    return out;
  }

  std::uint64_t hash64() const {
    std::uint64_t h = 14695981039346656037ull;
    for (std::uint64_t w : words_) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return h;
  }

 private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

struct DynBitsetHash {
  std::size_t operator()(const DynBitset& b) const { return static_cast<std::size_t>(b.hash64()); }
};

}  // namespace cyclo
