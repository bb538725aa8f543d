#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace znspec {

// Fixed-universe dynamic bitset. Used both for element sets of submodules and
// for subsets of spectrum points / lattice members.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t nbits)
      : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  std::size_t universe() const { return nbits_; }

  void set(std::size_t i) {
    assert(i < nbits_);
    words_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }
  void reset(std::size_t i) {
    assert(i < nbits_);
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }
  bool test(std::size_t i) const {
    assert(i < nbits_);
    return (words_[i >> 6] >> (i & 63)) & 1;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  Bitset& operator|=(const Bitset& o) {
    assert(nbits_ == o.nbits_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    assert(nbits_ == o.nbits_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Bitset& and_not(const Bitset& o) {
    assert(nbits_ == o.nbits_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

  bool operator==(const Bitset& o) const {
    return nbits_ == o.nbits_ && words_ == o.words_;
  }
  bool operator!=(const Bitset& o) const { return !(*this == o); }

  bool is_subset_of(const Bitset& o) const {
    assert(nbits_ == o.nbits_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  bool intersects(const Bitset& o) const {
    assert(nbits_ == o.nbits_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  // First set bit at position >= from, or npos.
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t next(std::size_t from = 0) const {
    if (from >= nbits_) return npos;
    std::size_t w = from >> 6;
    std::uint64_t cur = words_[w] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (cur) return (w << 6) + static_cast<std::size_t>(std::countr_zero(cur));
      if (++w == words_.size()) return npos;
      cur = words_[w];
    }
  }
  std::size_t last() const {
    for (std::size_t w = words_.size(); w-- > 0;)
      if (words_[w]) return (w << 6) + 63 - static_cast<std::size_t>(std::countl_zero(words_[w]));
    return npos;
  }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t cur = words_[w];
      while (cur) {
        fn((w << 6) + static_cast<std::size_t>(std::countr_zero(cur)));
        cur &= cur - 1;
      }
    }
  }

  std::vector<std::uint32_t> to_list() const {
    std::vector<std::uint32_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(static_cast<std::uint32_t>(i)); });
    return out;
  }

  // Lexicographic order on the sorted lists of set positions: at the lowest
  // position where the sets differ, the one that contains it comes first.
  bool list_lex_less(const Bitset& o) const {
    assert(nbits_ == o.nbits_);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t diff = words_[i] ^ o.words_[i];
      if (diff) {
        std::uint64_t low = diff & (~diff + 1);
        return (words_[i] & low) != 0;
      }
    }
    return false;
  }

  // (a & b) == c, without allocating.
  static bool and_equals(const Bitset& a, const Bitset& b, const Bitset& c) {
    assert(a.nbits_ == b.nbits_ && a.nbits_ == c.nbits_);
    for (std::size_t w = 0; w < a.words_.size(); ++w)
      if ((a.words_[w] & b.words_[w]) != c.words_[w]) return false;
    return true;
  }

  // First/last position set in both a and b, without allocating.
  static std::size_t first_common(const Bitset& a, const Bitset& b) {
    assert(a.nbits_ == b.nbits_);
    for (std::size_t w = 0; w < a.words_.size(); ++w) {
      std::uint64_t both = a.words_[w] & b.words_[w];
      if (both) return (w << 6) + static_cast<std::size_t>(std::countr_zero(both));
    }
    return npos;
  }
  static std::size_t last_common(const Bitset& a, const Bitset& b) {
    assert(a.nbits_ == b.nbits_);
    for (std::size_t w = a.words_.size(); w-- > 0;) {
      std::uint64_t both = a.words_[w] & b.words_[w];
      if (both) return (w << 6) + 63 - static_cast<std::size_t>(std::countl_zero(both));
    }
    return npos;
  }

  std::size_t hash() const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (auto w : words_) {
      h ^= w;
      h *= 0x100000001b3ULL;
    }
    return static_cast<std::size_t>(h ^ nbits_);
  }

 private:
  std::size_t nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

// Canonical order used throughout: cardinality first, then the lexicographic
// order of sorted member lists. Deterministic for any platform.
inline bool canonical_less(const Bitset& a, const Bitset& b) {
  std::size_t ca = a.count(), cb = b.count();
  if (ca != cb) return ca < cb;
  return a.list_lex_less(b);
}

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace znspec
