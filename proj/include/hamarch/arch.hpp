#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hamarch/bigint.hpp"
#include "hamarch/errors.hpp"
#include "hamarch/lru_cache.hpp"

namespace hamarch {

enum class Color : std::uint8_t { White = 0, Black = 1 };

inline Color opposite(Color c) {
  return c == Color::White ? Color::Black : Color::White;
}

/// Vertex colors read along the line. Unbalanced sequences are legal inputs
/// (they count to zero).
using ColorSeq = std::vector<Color>;

/// Word symbols for the generalized one-sided counter: 0/1 are the real
/// colors, 2/3 tag the endpoints of a privileged pair that must match itself
/// (a same-color pass-through arch).
using Symbol = std::uint8_t;
inline constexpr Symbol kSymWhite = 0;
inline constexpr Symbol kSymBlack = 1;
inline constexpr Symbol kSymTagA = 2;
inline constexpr Symbol kSymTagB = 3;

/// Pairing rule for real symbols. Tagged symbols always pair only with their
/// own tag, under either rule.
enum class Pairing : std::uint8_t { Bicolored, Uncolored };

inline bool symbols_pair(Symbol a, Symbol b, Pairing p) {
  if (a >= kSymTagA || b >= kSymTagA) return a == b;
  return p == Pairing::Bicolored ? a != b : true;
}

/// A word of up to 62 symbols packed 2 bits each, LSB-first, with a sentinel
/// bit above the last symbol (the empty word is 1). Contiguous subwords are
/// bit-shift extractions, which is what makes memoized slicing cheap.
struct PackedWord {
  using Bits = unsigned __int128;
  static constexpr int kMaxLen = 62;

  Bits bits = 1;

  int size() const;
  Symbol at(int i) const { return Symbol((bits >> (2 * i)) & 3); }
  bool operator==(const PackedWord& o) const { return bits == o.bits; }
};

PackedWord pack_word(std::span<const Symbol> symbols);
std::vector<Symbol> unpack_word(PackedWord w);

/// One-sided noncrossing matching counter with a bounded per-instance memo.
/// Instances are independent; use one per worker thread.
class ArcCounter {
 public:
  static constexpr std::size_t kDefaultMemoCapacity = std::size_t(1) << 22;

  explicit ArcCounter(std::size_t memo_capacity = kDefaultMemoCapacity)
      : memo_(memo_capacity) {}

  /// Number of noncrossing perfect matchings of `w` on one side of the line
  /// in which every pair satisfies the pairing rule. Never overflows: counts
  /// for words of <= 62 symbols are bounded by Cat(31) < 2^54.
  std::uint64_t count(PackedWord w, Pairing pairing);

  std::uint64_t memo_hits() const { return memo_.hits(); }
  std::uint64_t memo_misses() const { return memo_.misses(); }
  std::size_t memo_size() const { return memo_.size(); }
  void clear() { memo_.clear(); }

 private:
  struct KeyHash {
    std::size_t operator()(PackedWord::Bits b) const {
      auto lo = static_cast<std::uint64_t>(b);
      auto hi = static_cast<std::uint64_t>(b >> 64);
      return std::size_t(lo * 0x9e3779b97f4a7c15ull ^ (hi + 0xbf58476d1ce4e5b9ull));
    }
  };

  std::uint64_t count_rec(PackedWord::Bits bits, int len, Pairing pairing);

  LruCache<PackedWord::Bits, std::uint64_t, KeyHash> memo_;
};

/// Nth Catalan number, binom(2n, n)/(n+1).
BigInt catalan(int n);

/// a(C): the number of one-sided noncrossing bicolored matchings of C.
/// Thread-safe (per-thread memo); zero for odd length or unbalanced colors.
BigInt count_one_sided(const ColorSeq& c);

/// Generalized form taking tagged symbols; uncolored mode drops the
/// bicoloring constraint on real pairs.
BigInt count_one_sided_word(std::span<const Symbol> word, Pairing pairing);

}  // namespace hamarch
