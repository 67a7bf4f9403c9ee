#include "hamarch/arch.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>

namespace hamarch {

namespace {

int bit_width_u128(PackedWord::Bits b) {
  auto hi = static_cast<std::uint64_t>(b >> 64);
  if (hi) return 64 + (64 - std::countl_zero(hi));
  return 64 - std::countl_zero(static_cast<std::uint64_t>(b));
}

}  // namespace

int PackedWord::size() const { return (bit_width_u128(bits) - 1) / 2; }

PackedWord pack_word(std::span<const Symbol> symbols) {
  if (symbols.size() > PackedWord::kMaxLen)
    throw Error("packed word limited to 62 symbols");
  PackedWord w;
  w.bits = 0;
  for (std::size_t i = 0; i < symbols.size(); ++i)
    w.bits |= PackedWord::Bits(symbols[i] & 3) << (2 * i);
  w.bits |= PackedWord::Bits(1) << (2 * symbols.size());
  return w;
}

std::vector<Symbol> unpack_word(PackedWord w) {
  std::vector<Symbol> out(w.size());
  for (int i = 0; i < int(out.size()); ++i) out[i] = w.at(i);
  return out;
}

std::uint64_t ArcCounter::count(PackedWord w, Pairing pairing) {
  return count_rec(w.bits, w.size(), pairing);
}

std::uint64_t ArcCounter::count_rec(PackedWord::Bits bits, int len, Pairing pairing) {
  if (len == 0) return 1;
  if (len & 1) return 0;
  // The pairing rule is folded into the key's top bit; tags behave the same
  // under both rules, so only real-real pairs differ.
  PackedWord::Bits key = bits | (PackedWord::Bits(pairing == Pairing::Uncolored) << 126);
  if (const std::uint64_t* hit = memo_.find(key)) return *hit;

  std::uint64_t total = 0;
  Symbol first = Symbol(bits & 3);
  for (int j = 1; j < len; j += 2) {
    if (!symbols_pair(first, Symbol((bits >> (2 * j)) & 3), pairing)) continue;
    // interior = symbols 1..j-1, suffix = symbols j+1..len-1
    PackedWord::Bits sentinel = PackedWord::Bits(1) << (2 * (j - 1));
    PackedWord::Bits interior = ((bits >> 2) & (sentinel - 1)) | sentinel;
    PackedWord::Bits suffix = bits >> (2 * (j + 1));
    std::uint64_t inner = count_rec(interior, j - 1, pairing);
    if (inner) total += inner * count_rec(suffix, len - j - 1, pairing);
  }
  memo_.insert(key, total);
  return total;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact: r is binom(n-k+i, i) after each step
  }
  return r;
}

BigInt catalan(int n) {
  if (n < 0) throw Error("catalan: negative index");
  static std::vector<BigInt> table = {1};
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  while (int(table.size()) <= n) {
    int m = int(table.size()) - 1;  // extend with Cat(m+1) = Cat(m)*2(2m+1)/(m+2)
    BigInt next = table.back() * 2 * (2 * m + 1);
    next /= m + 2;
    table.push_back(next);
  }
  return table[n];
}

namespace {

// Fallback for words longer than the packed limit. Exact but slow; memo is
// size-capped rather than LRU since this path only serves oversized inputs.
class WideCounter {
 public:
  BigInt count(const std::vector<Symbol>& w, Pairing pairing) {
    if (w.empty()) return 1;
    if (w.size() % 2) return 0;
    auto key = std::make_pair(w, pairing);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    BigInt total = 0;
    for (std::size_t j = 1; j < w.size(); j += 2) {
      if (!symbols_pair(w[0], w[j], pairing)) continue;
      std::vector<Symbol> interior(w.begin() + 1, w.begin() + j);
      BigInt inner = count(interior, pairing);
      if (inner != 0) {
        std::vector<Symbol> suffix(w.begin() + j + 1, w.end());
        total += inner * count(suffix, pairing);
      }
    }
    if (memo_.size() > kCap) memo_.clear();
    memo_.emplace(std::move(key), total);
    return total;
  }

 private:
  static constexpr std::size_t kCap = 1u << 20;
  std::map<std::pair<std::vector<Symbol>, Pairing>, BigInt> memo_;
};

thread_local ArcCounter tls_counter;
thread_local WideCounter tls_wide_counter;

}  // namespace

BigInt count_one_sided_word(std::span<const Symbol> word, Pairing pairing) {
  if (word.size() <= PackedWord::kMaxLen)
    return BigInt(tls_counter.count(pack_word(word), pairing));
  return tls_wide_counter.count(std::vector<Symbol>(word.begin(), word.end()), pairing);
}

BigInt count_one_sided(const ColorSeq& c) {
  std::vector<Symbol> word(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) word[i] = Symbol(c[i]);
  return count_one_sided_word(word, Pairing::Bicolored);
}

}  // namespace hamarch
