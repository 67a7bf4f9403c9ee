#include "hamarch/transfer.hpp"

#include <bit>

#include "hamarch/errors.hpp"

namespace hamarch {

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr int kMaxDepth = 31;  // per-side encoding width

enum MoveMask : unsigned {
  kOpenUp = 1,
  kOpenDown = 2,
  kCloseUp = 4,
  kCloseDown = 8,
  kUpMoves = kOpenUp | kCloseUp,
  kDownMoves = kOpenDown | kCloseDown,
  kAllMoves = kUpMoves | kDownMoves,
};

// Emits the successor states of (nu, nd) at a vertex of color c. A push is
// n -> 2n + c; the innermost arch closes only against the opposite color,
// i.e. when the low bit of n differs from c and the stack is nonempty.
template <class Emit>
void for_each_move(u64 nu, u64 nd, Color c, unsigned mask, Emit&& emit) {
  u64 bit = (c == Color::Black) ? 1 : 0;
  if (mask & kOpenUp) emit(2 * nu + bit, nd);
  if (mask & kOpenDown) emit(nu, 2 * nd + bit);
  if ((mask & kCloseUp) && nu >= 2 && (nu & 1) != bit) emit(nu >> 1, nd);
  if ((mask & kCloseDown) && nd >= 2 && (nd & 1) != bit) emit(nu, nd >> 1);
}

int depth_of(u64 n) { return std::bit_width(n) - 1; }

bool stacks_complementary(u64 nu, u64 nd) {
  int p = depth_of(nu);
  if (p != depth_of(nd)) return false;
  return (nu ^ nd) == (u64(1) << p) - 1;
}

// Fast sparse engine over packed (n_u, n_d) keys with u128 weights. Weights
// are bounded by 4^steps, so they stay exact for any line this encoding can
// hold (steps <= 62).
using FastVector = std::unordered_map<u64, u128>;

void check_budget(const FastVector& v, const TmOptions& opts) {
  if (opts.max_states && v.size() > opts.max_states)
    throw Error("transfer: state vector exceeds configured bound");
}

FastVector fast_step(const FastVector& cur, Color c, unsigned mask, const TmOptions& opts) {
  FastVector next;
  next.reserve(cur.size() * 2);
  for (const auto& [key, w] : cur) {
    u64 nu = key >> 32, nd = key & 0xffffffffull;
    for_each_move(nu, nd, c, mask, [&](u64 a, u64 b) {
      if (depth_of(a) > kMaxDepth || depth_of(b) > kMaxDepth)
        throw Error("transfer: arch stack exceeds encoding width");
      next[(a << 32) | b] += w;
    });
  }
  check_budget(next, opts);
  return next;
}

FastVector initial_vector() {
  FastVector v;
  v[(u64(1) << 32) | 1] = 1;
  return v;
}

BigInt to_bigint(u128 x) {
  BigInt hi = u64(x >> 64);
  return (hi << 64) + u64(x);
}

void guard_line(int steps) {
  // Conservative admission: every step can deepen one stack by one.
  if (steps > 2 * kMaxDepth) throw Error("transfer: line too long for the 64-bit state encoding");
}

u128 weight_at(const FastVector& v, u64 key) {
  auto it = v.find(key);
  return it == v.end() ? u128(0) : it->second;
}

// Sum of squared amplitudes; equals the full bracket when the remaining half
// line is the reverse-complement of the processed half.
BigInt sum_squares(const FastVector& v) {
  BigInt total = 0;
  for (const auto& [key, w] : v) total += to_bigint(w) * to_bigint(w);
  return total;
}

BigInt closure_sum(const FastVector& v) {
  BigInt total = 0;
  for (const auto& [key, w] : v)
    if (stacks_complementary(key >> 32, key & 0xffffffffull)) total += to_bigint(w);
  return total;
}

Color z_color(int position_1based) {
  return position_1based % 2 ? Color::Black : Color::White;
}

std::vector<BigInt> segment_prefix(int n_max, bool y_variant, const TmOptions& opts) {
  if (n_max < 0) throw Error("transfer: N below minimal");
  guard_line(2 * n_max + 2);
  std::vector<BigInt> out;
  FastVector cur = initial_vector();
  if (y_variant) {
    cur.clear();
    // Black left endpoint: both free half-edges open, one above and one below.
    cur[(u64(3) << 32) | 3] = 1;
  }
  for (int n = 0; n <= n_max; ++n) {
    if (y_variant) {
      // White right endpoint: the up half-edge acts above, then the down one
      // below; residual stubs close through the winding region.
      FastVector fin = fast_step(cur, Color::White, kUpMoves, opts);
      fin = fast_step(fin, Color::White, kDownMoves, opts);
      out.push_back(closure_sum(fin));
    } else {
      out.push_back(closure_sum(cur));
    }
    if (n < n_max) {
      // Two more interior vertices (positions 2n+2, 2n+3 on the segment).
      cur = fast_step(cur, Color::White, kAllMoves, opts);
      cur = fast_step(cur, Color::Black, kAllMoves, opts);
    }
  }
  return out;
}

BigInt tm_w(int n, const TmOptions& opts) {
  if (n < 1) throw Error("transfer: N below minimal");
  guard_line(2 * n - 2);
  // Line starts white; the black stub consumes vertex 1, the movable white
  // stub consumes one black vertex (even positions), counted over all
  // anchorings and both flips, then halved.
  BigInt raw = 0;
  for (int anchor = 2; anchor <= 2 * n; anchor += 2) {
    FastVector cur = initial_vector();
    for (int pos = 2; pos <= 2 * n; ++pos) {
      if (pos == anchor) continue;
      cur = fast_step(cur, pos % 2 ? Color::White : Color::Black, kAllMoves, opts);
    }
    raw += 2 * to_bigint(weight_at(cur, (u64(1) << 32) | 1));
  }
  if (raw % 2 != 0) throw Error("transfer: W symmetry divisor does not divide");
  return raw / 2;
}

}  // namespace

ArchState encode_state(const std::vector<Color>& upper, const std::vector<Color>& lower) {
  auto enc = [](const std::vector<Color>& stack) -> u32 {
    if (stack.size() > kMaxDepth) throw Error("encode_state: stack too deep for 32-bit side");
    u64 n = 1;
    for (std::size_t i = stack.size(); i-- > 0;) n = 2 * n + (stack[i] == Color::Black ? 1 : 0);
    return u32(n);
  };
  return ArchState{enc(upper), enc(lower)};
}

void decode_state(ArchState s, std::vector<Color>& upper, std::vector<Color>& lower) {
  auto dec = [](u64 n, std::vector<Color>& stack) {
    stack.clear();
    while (n > 1) {
      stack.push_back((n & 1) ? Color::Black : Color::White);
      n >>= 1;
    }
  };
  dec(s.n_u, upper);
  dec(s.n_d, lower);
}

StateVector step(const StateVector& v, Color vertex_color) {
  StateVector next;
  next.reserve(v.size() * 2);
  for (const auto& [s, w] : v) {
    for_each_move(s.n_u, s.n_d, vertex_color, kAllMoves, [&](u64 a, u64 b) {
      if (depth_of(a) > kMaxDepth || depth_of(b) > kMaxDepth)
        throw Error("step: arch stack exceeds encoding width");
      next[ArchState{u32(a), u32(b)}] += w;
    });
  }
  return next;
}

BigInt close_segment(const ArchState& s) {
  return stacks_complementary(s.n_u, s.n_d) ? 1 : 0;
}

std::vector<BigInt> tm_z_prefix(int n_max, const TmOptions& opts) {
  if (n_max < 1) throw Error("transfer: N below minimal");
  guard_line(n_max);  // meet-in-the-middle: only half the line is evolved
  std::vector<BigInt> out;
  FastVector cur = initial_vector();
  for (int k = 1; k <= n_max; ++k) {
    cur = fast_step(cur, z_color(k), kAllMoves, opts);
    out.push_back(sum_squares(cur));
  }
  return out;
}

std::vector<BigInt> tm_y_prefix(int n_max, const TmOptions& opts) {
  return segment_prefix(n_max, true, opts);
}

std::vector<BigInt> tm_x_prefix(int n_max, const TmOptions& opts) {
  return segment_prefix(n_max, false, opts);
}

BigInt tm_enumerate(const EnsembleSpec& spec, int n, const TmOptions& opts) {
  if (!spec.id.colored)
    throw Unsupported("transfer: only bicolored ensembles are served");
  if (n < spec.min_n) throw Error("transfer: N below minimal");
  switch (spec.id.tag) {
    case EnsembleTag::Z: return tm_z_prefix(n, opts).back();
    case EnsembleTag::Y: return tm_y_prefix(n, opts).back();
    case EnsembleTag::X: return tm_x_prefix(n, opts).back();
    case EnsembleTag::W: return tm_w(n, opts);
    case EnsembleTag::V:
    case EnsembleTag::U:
      throw Unsupported("transfer: V and U are served by the up-down engine");
  }
  throw Error("bad tag");
}

}  // namespace hamarch
