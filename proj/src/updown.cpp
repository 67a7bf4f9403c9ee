#include "hamarch/updown.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <thread>

#include "hamarch/arch.hpp"
#include "hamarch/errors.hpp"

namespace hamarch {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr int kMaxLine = 58;  // keeps every assembled word within the packed width

// Next same-popcount mask (Gosper). mask must be nonzero.
u64 next_subset(u64 mask) {
  u64 c = mask & -mask;
  u64 r = mask + c;
  return (((r ^ mask) >> 2) / c) | r;
}

// rank-th k-subset of {0..n-1} in colexicographic order, which is the
// numeric order Gosper's hack walks.
u64 unrank_subset(int n, int k, u64 rank) {
  u64 mask = 0;
  int bound = n;
  for (int i = k; i >= 1; --i) {
    int c = i - 1;
    while (c + 1 < bound && binomial(c + 1, i) <= BigInt(rank)) ++c;
    mask |= u64(1) << c;
    rank -= u64(binomial(c, i));
    bound = c;
  }
  return mask;
}

u64 subset_count(int n, int k) { return u64(binomial(n, k)); }

// One defect placement: the line with consumed positions removed, tag
// overrides applied, and anchor positions pinned to a side.
struct LineModel {
  int length = 0;
  std::array<Symbol, kMaxLine> sym{};
  u64 consumed = 0;
  u64 forced_up = 0;
  u64 forced_down = 0;
  unsigned flip_factor = 1;  // univalent-defect up/down flips
  // Segment ensembles: all stubs live on one disk boundary.
  bool combined = false;
  bool endpoint_stubs = false;  // segment endpoints contribute a stub per side
};

struct WordBuffers {
  std::array<Symbol, 64> up, down;
  int nu = 0, nd = 0;
};

// Assembles the up/down words (or the single boundary word) for a given
// up-assignment of the free positions. Both buffers read west->east; the
// down buffer is reversed where the disk boundary word is assembled.
void build_words(const LineModel& m, u64 up_mask, WordBuffers& b) {
  b.nu = b.nd = 0;
  u64 ups = up_mask | m.forced_up;
  if (m.combined && m.endpoint_stubs) {
    b.up[b.nu++] = m.sym[0];
    b.down[b.nd++] = m.sym[0];
  }
  for (int i = 0; i < m.length; ++i) {
    if (m.consumed >> i & 1) continue;
    if (ups >> i & 1)
      b.up[b.nu++] = m.sym[i];
    else
      b.down[b.nd++] = m.sym[i];
  }
  if (m.combined && m.endpoint_stubs) {
    b.up[b.nu++] = m.sym[m.length - 1];
    b.down[b.nd++] = m.sym[m.length - 1];
  }
}

u64 count_word(ArcCounter& ac, const Symbol* s, int n, Pairing p) {
  return ac.count(pack_word(std::span<const Symbol>(s, std::size_t(n))), p);
}

// Boundary word of the disk: top stubs west->east, then bottom stubs
// east->west.
u64 combined_count(ArcCounter& ac, const WordBuffers& b, Pairing p) {
  std::array<Symbol, 64> word;
  int n = 0;
  for (int i = 0; i < b.nu; ++i) word[n++] = b.up[i];
  for (int i = b.nd; i-- > 0;) word[n++] = b.down[i];
  return count_word(ac, word.data(), n, p);
}

u128 evaluate_mask(const LineModel& m, u64 up_mask, ArcCounter& ac, Pairing p) {
  WordBuffers b;
  build_words(m, up_mask, b);
  if (m.combined) return combined_count(ac, b, p);
  u64 a_up = count_word(ac, b.up.data(), b.nu, p);
  if (!a_up) return 0;
  return u128(a_up) * count_word(ac, b.down.data(), b.nd, p);
}

std::vector<int> free_positions(const LineModel& m) {
  std::vector<int> out;
  u64 pinned = m.consumed | m.forced_up | m.forced_down;
  for (int i = 0; i < m.length; ++i)
    if (!(pinned >> i & 1)) out.push_back(i);
  return out;
}

// Colored assignment sum. Independent sides need equally many free whites
// and blacks up (anything else counts zero); the disk word of a segment
// ensemble has no per-side constraint.
u128 colored_sum(const LineModel& m, ArcCounter& ac, u64 stripe, u64 nstripes) {
  std::vector<int> frees = free_positions(m);
  u128 total = 0;
  if (m.combined) {
    int f = int(frees.size());
    u64 end = u64(1) << f;
    for (u64 mask = stripe; mask < end; mask += nstripes) {
      u64 up = 0;
      for (int i = 0; i < f; ++i)
        if (mask >> i & 1) up |= u64(1) << frees[i];
      total += evaluate_mask(m, up, ac, Pairing::Bicolored);
    }
    return total;
  }
  std::vector<int> whites, blacks;
  for (int pos : frees)
    (m.sym[pos] == kSymWhite ? whites : blacks).push_back(pos);
  int nw = int(whites.size()), nb = int(blacks.size());
  for (int k = 0; k <= std::min(nw, nb); ++k) {
    u64 nwsub = subset_count(nw, k);
    u64 nbsub = subset_count(nb, k);
    u64 begin = (nwsub * stripe) / nstripes;
    u64 stop = (nwsub * (stripe + 1)) / nstripes;
    if (begin >= stop) continue;
    u64 wmask = unrank_subset(nw, k, begin);
    for (u64 wi = begin; wi < stop; ++wi) {
      u64 up_w = 0;
      for (u64 t = wmask; t; t &= t - 1)
        up_w |= u64(1) << whites[std::countr_zero(t)];
      u64 bmask = k ? (u64(1) << k) - 1 : 0;
      for (u64 bi = 0; bi < nbsub; ++bi) {
        u64 up = up_w;
        for (u64 t = bmask; t; t &= t - 1)
          up |= u64(1) << blacks[std::countr_zero(t)];
        total += evaluate_mask(m, up, ac, Pairing::Bicolored);
        if (bi + 1 < nbsub) bmask = next_subset(bmask);
      }
      if (wi + 1 < stop) wmask = k ? next_subset(wmask) : 0;
    }
  }
  return total;
}

// Uncolored assignment sum. One-sided counts depend only on the tag skeleton
// of a word, so the free stubs inside each gap between consecutive anchors
// contribute through their multiplicity alone; the sum collapses to gap
// compositions weighted by binomials. Exact reorganization of the mask sum.
u128 uncolored_sum(const LineModel& m, ArcCounter& ac) {
  std::vector<int> frees = free_positions(m);
  int f = int(frees.size());
  if (m.combined) {
    // Every real symbol reads 0, so the boundary word is assignment
    // independent: each of the 2^f assignments contributes the same count.
    u128 one = evaluate_mask(m, 0, ac, Pairing::Uncolored);
    return one << f;
  }
  struct Piece {
    int pos;      // anchor position, -1 for trailing gap
    int gap = 0;  // number of free stubs before this anchor
  };
  std::vector<Piece> pieces;
  {
    std::vector<int> anchors;
    for (int i = 0; i < m.length; ++i)
      if ((m.forced_up | m.forced_down) >> i & 1) anchors.push_back(i);
    std::size_t fi = 0;
    for (int a : anchors) {
      Piece p{a, 0};
      while (fi < frees.size() && frees[fi] < a) ++p.gap, ++fi;
      pieces.push_back(p);
    }
    pieces.push_back(Piece{-1, f - int(fi)});
  }
  int gaps = int(pieces.size());
  std::vector<int> up_in_gap(gaps, 0);
  std::array<Symbol, 64> up, down;
  u128 total = 0;
  for (;;) {
    u64 mult = 1;
    int nu = 0, nd = 0;
    for (int g = 0; g < gaps; ++g) {
      mult *= subset_count(pieces[g].gap, up_in_gap[g]);
      for (int t = 0; t < up_in_gap[g]; ++t) up[nu++] = kSymWhite;
      for (int t = 0; t < pieces[g].gap - up_in_gap[g]; ++t) down[nd++] = kSymWhite;
      if (pieces[g].pos >= 0) {
        if (m.forced_up >> pieces[g].pos & 1)
          up[nu++] = m.sym[pieces[g].pos];
        else
          down[nd++] = m.sym[pieces[g].pos];
      }
    }
    u64 a_up = count_word(ac, up.data(), nu, Pairing::Uncolored);
    if (a_up)
      total += u128(mult) * a_up * count_word(ac, down.data(), nd, Pairing::Uncolored);
    // odometer over gap compositions
    int g = 0;
    while (g < gaps && up_in_gap[g] == pieces[g].gap) up_in_gap[g++] = 0;
    if (g == gaps) break;
    ++up_in_gap[g];
  }
  return total;
}

u128 model_sum(const LineModel& m, ArcCounter& ac, bool colored, u64 stripe, u64 nstripes) {
  u128 s = colored ? colored_sum(m, ac, stripe, nstripes)
                   : (stripe == 0 ? uncolored_sum(m, ac) : 0);
  return s * m.flip_factor;
}

LineModel base_model(const EnsembleSpec& spec, int n) {
  LineModel m;
  m.length = spec.line_length(n);
  if (m.length > kMaxLine) throw Error("updown: line too long for the packed word width");
  for (int i = 0; i < m.length; ++i) {
    // Cubic words canonicalize every real color to one symbol.
    m.sym[i] = spec.id.colored ? Symbol(spec.line_color(i)) : kSymWhite;
  }
  return m;
}

bool may_host(const EnsembleSpec& spec, int pos, Color wanted) {
  return !spec.id.colored || spec.line_color(pos) == wanted;
}

std::vector<LineModel> build_models(const EnsembleSpec& spec, int n) {
  std::vector<LineModel> models;
  LineModel base = base_model(spec, n);
  switch (spec.id.tag) {
    case EnsembleTag::Z:
      models.push_back(base);
      break;
    case EnsembleTag::Y: {
      base.combined = true;
      base.endpoint_stubs = true;
      base.consumed = 1 | (u64(1) << (base.length - 1));  // handled as endpoint stubs
      models.push_back(base);
      break;
    }
    case EnsembleTag::X: {
      base.combined = true;
      base.consumed = 1 | (u64(1) << (base.length - 1));  // univalent endpoints, no stubs
      models.push_back(base);
      break;
    }
    case EnsembleTag::W: {
      // Black stub on vertex 1; the movable white stub consumes one host of
      // the opposite color, counted over both flips.
      for (int h = 1; h < base.length; ++h) {
        if (!may_host(spec, h, Color::Black)) continue;
        LineModel m = base;
        m.consumed = 1 | (u64(1) << h);
        m.flip_factor = 2;
        models.push_back(m);
      }
      break;
    }
    case EnsembleTag::V: {
      // White-white pass-through above from vertex 1; black-black
      // pass-through on either side.
      for (int j = 1; j < base.length; ++j) {
        if (!may_host(spec, j, Color::White)) continue;
        for (int k = 1; k < base.length; ++k) {
          if (k == j || !may_host(spec, k, Color::Black)) continue;
          for (int l = k + 1; l < base.length; ++l) {
            if (l == j || !may_host(spec, l, Color::Black)) continue;
            for (int side = 0; side < 2; ++side) {
              LineModel m = base;
              m.sym[0] = m.sym[j] = kSymTagA;
              m.sym[k] = m.sym[l] = kSymTagB;
              m.forced_up = 1 | (u64(1) << j);
              u64 pass = (u64(1) << k) | (u64(1) << l);
              (side == 0 ? m.forced_up : m.forced_down) |= pass;
              models.push_back(m);
            }
          }
        }
      }
      break;
    }
    case EnsembleTag::U: {
      // White-white pass-through above from vertex 1 plus two white stubs on
      // hosts of the opposite color, counted over both flips each.
      for (int j = 1; j < base.length; ++j) {
        if (!may_host(spec, j, Color::White)) continue;
        for (int k = 1; k < base.length; ++k) {
          if (k == j || !may_host(spec, k, Color::Black)) continue;
          for (int l = k + 1; l < base.length; ++l) {
            if (l == j || !may_host(spec, l, Color::Black)) continue;
            LineModel m = base;
            m.sym[0] = m.sym[j] = kSymTagA;
            m.forced_up = 1 | (u64(1) << j);
            m.consumed = (u64(1) << k) | (u64(1) << l);
            m.flip_factor = 4;
            models.push_back(m);
          }
        }
      }
      break;
    }
  }
  return models;
}

BigInt to_bigint(u128 x) {
  BigInt hi = u64(x >> 64);
  return (hi << 64) + u64(x);
}

}  // namespace

void for_each_admissible_partition(int l, const std::function<bool(const Partition&)>& fn) {
  if (l < 0 || l % 2) throw Error("admissible partitions need a nonnegative even length");
  std::vector<int> odds, evens;
  for (int i = 1; i <= l; ++i) (i % 2 ? odds : evens).push_back(i);
  int half = l / 2;
  Partition part;
  for (int k = 0; k <= half; ++k) {
    u64 on = subset_count(half, k);
    u64 omask = k ? (u64(1) << k) - 1 : 0;
    for (u64 oi = 0; oi < on; ++oi) {
      u64 emask = k ? (u64(1) << k) - 1 : 0;
      for (u64 ei = 0; ei < on; ++ei) {
        part.up_set.clear();
        part.down_set.clear();
        for (int i = 0; i < half; ++i) {
          if (omask >> i & 1)
            part.up_set.push_back(odds[i]);
          else
            part.down_set.push_back(odds[i]);
          if (emask >> i & 1)
            part.up_set.push_back(evens[i]);
          else
            part.down_set.push_back(evens[i]);
        }
        std::sort(part.up_set.begin(), part.up_set.end());
        std::sort(part.down_set.begin(), part.down_set.end());
        if (!fn(part)) return;
        if (ei + 1 < on) emask = next_subset(emask);
      }
      if (oi + 1 < on) omask = k ? next_subset(omask) : 0;
    }
  }
}

std::vector<Partition> admissible_partitions(int l) {
  std::vector<Partition> out;
  for_each_admissible_partition(l, [&](const Partition& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

BigInt ud_enumerate(const EnsembleSpec& spec, int n, const UdOptions& opts) {
  if (n < spec.min_n) throw Error("updown: N below the ensemble's minimal size");
  std::vector<LineModel> models = build_models(spec, n);
  bool colored = spec.id.colored;

  int threads = opts.threads > 0 ? opts.threads
                                 : std::max(1u, std::thread::hardware_concurrency());
  // Few models (Z, Y, X): stripe the partition stream instead.
  bool stripe_inner = models.size() < std::size_t(threads) && colored;
  u64 nstripes = stripe_inner ? u64(threads) : 1;

  std::vector<u128> partial(std::size_t(threads), 0);
  auto worker = [&](int t) {
    ArcCounter ac(opts.memo_capacity);
    u128 local = 0;
    if (stripe_inner) {
      for (const LineModel& m : models) local += model_sum(m, ac, colored, u64(t), nstripes);
    } else {
      for (std::size_t i = t; i < models.size(); i += std::size_t(threads))
        local += model_sum(models[i], ac, colored, 0, 1);
    }
    partial[std::size_t(t)] = local;
  };

  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }

  u128 raw = 0;
  for (u128 p : partial) raw += p;
  BigInt result = to_bigint(raw);
  if (result % spec.symmetry_divisor != 0)
    throw Error("updown: symmetry divisor does not divide the raw count for " + spec.name());
  return result / spec.symmetry_divisor;
}

}  // namespace hamarch
